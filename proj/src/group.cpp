#include "coxlab/group.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <deque>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <unordered_set>

#include "coxlab/braid_moves.hpp"
#include "coxlab/error.hpp"
#include "minimal_roots.hpp"

namespace coxlab {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ULL;
  for (Generator g : w) {
    h ^= static_cast<std::size_t>(g) + 1;
    h *= 1099511628211ULL;
  }
  return h;
}

Word alternating_word(GenPair pair, std::size_t m) {
  Word w(m);
  for (std::size_t i = 0; i < m; ++i) {
    w[i] = (i % 2 == 0) ? pair.s : pair.t;
  }
  return w;
}

std::vector<BraidMove> braid_moves(const Word& word, const CoxeterMatrix& matrix) {
  std::vector<BraidMove> moves;
  for_each_braid_move(word, matrix, [&](std::size_t p, GenPair pair, std::size_t m) {
    Word result = word;
    apply_braid_move(result, p, pair, m);
    moves.push_back({p, pair, std::move(result)});
  });
  return moves;
}

RhoWord reversal(const RhoWord& r) {
  RhoWord out{r.entries, r.v, r.u, r.m};
  std::reverse(out.entries.begin(), out.entries.end());
  return out;
}

namespace {

// Infinite groups reduce long input in pieces so the matrices stay small.
constexpr std::size_t kChunk = 12;

}  // namespace

CoxeterGroup::CoxeterGroup(CoxeterMatrix matrix)
    : matrix_(std::move(matrix)), finite_(finite_type(matrix_)) {
  const std::size_t n = rank();
  form_.assign(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned m = matrix_(i, j);
      if (m == kInfinity) {
        form_[i * n + j] = -2.0L;
      } else if (m <= 3) {
        form_[i * n + j] = m == 1 ? 2.0L : m == 2 ? 0.0L : -1.0L;
      } else {
        form_[i * n + j] = -2.0L * std::cos(std::numbers::pi_v<long double> / m);
      }
    }
  }
}

CoxeterGroup::~CoxeterGroup() = default;

void CoxeterGroup::check_word(const Word& w) const {
  for (Generator g : w) {
    if (g >= rank()) {
      throw Error(Errc::InvalidLetter,
                  "letter " + std::to_string(static_cast<unsigned>(g) + 1)
                      + " is out of range for rank " + std::to_string(rank()));
    }
  }
}

Element CoxeterGroup::generator(Generator s) const {
  check_word(Word{s});
  return Element(Word{s});
}

// m <- m * sigma_s, where sigma_s(e_j) = e_j - form(s, j) e_s.
void CoxeterGroup::right_apply(Matrix& m, Generator s) const {
  const std::size_t        n = rank();
  std::vector<long double> col(n);
  for (std::size_t i = 0; i < n; ++i) {
    col[i] = m.a[i * n + s];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const long double f = form_[s * n + j];
    if (f == 0.0L) {
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      long double& x = m.a[i * n + j];
      x -= f * col[i];
      m.peak = std::max(m.peak, std::fabs(x));
    }
  }
  ++m.ops;
}

CoxeterGroup::Matrix CoxeterGroup::word_matrix(const Word& w, bool reversed) const {
  const std::size_t n = rank();
  Matrix            m;
  m.a.assign(n * n, 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    m.a[i * n + i] = 1.0L;
  }
  if (reversed) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      right_apply(m, *it);
    }
  } else {
    for (Generator g : w) {
      right_apply(m, g);
    }
  }
  return m;
}

// Nonzero root coefficients are at least 1 in absolute value, so signs are
// safe while the accumulated error stays well under 1/2. Errors made early
// can be stretched by later reflections, hence the squared peak.
bool CoxeterGroup::reliable(const Matrix& m) const {
  const long double eps = std::numeric_limits<long double>::epsilon();
  const long double n   = static_cast<long double>(rank());
  return 8.0L * n * static_cast<long double>(m.ops + 1) * m.peak * m.peak * eps < 0.25L;
}

std::uint64_t CoxeterGroup::negative_columns(const Matrix& m) const {
  // A column is a root, so its coefficients share a sign; read it off the
  // largest one.
  const std::size_t n    = rank();
  std::uint64_t     mask = 0;
  for (std::size_t j = 0; j < n; ++j) {
    long double best = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      const long double x = m.a[i * n + j];
      if (std::fabs(x) > std::fabs(best)) {
        best = x;
      }
    }
    if (best < 0.0L) {
      mask |= std::uint64_t{1} << j;
    }
  }
  return mask;
}

// ShortLex normal form: peel off the least left descent until none is left.
// m holds the matrix of the remaining element's inverse.
std::optional<Word> CoxeterGroup::numeric_normal_form(const Word& w) const {
  Matrix m = word_matrix(w, true);
  Word   canonical;
  for (;;) {
    if (!reliable(m)) {
      return std::nullopt;
    }
    const std::uint64_t desc = negative_columns(m);
    if (desc == 0) {
      break;
    }
    if (canonical.size() == w.size()) {
      return std::nullopt;
    }
    const auto s = static_cast<Generator>(std::countr_zero(desc));
    canonical.push_back(s);
    right_apply(m, s);
  }
  return canonical;
}

const MinimalRoots& CoxeterGroup::minimal_roots() const {
  std::call_once(roots_once_, [&] { roots_ = std::make_unique<MinimalRoots>(rank(), form_); });
  return *roots_;
}

// Exact and slower. First make the word reduced letter by letter, deleting
// a letter whenever the next one is a right descent, then peel off least
// left descents. Both deletions are located by binary search, since having
// s as a descent is inherited by longer suffixes (prefixes on the left).
Word CoxeterGroup::exact_normal_form(const Word& w) const {
  const MinimalRoots& roots = minimal_roots();

  Word               u;
  MinimalRoots::State st;
  for (Generator s : w) {
    if (!roots.is_descent(st, s)) {
      u.push_back(s);
      st = roots.append(st, s);
      continue;
    }
    // Largest k with s a right descent of u[k..].
    std::size_t lo = 0, hi = u.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (roots.is_descent(roots.scan(Word(u.begin() + static_cast<std::ptrdiff_t>(mid), u.end())), s)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    u.erase(u.begin() + static_cast<std::ptrdiff_t>(lo));
    st = roots.scan(u);
  }

  Word canonical;
  while (!u.empty()) {
    const Word rev(u.rbegin(), u.rend());
    const auto left = roots.scan(rev);
    Generator  s    = 0;
    while (!roots.is_descent(left, s)) {
      ++s;
    }
    // Least k with s a left descent of u[..k].
    std::size_t lo = 0, hi = u.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (roots.is_descent(roots.scan(Word(rev.end() - static_cast<std::ptrdiff_t>(mid + 1), rev.end())), s)) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    canonical.push_back(s);
    u.erase(u.begin() + static_cast<std::ptrdiff_t>(lo));
  }
  return canonical;
}

Word CoxeterGroup::normal_form(const Word& w) const {
  if (auto nf = numeric_normal_form(w)) {
    return std::move(*nf);
  }
  return exact_normal_form(w);
}

Element CoxeterGroup::reduce(const Word& w) const {
  check_word(w);
  if (w.size() <= 1) {
    return Element(w);
  }
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(w); it != cache_.end()) {
      return Element(it->second);
    }
  }
  Word canonical;
  if (finite_ || w.size() <= kChunk) {
    canonical = normal_form(w);
  } else {
    for (std::size_t i = 0; i < w.size(); i += kChunk) {
      const std::size_t end = std::min(w.size(), i + kChunk);
      canonical.insert(canonical.end(), w.begin() + static_cast<std::ptrdiff_t>(i),
                       w.begin() + static_cast<std::ptrdiff_t>(end));
      auto nf = numeric_normal_form(canonical);
      if (!nf) {
        canonical.insert(canonical.end(), w.begin() + static_cast<std::ptrdiff_t>(end), w.end());
        canonical = exact_normal_form(canonical);
        break;
      }
      canonical = std::move(*nf);
    }
  }
  {
    std::unique_lock lock(mutex_);
    if (cache_.size() >= kCacheLimit) {
      cache_.clear();
    }
    cache_.emplace(w, canonical);
  }
  return Element(std::move(canonical));
}

Element CoxeterGroup::reduce_exact(const Word& w) const {
  check_word(w);
  return Element(exact_normal_form(w));
}

Element CoxeterGroup::multiply(const Element& a, Generator s) const {
  Word w = a.word();
  w.push_back(s);
  return reduce(w);
}

Element CoxeterGroup::left_multiply(Generator s, const Element& a) const {
  Word w;
  w.reserve(a.length() + 1);
  w.push_back(s);
  w.insert(w.end(), a.word().begin(), a.word().end());
  return reduce(w);
}

Element CoxeterGroup::multiply(const Element& a, const Element& b) const {
  Word w = a.word();
  w.insert(w.end(), b.word().begin(), b.word().end());
  return reduce(w);
}

Element CoxeterGroup::inverse(const Element& a) const {
  return reduce(Word(a.word().rbegin(), a.word().rend()));
}

Element CoxeterGroup::conjugate(const Element& q, const Element& x) const {
  Word w = q.word();
  w.insert(w.end(), x.word().begin(), x.word().end());
  w.insert(w.end(), q.word().rbegin(), q.word().rend());
  return reduce(w);
}

Element CoxeterGroup::power(const Element& a, std::size_t k) const {
  Element e;
  for (std::size_t i = 0; i < k; ++i) {
    e = multiply(e, a);
  }
  return e;
}

std::uint64_t CoxeterGroup::right_descents(const Element& a) const {
  const Matrix m = word_matrix(a.word(), false);
  if (reliable(m)) {
    return negative_columns(m);
  }
  const auto    st   = minimal_roots().scan(a.word());
  std::uint64_t mask = 0;
  for (std::size_t s = 0; s < rank(); ++s) {
    if (minimal_roots().is_descent(st, static_cast<Generator>(s))) {
      mask |= std::uint64_t{1} << s;
    }
  }
  return mask;
}

std::uint64_t CoxeterGroup::left_descents(const Element& a) const {
  const Matrix m = word_matrix(a.word(), true);
  if (reliable(m)) {
    return negative_columns(m);
  }
  const auto    st   = minimal_roots().scan(Word(a.word().rbegin(), a.word().rend()));
  std::uint64_t mask = 0;
  for (std::size_t s = 0; s < rank(); ++s) {
    if (minimal_roots().is_descent(st, static_cast<Generator>(s))) {
      mask |= std::uint64_t{1} << s;
    }
  }
  return mask;
}

Reflection CoxeterGroup::simple_reflection(Generator s) const {
  return Reflection(generator(s));
}

Reflection CoxeterGroup::conjugate(const Element& q, const Reflection& r) const {
  return Reflection(conjugate(q, r.element()));
}

Reflection CoxeterGroup::conjugate_by_generator(Generator s, const Reflection& r) const {
  Word w{s};
  w.insert(w.end(), r.word().begin(), r.word().end());
  w.push_back(s);
  return Reflection(reduce(w));
}

std::optional<unsigned> CoxeterGroup::order_of_product(const Element& u,
                                                       const Element& v,
                                                       unsigned cap) const {
  const Element x = multiply(u, v);
  Element       p = x;
  for (unsigned m = 1; m <= cap; ++m) {
    if (p.is_identity()) {
      return m;
    }
    p = multiply(p, x);
  }
  return std::nullopt;
}

std::vector<long double> CoxeterGroup::root(const Reflection& r) const {
  // r = t1 ... tk s tk ... t1 with each ti a left descent, so the root is
  // t1 ... tk (alpha_s) and every step only adds positive multiples.
  Word    ts;
  Element x = r.element();
  while (x.length() > 1) {
    const auto t    = static_cast<Generator>(std::countr_zero(left_descents(x)));
    Element    next = conjugate_by_generator(t, Reflection(x)).element();
    if (next.length() + 2 != x.length()) {
      throw Error(Errc::Internal, "element is not a reflection");
    }
    ts.push_back(t);
    x = std::move(next);
  }
  const std::size_t        n = rank();
  std::vector<long double> v(n, 0.0L);
  v[x.word().at(0)] = 1.0L;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    long double b = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      b += form_[*it * n + j] * v[j];
    }
    v[*it] -= b;
  }
  return v;
}

std::optional<unsigned> CoxeterGroup::order_of_product(const Reflection& u,
                                                       const Reflection& v,
                                                       unsigned cap) const {
  if (u == v) {
    return cap >= 1 ? std::optional<unsigned>(1) : std::nullopt;
  }
  // <u, v> is infinite exactly when |B(beta, gamma)| >= 1.
  const auto        beta  = root(u);
  const auto        gamma = root(v);
  const std::size_t n     = rank();
  long double       b = 0.0L, scale = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b += beta[i] * form_[i * n + j] * gamma[j];
      scale += std::fabs(beta[i] * form_[i * n + j] * gamma[j]);
    }
  }
  b /= 2.0L;
  const long double err = 64.0L * static_cast<long double>(n) * scale
                          * std::numeric_limits<long double>::epsilon();
  if (err < 1e-12L && std::fabs(b) >= 1.0L - 1e-10L && cap < 10000) {
    return std::nullopt;
  }
  return order_of_product(u.element(), v.element(), cap);
}

RhoWord CoxeterGroup::rho(const Reflection& u, const Reflection& v,
                          unsigned cap) const {
  const auto m = order_of_product(u, v, cap);
  if (!m) {
    throw Error(Errc::CapExceeded,
                "order of product exceeds cap " + std::to_string(cap));
  }
  const Element uv = multiply(u.element(), v.element());
  RhoWord       r{{}, u, v, *m};
  r.entries.reserve(*m);
  Element entry = u.element();
  for (unsigned i = 0; i < *m; ++i) {
    r.entries.push_back(Reflection(entry));
    entry = multiply(uv, entry);
  }
  return r;
}

std::vector<Word> CoxeterGroup::reduced_words(const Element& a) const {
  std::unordered_set<Word, WordHash> seen{a.word()};
  std::deque<Word>                   queue{a.word()};
  std::vector<Word>                  out;
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for_each_braid_move(w, matrix_, [&](std::size_t p, GenPair pair, std::size_t m) {
      Word next = w;
      apply_braid_move(next, p, pair, m);
      if (seen.insert(next).second) {
        queue.push_back(std::move(next));
      }
    });
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> CoxeterGroup::enumerate(std::optional<std::size_t> max_length,
                                             std::size_t cap) const {
  std::vector<Element> all{identity()};
  std::vector<Element> level{identity()};
  for (std::size_t len = 0; !level.empty(); ++len) {
    if (max_length && len >= *max_length) {
      break;
    }
    std::unordered_set<Element, ElementHash> next_set;
    for (const Element& e : level) {
      const std::uint64_t desc = right_descents(e);
      for (std::size_t s = 0; s < rank(); ++s) {
        if (desc >> s & 1U) {
          continue;
        }
        next_set.insert(multiply(e, static_cast<Generator>(s)));
      }
    }
    level.assign(next_set.begin(), next_set.end());
    std::sort(level.begin(), level.end());
    all.insert(all.end(), level.begin(), level.end());
    if (all.size() > cap) {
      throw Error(Errc::ElementCapExceeded,
                  "group enumeration exceeded " + std::to_string(cap) + " elements");
    }
  }
  return all;
}

}  // namespace coxlab
