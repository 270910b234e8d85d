#include "minimal_roots.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace coxlab {

namespace {

constexpr long double kTol = 1e-9L;

std::vector<long long> key_of(const long double* v, std::size_t n) {
  std::vector<long long> k(n);
  for (std::size_t i = 0; i < n; ++i) {
    k[i] = std::llround(std::ldexp(v[i], 40));
  }
  return k;
}

}  // namespace

MinimalRoots::MinimalRoots(std::size_t rank, const std::vector<long double>& form)
    : rank_(rank) {
  const std::size_t n = rank_;
  // B(alpha_s, beta)
  auto pairing = [&](Generator s, const long double* beta) {
    long double b = 0.0L;
    for (std::size_t j = 0; j < n; ++j) {
      b += form[s * n + j] * beta[j];
    }
    return b / 2.0L;
  };

  std::map<std::vector<long long>, std::uint32_t> index;
  auto add = [&](const std::vector<long double>& v) {
    auto [it, fresh] = index.emplace(key_of(v.data(), n), static_cast<std::uint32_t>(size()));
    if (fresh) {
      roots_.insert(roots_.end(), v.begin(), v.end());
    }
    return fresh;
  };

  // Minimal roots are the closure of the simple roots under s when
  // -1 < B(alpha_s, beta) < 0.
  std::deque<std::uint32_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long double> e(n, 0.0L);
    e[i] = 1.0L;
    add(e);
    queue.push_back(static_cast<std::uint32_t>(i));
  }
  while (!queue.empty()) {
    const std::uint32_t r = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<long double> beta(roots_.begin() + static_cast<std::ptrdiff_t>(r * n),
                                    roots_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
      const long double b = pairing(static_cast<Generator>(s), beta.data());
      if (b <= -1.0L + kTol || b >= -kTol) {
        continue;
      }
      beta[s] -= 2.0L * b;
      if (add(beta)) {
        queue.push_back(static_cast<std::uint32_t>(size() - 1));
      }
    }
  }

  table_.assign(size() * n, kOutside);
  for (std::size_t r = 0; r < size(); ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      std::int32_t& cell = table_[r * n + s];
      if (r == s) {
        cell = kNegative;
        continue;
      }
      std::vector<long double> beta(roots_.begin() + static_cast<std::ptrdiff_t>(r * n),
                                    roots_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n));
      const long double b = pairing(static_cast<Generator>(s), beta.data());
      if (std::fabs(b) < kTol) {
        cell = static_cast<std::int32_t>(r);
        continue;
      }
      beta[s] -= 2.0L * b;
      if (auto it = index.find(key_of(beta.data(), n)); it != index.end()) {
        cell = static_cast<std::int32_t>(it->second);
      }
    }
  }
}

bool MinimalRoots::is_descent(const State& st, Generator s) const {
  return std::binary_search(st.begin(), st.end(), static_cast<std::uint32_t>(s));
}

MinimalRoots::State MinimalRoots::append(const State& st, Generator s) const {
  State next{static_cast<std::uint32_t>(s)};
  for (std::uint32_t r : st) {
    const std::int32_t t = table_[r * rank_ + s];
    if (t >= 0) {
      next.push_back(static_cast<std::uint32_t>(t));
    }
  }
  std::sort(next.begin(), next.end());
  return next;
}

MinimalRoots::State MinimalRoots::scan(const Word& w) const {
  State st;
  for (Generator s : w) {
    st = append(st, s);
  }
  return st;
}

}  // namespace coxlab
