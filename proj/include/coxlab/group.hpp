#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

class CoxeterGroup;

// A group element, held as its ShortLex-least reduced expression. Elements
// are only minted by a CoxeterGroup, so equality of canonical words is
// equality in W.
class Element {
 public:
  Element() = default;  // identity

  const Word& word() const noexcept { return canonical_; }
  std::size_t length() const noexcept { return canonical_.size(); }
  bool        is_identity() const noexcept { return canonical_.empty(); }

  friend bool operator==(const Element&, const Element&) = default;

  // ShortLex.
  friend bool operator<(const Element& a, const Element& b) noexcept {
    if (a.canonical_.size() != b.canonical_.size()) {
      return a.canonical_.size() < b.canonical_.size();
    }
    return a.canonical_ < b.canonical_;
  }

 private:
  friend class CoxeterGroup;
  explicit Element(Word canonical) : canonical_(std::move(canonical)) {}

  Word canonical_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    return WordHash{}(e.word());
  }
};

// A conjugate q s q^-1 of a generator.
class Reflection {
 public:
  const Element& element() const noexcept { return element_; }
  const Word&    word() const noexcept { return element_.word(); }

  friend bool operator==(const Reflection&, const Reflection&) = default;
  friend bool operator<(const Reflection& a, const Reflection& b) noexcept {
    return a.element_ < b.element_;
  }

 private:
  friend class CoxeterGroup;
  explicit Reflection(Element e) : element_(std::move(e)) {}

  Element element_;
};

struct ReflectionHash {
  std::size_t operator()(const Reflection& r) const noexcept {
    return WordHash{}(r.word());
  }
};

// The word ((uv)^0 u, (uv)^1 u, ..., (uv)^(m-1) u).
struct RhoWord {
  std::vector<Reflection> entries;
  Reflection              u;
  Reflection              v;
  unsigned                m = 0;
};

RhoWord reversal(const RhoWord& r);

class MinimalRoots;

inline constexpr unsigned kDefaultOrderCap = 64;

class CoxeterGroup {
 public:
  explicit CoxeterGroup(CoxeterMatrix matrix);

  ~CoxeterGroup();
  CoxeterGroup(const CoxeterGroup&)            = delete;
  CoxeterGroup& operator=(const CoxeterGroup&) = delete;

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  std::size_t          rank() const noexcept { return matrix_.rank(); }

  // Throws Error(InvalidLetter) if a letter is out of range.
  void check_word(const Word& w) const;

  Element identity() const { return Element(); }
  Element generator(Generator s) const;

  Element reduce(const Word& w) const;
  // Same result as reduce, computed without floating point comparisons.
  Element reduce_exact(const Word& w) const;
  bool    is_reduced(const Word& w) const { return reduce(w).length() == w.size(); }

  Element multiply(const Element& a, const Element& b) const;
  Element multiply(const Element& a, Generator s) const;
  Element left_multiply(Generator s, const Element& a) const;
  Element inverse(const Element& a) const;
  // q x q^-1
  Element conjugate(const Element& q, const Element& x) const;
  Element power(const Element& a, std::size_t k) const;

  std::uint64_t right_descents(const Element& a) const;
  std::uint64_t left_descents(const Element& a) const;

  Reflection simple_reflection(Generator s) const;
  Reflection conjugate(const Element& q, const Reflection& r) const;
  Reflection conjugate_by_generator(Generator s, const Reflection& r) const;

  // Least m >= 1 with (uv)^m = 1, or nullopt if none m <= cap.
  std::optional<unsigned> order_of_product(const Element& u, const Element& v,
                                           unsigned cap = kDefaultOrderCap) const;
  // Same, but settles infinite order from the roots instead of by powering.
  std::optional<unsigned> order_of_product(const Reflection& u, const Reflection& v,
                                           unsigned cap = kDefaultOrderCap) const;

  // Coefficients of the positive root of r on the simple roots.
  std::vector<long double> root(const Reflection& r) const;

  // Throws Error(CapExceeded) if the order of uv exceeds cap.
  RhoWord rho(const Reflection& u, const Reflection& v,
              unsigned cap = kDefaultOrderCap) const;

  // All reduced expressions of a, in ShortLex order.
  std::vector<Word> reduced_words(const Element& a) const;

  // Elements of length <= max_length (all elements when nullopt), in
  // ShortLex order. Throws Error(ElementCapExceeded) past `cap` elements.
  std::vector<Element> enumerate(std::optional<std::size_t> max_length,
                                 std::size_t cap) const;

 private:
  // Reflection representation on the span of the simple roots, row-major.
  // peak and ops bound the rounding error; see reliable().
  struct Matrix {
    std::vector<long double> a;
    long double              peak = 1.0L;
    std::size_t              ops  = 0;
  };
  Matrix        word_matrix(const Word& w, bool reversed) const;
  bool          reliable(const Matrix& m) const;
  // Bitmask of generators s whose column (the root M alpha_s) is negative.
  std::uint64_t negative_columns(const Matrix& m) const;
  void          right_apply(Matrix& m, Generator s) const;

  std::optional<Word> numeric_normal_form(const Word& w) const;
  Word                exact_normal_form(const Word& w) const;
  Word                normal_form(const Word& w) const;
  const MinimalRoots& minimal_roots() const;

  CoxeterMatrix             matrix_;
  std::vector<long double>  form_;  // 2 B(alpha_i, alpha_j) = -2 cos(pi / m_ij)
  bool                      finite_ = true;

  mutable std::once_flag                      roots_once_;
  mutable std::unique_ptr<const MinimalRoots> roots_;

  // Word -> canonical word, cleared when it reaches kCacheLimit entries.
  static constexpr std::size_t kCacheLimit = std::size_t{1} << 20;
  mutable std::shared_mutex                        mutex_;
  mutable std::unordered_map<Word, Word, WordHash> cache_;
};

}  // namespace coxlab
