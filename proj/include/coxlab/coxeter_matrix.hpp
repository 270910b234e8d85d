#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace coxlab {

// Entry value standing for m = infinity.
inline constexpr unsigned kInfinity = std::numeric_limits<unsigned>::max();

// Generators are stored in 64-bit descent masks.
inline constexpr std::size_t kMaxRank = 64;

using Generator = std::uint8_t;
using Word      = std::vector<Generator>;

class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  // Checks the Coxeter conditions; throws Error on violation.
  static CoxeterMatrix validate(const std::vector<std::vector<unsigned>>& raw);

  std::size_t rank() const noexcept { return rank_; }

  unsigned operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * rank_ + j];
  }

  bool is_finite(std::size_t i, std::size_t j) const noexcept {
    return (*this)(i, j) != kInfinity;
  }

  std::vector<std::vector<unsigned>> rows() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t           rank_ = 0;
  std::vector<unsigned> entries_;
};

// Whether the group is finite, decided from the diagram: every connected
// component must be one of A_n, B_n, D_n, E_6-8, F_4, H_3, H_4, I_2(m).
bool finite_type(const CoxeterMatrix& m);

// For each generator, whether its component of the diagram is of finite type.
std::vector<bool> finite_components(const CoxeterMatrix& m);

}  // namespace coxlab
