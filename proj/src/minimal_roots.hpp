#pragma once

#include <cstdint>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

// The finite set of minimal roots (positive roots that dominate no other
// positive root) with its reflection table. A reduced word w is tracked by
// the minimal roots among {beta > 0 : w beta < 0}; s is a right descent of w
// exactly when alpha_s is among them. Coefficients stay bounded, so this
// works for words of any length.
class MinimalRoots {
 public:
  using State = std::vector<std::uint32_t>;  // sorted root indices

  // form is 2 B(alpha_i, alpha_j), row-major.
  MinimalRoots(std::size_t rank, const std::vector<long double>& form);

  std::size_t size() const noexcept { return roots_.size() / rank_; }

  // Simple root alpha_s has index s.
  bool  is_descent(const State& st, Generator s) const;
  // State of w s, given that w s is longer than w.
  State append(const State& st, Generator s) const;
  // State of a reduced word.
  State scan(const Word& w) const;

 private:
  static constexpr std::int32_t kNegative = -1;
  static constexpr std::int32_t kOutside  = -2;

  std::size_t               rank_;
  std::vector<long double>  roots_;  // size() x rank_
  std::vector<std::int32_t> table_;  // size() x rank_: index of s(beta)
};

}  // namespace coxlab
