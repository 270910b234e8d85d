#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "coxlab/coxeter_matrix.hpp"

namespace coxlab {

// An ordered pair (s, t) of distinct generators with finite m(s, t).
struct GenPair {
  Generator s = 0;
  Generator t = 0;

  GenPair swapped() const noexcept { return {t, s}; }

  friend auto operator<=>(const GenPair&, const GenPair&) = default;
};

struct BraidMove {
  std::size_t position = 0;
  GenPair     pair;
  Word        result;
};

// Calls f(position, pair, m) for every factor of `word` of the form
// (s, t, s, ...) of length m(s, t), in increasing position order. Each
// position carries at most one move since its first two letters fix (s, t).
template <typename F>
void for_each_braid_move(const Word& word, const CoxeterMatrix& matrix, F&& f) {
  const std::size_t n = word.size();
  for (std::size_t p = 0; p + 1 < n; ++p) {
    const Generator s = word[p];
    const Generator t = word[p + 1];
    if (s == t || !matrix.is_finite(s, t)) {
      continue;
    }
    const std::size_t m = matrix(s, t);
    if (p + m > n) {
      continue;
    }
    bool alternating = true;
    for (std::size_t i = 2; i < m; ++i) {
      if (word[p + i] != word[p + i - 2]) {
        alternating = false;
        break;
      }
    }
    if (alternating) {
      f(p, GenPair{s, t}, m);
    }
  }
}

// Rewrites the alternating window at `position` in place: (s,t,s,...) becomes
// (t,s,t,...).
inline void apply_braid_move(Word& word, std::size_t position, GenPair pair,
                             std::size_t m) {
  for (std::size_t i = 0; i < m; ++i) {
    word[position + i] = (i % 2 == 0) ? pair.t : pair.s;
  }
}

// Alternating word (s, t, s, ...) of length m.
Word alternating_word(GenPair pair, std::size_t m);

std::vector<BraidMove> braid_moves(const Word& word, const CoxeterMatrix& matrix);

}  // namespace coxlab
