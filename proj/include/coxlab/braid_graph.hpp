#pragma once

#include <cstddef>
#include <vector>

#include "coxlab/braid_moves.hpp"
#include "coxlab/group.hpp"
#include "coxlab/pair_classes.hpp"

namespace coxlab {

enum class GraphMode { Reduced, BoundedExpressions };

struct Arc {
  std::size_t from     = 0;
  std::size_t to       = 0;
  GenPair     move;
  std::size_t position = 0;
  ClassId     color    = 0;
};

// Vertices are in BFS discovery order; arcs leave each vertex in
// position order. Every arc has a paired reverse arc.
struct BraidGraph {
  std::vector<Word>        vertices;
  std::vector<Arc>         arcs;
  std::vector<std::size_t> reverse;  // reverse[i] is the arc undoing arcs[i]
  Element                  element;
  GraphMode                mode              = GraphMode::Reduced;
  std::size_t              expression_length = 0;
};

// R(w): all reduced expressions of w joined by braid moves.
BraidGraph reduced_graph(const CoxeterGroup& group, const Element& w,
                         const PairClassPartition& partition);

// The component of E(w) containing the seed expression of length k: the
// canonical word of w followed by (k - l(w)) / 2 copies of (s_1, s_1).
// Throws Error(LengthParityMismatch) unless k >= l(w) and k = l(w) mod 2.
BraidGraph expression_graph(const CoxeterGroup& group, const Element& w,
                            std::size_t k, const PairClassPartition& partition);

}  // namespace coxlab
