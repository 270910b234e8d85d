#include "coxlab/braid_graph.hpp"

#include <deque>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

  BraidGraph closure(const CoxeterGroup& group, Word seed,
                     const PairClassPartition& partition) {
    BraidGraph g;
    std::unordered_map<Word, std::size_t, WordHash> index;
    index.emplace(seed, 0);
    g.vertices.push_back(std::move(seed));
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      // g.vertices may grow while moves are visited, so iterate over a copy
      const Word word = g.vertices[v];
      for_each_braid_move(word, group.matrix(),
                          [&](std::size_t p, GenPair pair, std::size_t m) {
                            Word next = word;
                            apply_braid_move(next, p, pair, m);
                            auto [it, inserted] = index.try_emplace(next, g.vertices.size());
                            if (inserted) {
                              g.vertices.push_back(std::move(next));
                            }
                            g.arcs.push_back({v, it->second, pair, p, partition.class_of(pair)});
                          });
    }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> by_ends;
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      by_ends.emplace(std::tuple{g.arcs[i].from, g.arcs[i].to, g.arcs[i].position}, i);
    }
    g.reverse.resize(g.arcs.size());
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
      const Arc& a = g.arcs[i];
      g.reverse[i] = by_ends.at({a.to, a.from, a.position});
    }
    return g;
  }

}  // namespace

BraidGraph reduced_graph(const CoxeterGroup& group, const Element& w,
                         const PairClassPartition& partition) {
  BraidGraph g          = closure(group, w.word(), partition);
  g.element             = w;
  g.mode                = GraphMode::Reduced;
  g.expression_length   = w.length();
  return g;
}

BraidGraph expression_graph(const CoxeterGroup& group, const Element& w,
                            std::size_t k, const PairClassPartition& partition) {
  if (k < w.length() || (k - w.length()) % 2 != 0) {
    throw Error(Errc::LengthParityMismatch,
                "expression length " + std::to_string(k) + " is incompatible with l(w) = "
                    + std::to_string(w.length()));
  }
  Word seed = w.word();
  if (k > seed.size() && group.rank() == 0) {
    throw Error(Errc::InvalidArgument, "no generators to pad the expression with");
  }
  seed.resize(k, Generator{0});
  BraidGraph g        = closure(group, std::move(seed), partition);
  g.element           = w;
  g.mode              = GraphMode::BoundedExpressions;
  g.expression_length = k;
  return g;
}

}  // namespace coxlab
