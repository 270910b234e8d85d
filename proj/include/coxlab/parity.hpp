#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxlab/braid_graph.hpp"
#include "coxlab/group.hpp"
#include "coxlab/inversions.hpp"
#include "coxlab/pair_classes.hpp"

namespace coxlab {

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v) noexcept;

// Worst of two verdicts: Fail > Inconclusive > Pass.
Verdict combine(Verdict a, Verdict b) noexcept;

// Data attached to one braid move a -> b at window position p: q is the
// prefix a_1 ... a_p, and invs(b) is invs(a) with the factor
// q rho_{s,t} q^-1 at positions p+1 ... p+m reversed.
struct BraidStepCertificate {
  std::size_t             position = 0;
  GenPair                 pair;
  Element                 q;
  Reflection              s_prime;
  Reflection              t_prime;
  std::vector<Reflection> factor;
};

// Throws Error(NotABraidStep) if b is not an (s,t)-braid move of a.
BraidStepCertificate find_braid_factor(const CoxeterGroup& group, const Word& a,
                                       const Word& b, GenPair pair);

struct StepResult {
  Verdict     verdict = Verdict::Pass;
  std::string detail;
};

// Checks Has(b) = Has(a) - (s',t') + (t',s').
StepResult verify_has_step(const CoxeterGroup& group, const PairClassPartition& partition,
                           const Word& a, const Word& b, GenPair pair,
                           unsigned cap = kDefaultOrderCap);

// A closed walk given as arc indices, each arc starting where the previous
// one ends.
struct Cycle {
  std::vector<std::size_t> arcs;
};

// Cycle-space basis of the directed graph: one 2-cycle per reverse-arc pair,
// then one cycle per non-tree edge of a BFS spanning tree.
std::vector<Cycle> fundamental_cycles(const BraidGraph& g);

// Random closed walks: a random walk out and back along the BFS tree. Used to
// spot-check cycles outside the basis.
std::vector<Cycle> random_closed_walks(const BraidGraph& g, std::size_t count,
                                       std::size_t max_steps, std::uint64_t seed);

struct ClassCount {
  ClassId     c         = 0;
  ClassId     cop       = 0;
  std::size_t count_c   = 0;
  std::size_t count_cop = 0;
  Verdict     verdict   = Verdict::Pass;
};

struct CycleReport {
  Cycle                   cycle;
  std::vector<ClassCount> counts;  // classes c <= c^op touched by the cycle
  Verdict                 verdict = Verdict::Pass;
};

struct CycleParityReport {
  std::vector<CycleReport> cycles;
  Verdict                  verdict = Verdict::Pass;
};

// Counts colors along a cycle. `colors` overrides the graph's arc colors
// when non-empty.
CycleReport check_cycle(const BraidGraph& g, const PairClassPartition& partition,
                        const Cycle& cycle, const std::vector<ClassId>& colors = {});

CycleParityReport verify_parity(const BraidGraph& g, const PairClassPartition& partition);

// Has-step checks on every arc plus the parity report for one graph.
struct GraphVerification {
  std::vector<StepResult> steps;  // parallel to g.arcs
  std::size_t             steps_passed       = 0;
  std::size_t             steps_failed       = 0;
  std::size_t             steps_inconclusive = 0;
  CycleParityReport       parity;
  Verdict                 verdict = Verdict::Pass;
};

GraphVerification verify_graph(const CoxeterGroup& group, const PairClassPartition& partition,
                               const BraidGraph& g, unsigned cap = kDefaultOrderCap);

}  // namespace coxlab

namespace coxlab {

struct ElementVerification {
  Element           element;
  std::size_t       vertices = 0;
  std::size_t       arcs     = 0;
  GraphVerification result;
};

// verify_graph over reduced_graph(w) for each w, on up to `threads` workers.
// Results keep the order of `elements`.
std::vector<ElementVerification> verify_elements(const CoxeterGroup& group,
                                                 const PairClassPartition& partition,
                                                 const std::vector<Element>& elements,
                                                 unsigned threads = 1,
                                                 unsigned cap = kDefaultOrderCap);

}  // namespace coxlab
