#pragma once

#include <string>
#include <vector>

#include "coxlab/braid_graph.hpp"
#include "coxlab/group.hpp"
#include "coxlab/pair_classes.hpp"
#include "coxlab/parity.hpp"
#include "coxlab/properties.hpp"

// JSON and DOT renderings. Generators are written 1-indexed; vertex and arc
// indices and window positions are 0-indexed. Output is deterministic.
namespace coxlab {

std::string partition_to_json(const CoxeterGroup& group, const PairClassPartition& partition);

// `verification` and `parity` are optional; when given they are embedded as
// "has_steps" and "report".
std::string graph_to_json(const CoxeterGroup& group, const BraidGraph& g,
                          const GraphVerification* verification = nullptr,
                          const CycleParityReport* parity       = nullptr);

std::string graph_to_dot(const BraidGraph& g);

std::string invs_to_json(const CoxeterGroup& group, const PairClassPartition& partition,
                         const Word& word, unsigned cap = kDefaultOrderCap);

std::string verification_to_json(const CoxeterGroup& group, const PairClassPartition& partition,
                                 const std::vector<ElementVerification>& results);

std::string properties_to_json(const CoxeterGroup& group, const PropertyReport& report);

}  // namespace coxlab
