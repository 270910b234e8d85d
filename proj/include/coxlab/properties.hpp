#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxlab/group.hpp"
#include "coxlab/pair_classes.hpp"

namespace coxlab {

struct PropertyOptions {
  std::size_t   samples         = 1000;
  std::uint64_t seed            = 42;
  std::size_t   max_word_length = 10;
  unsigned      cap             = kDefaultOrderCap;
};

struct PropertyFailure {
  std::string property;
  std::string witness;  // minimized where the property takes a word
};

struct PropertyReport {
  std::size_t                        samples = 0;
  std::uint64_t                      seed    = 0;
  std::map<std::string, std::size_t> checked;  // property -> instances checked
  std::vector<PropertyFailure>       failures;

  bool passed() const noexcept { return failures.empty(); }
};

// Randomized checks of the group, rho-word, inversion-word and Has
// invariants.
PropertyReport property_harness(const CoxeterGroup& group, const PairClassPartition& partition,
                                const PropertyOptions& options = {});

// Same, with the pair partition computed exactly when possible and up to
// radius 4 otherwise.
PropertyReport property_harness(const CoxeterGroup& group, const PropertyOptions& options = {});

}  // namespace coxlab
