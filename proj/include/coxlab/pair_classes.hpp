#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "coxlab/braid_moves.hpp"
#include "coxlab/group.hpp"
#include "coxlab/inversions.hpp"

namespace coxlab {

using ClassId = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 200000;

struct PartitionMode {
  enum class Kind { ExactIfFinite, Radius };

  Kind        kind        = Kind::ExactIfFinite;
  unsigned    radius      = 0;
  std::size_t element_cap = kDefaultElementCap;

  static PartitionMode exact(std::size_t cap = kDefaultElementCap) {
    return {Kind::ExactIfFinite, 0, cap};
  }
  static PartitionMode within_radius(unsigned r) { return {Kind::Radius, r, kDefaultElementCap}; }
};

// One class of generator pairs under simultaneous conjugation.
// witnesses[i] * members[0] * witnesses[i]^-1 == members[i], componentwise.
struct PairClass {
  std::vector<GenPair> members;
  std::vector<Element> witnesses;
};

class PairClassPartition {
 public:
  const std::vector<PairClass>& classes() const noexcept { return classes_; }
  std::size_t                   size() const noexcept { return classes_.size(); }

  // Exact, or provisional up to conjugating paths of length radius().
  bool     is_exact() const noexcept { return exact_; }
  unsigned radius() const noexcept { return radius_; }

  ClassId class_of(GenPair p) const;
  ClassId op(ClassId c) const;

  // Class of a pair of reflections if it is known to be a conjugate of a
  // generator pair.
  std::optional<ClassId> lookup(const ReflPair& p) const;
  Membership             membership(const ReflPair& p) const;
  PairMembership         membership_oracle() const;

  // Number of conjugate pairs discovered (all of them when exact).
  std::size_t conjugate_count() const noexcept { return conjugates_.size(); }
  std::vector<ReflPair> conjugates() const;

 private:
  friend PairClassPartition pair_classes(const CoxeterGroup&, const PartitionMode&);

  std::vector<PairClass>                             classes_;
  std::map<GenPair, ClassId>                         class_of_;
  std::unordered_map<ReflPair, ClassId, ReflPairHash> conjugates_;
  bool                                               exact_  = true;
  unsigned                                           radius_ = 0;
};

// Orbits of generator pairs under simultaneous conjugation by generators.
// Throws Error(ElementCapExceeded) in exact mode when the orbits exceed the
// cap.
PairClassPartition pair_classes(const CoxeterGroup& group, const PartitionMode& mode);

inline ClassId op_class(ClassId c, const PairClassPartition& partition) {
  return partition.op(c);
}

}  // namespace coxlab
