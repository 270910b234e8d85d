#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "coxlab/group.hpp"

namespace coxlab {

// Invs(a): t_i = (a_1 ... a_{i-1}) a_i (a_1 ... a_{i-1})^-1.
struct InversionWord {
  Word                    source;
  std::vector<Reflection> entries;
};

InversionWord invs(const CoxeterGroup& group, const Word& word);

struct ReflPair {
  Reflection u;
  Reflection v;

  ReflPair swapped() const { return {v, u}; }

  friend bool operator==(const ReflPair&, const ReflPair&) = default;
  friend bool operator<(const ReflPair& a, const ReflPair& b) noexcept {
    if (a.u == b.u) {
      return a.v < b.v;
    }
    return a.u < b.u;
  }
};

struct ReflPairHash {
  std::size_t operator()(const ReflPair& p) const noexcept {
    const std::size_t h = ReflectionHash{}(p.u);
    return h ^ (ReflectionHash{}(p.v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

// Greedy left-to-right subsequence test.
bool contains_subsequence(std::span<const Reflection> haystack,
                          std::span<const Reflection> needle);

// Number of index sequences i_1 < ... < i_p embedding `needle` in `haystack`.
std::uint64_t count_embeddings(std::span<const Reflection> haystack,
                               std::span<const Reflection> needle);

// has_{u,v}: 1 iff rho_{u,v} is a subword of the inversion word.
// Throws Error(CapExceeded) if the order of uv exceeds cap.
int has(const CoxeterGroup& group, const ReflPair& pair, const InversionWord& iw,
        unsigned cap = kDefaultOrderCap);

enum class Membership { Member, NonMember, Unknown };

// Decides whether a pair of reflections is a simultaneous conjugate of a pair
// of generators.
using PairMembership = std::function<Membership(const ReflPair&)>;

// Finitely supported vector over conjugates of generator pairs.
class HasVector {
 public:
  const std::map<ReflPair, int>& support() const noexcept { return support_; }

  int  operator[](const ReflPair& p) const;
  void add(const ReflPair& p, int delta);

  // Candidate pairs whose membership could not be decided, or whose order
  // exceeded the cap. Nonzero means the vector may be incomplete.
  std::size_t undecided() const noexcept { return undecided_; }
  void        mark_undecided() noexcept { ++undecided_; }

  friend bool operator==(const HasVector& a, const HasVector& b) {
    return a.support_ == b.support_;
  }

 private:
  std::map<ReflPair, int> support_;  // no zero values stored
  std::size_t             undecided_ = 0;
};

// Has(a) for a reduced word. Candidate pairs come from ordered pairs of
// entries of invs(a): rho_{u,v} starts at u and ends at v, so no other pair
// can occur as a subword.
HasVector has_vector(const CoxeterGroup& group, const Word& reduced,
                     const PairMembership& membership,
                     unsigned cap = kDefaultOrderCap);

}  // namespace coxlab
