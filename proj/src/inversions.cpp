#include "coxlab/inversions.hpp"

#include "coxlab/error.hpp"

namespace coxlab {

InversionWord invs(const CoxeterGroup& group, const Word& word) {
  group.check_word(word);
  InversionWord iw{word, {}};
  iw.entries.reserve(word.size());
  Element prefix;
  for (Generator a : word) {
    iw.entries.push_back(group.conjugate(prefix, group.simple_reflection(a)));
    prefix = group.multiply(prefix, a);
  }
  return iw;
}

bool contains_subsequence(std::span<const Reflection> haystack,
                          std::span<const Reflection> needle) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < haystack.size() && j < needle.size(); ++i) {
    if (haystack[i] == needle[j]) {
      ++j;
    }
  }
  return j == needle.size();
}

std::uint64_t count_embeddings(std::span<const Reflection> haystack,
                               std::span<const Reflection> needle) {
  // ways[j] = number of embeddings of needle[0..j) in the prefix seen so far
  std::vector<std::uint64_t> ways(needle.size() + 1, 0);
  ways[0] = 1;
  for (const Reflection& h : haystack) {
    for (std::size_t j = needle.size(); j > 0; --j) {
      if (needle[j - 1] == h) {
        ways[j] += ways[j - 1];
      }
    }
  }
  return ways[needle.size()];
}

int has(const CoxeterGroup& group, const ReflPair& pair, const InversionWord& iw,
        unsigned cap) {
  if (iw.entries.empty()) {
    return 0;
  }
  const RhoWord r = group.rho(pair.u, pair.v, cap);
  return contains_subsequence(iw.entries, r.entries) ? 1 : 0;
}

int HasVector::operator[](const ReflPair& p) const {
  auto it = support_.find(p);
  return it == support_.end() ? 0 : it->second;
}

void HasVector::add(const ReflPair& p, int delta) {
  auto [it, inserted] = support_.try_emplace(p, 0);
  it->second += delta;
  if (it->second == 0) {
    support_.erase(it);
  }
}

HasVector has_vector(const CoxeterGroup& group, const Word& reduced,
                     const PairMembership& membership, unsigned cap) {
  const InversionWord iw = invs(group, reduced);
  HasVector           out;
  const std::size_t   k = iw.entries.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      ReflPair pair{iw.entries[i], iw.entries[j]};
      if (pair.u == pair.v) {
        continue;
      }
      const Membership status = membership(pair);
      if (status == Membership::NonMember) {
        continue;
      }
      const auto m = group.order_of_product(pair.u, pair.v, cap);
      if (!m) {
        out.mark_undecided();
        continue;
      }
      if (has(group, pair, iw, cap) == 1) {
        if (status == Membership::Unknown) {
          out.mark_undecided();
        } else {
          out.add(pair, 1);
        }
      }
    }
  }
  return out;
}

}  // namespace coxlab
