#include "coxlab/pair_classes.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

  struct Owner {
    std::size_t root;
    Element     q;  // pair == q * roots[root] * q^-1
  };

  // roots[to] == x * roots[from] * x^-1
  struct RootEdge {
    std::size_t from;
    std::size_t to;
    Element     x;
  };

  std::optional<GenPair> as_generator_pair(const ReflPair& p) {
    if (p.u.word().size() == 1 && p.v.word().size() == 1) {
      return GenPair{p.u.word()[0], p.v.word()[0]};
    }
    return std::nullopt;
  }

}  // namespace

ClassId PairClassPartition::class_of(GenPair p) const {
  auto it = class_of_.find(p);
  if (it == class_of_.end()) {
    throw Error(Errc::InvalidArgument, "pair is not a finite generator pair");
  }
  return it->second;
}

ClassId PairClassPartition::op(ClassId c) const {
  if (c >= classes_.size()) {
    throw Error(Errc::InvalidArgument, "class id out of range");
  }
  return class_of(classes_[c].members.front().swapped());
}

std::optional<ClassId> PairClassPartition::lookup(const ReflPair& p) const {
  auto it = conjugates_.find(p);
  if (it == conjugates_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Membership PairClassPartition::membership(const ReflPair& p) const {
  if (conjugates_.contains(p)) {
    return Membership::Member;
  }
  return exact_ ? Membership::NonMember : Membership::Unknown;
}

PairMembership PairClassPartition::membership_oracle() const {
  return [this](const ReflPair& p) { return membership(p); };
}

std::vector<ReflPair> PairClassPartition::conjugates() const {
  std::vector<ReflPair> out;
  out.reserve(conjugates_.size());
  for (const auto& [p, c] : conjugates_) {
    out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairClassPartition pair_classes(const CoxeterGroup& group, const PartitionMode& mode) {
  const bool exact = mode.kind == PartitionMode::Kind::ExactIfFinite;
  const std::size_t depth_limit =
      exact ? std::numeric_limits<std::size_t>::max() : mode.radius;
  const CoxeterMatrix& M = group.matrix();

  std::vector<GenPair>           roots;
  std::map<GenPair, std::size_t> root_index;
  for (std::size_t s = 0; s < M.rank(); ++s) {
    for (std::size_t t = 0; t < M.rank(); ++t) {
      if (s != t && M.is_finite(s, t)) {
        GenPair p{static_cast<Generator>(s), static_cast<Generator>(t)};
        root_index.emplace(p, roots.size());
        roots.push_back(p);
      }
    }
  }

  if (exact) {
    // Infinite irreducible Coxeter groups have infinite conjugacy classes, so
    // a pair touching an infinite component has an infinite orbit.
    const auto finite = finite_components(M);
    for (const GenPair& p : roots) {
      if (!finite[p.s] || !finite[p.t]) {
        throw Error(Errc::ElementCapExceeded,
                    "generator " + std::to_string(p.s + 1u) + " or "
                        + std::to_string(p.t + 1u)
                        + " lies in an infinite component, so its pair orbit is infinite");
      }
    }
  }

  auto root_pair = [&](std::size_t i) {
    return ReflPair{group.simple_reflection(roots[i].s),
                    group.simple_reflection(roots[i].t)};
  };

  std::unordered_map<ReflPair, Owner, ReflPairHash> owner;
  std::vector<RootEdge>                             edges;

  for (std::size_t i = 0; i < roots.size(); ++i) {
    const ReflPair start = root_pair(i);
    if (auto it = owner.find(start); it != owner.end()) {
      if (exact) {
        continue;  // orbits are complete, this one is already covered
      }
      edges.push_back({it->second.root, i, it->second.q});
    } else {
      owner.emplace(start, Owner{i, group.identity()});
    }

    std::unordered_set<ReflPair, ReflPairHash> seen{start};
    std::deque<std::pair<ReflPair, Element>>   frontier{{start, group.identity()}};
    for (std::size_t depth = 0; depth < depth_limit && !frontier.empty(); ++depth) {
      std::deque<std::pair<ReflPair, Element>> next;
      for (const auto& [pair, q] : frontier) {
        for (std::size_t r = 0; r < M.rank(); ++r) {
          const auto g = static_cast<Generator>(r);
          ReflPair conj{group.conjugate_by_generator(g, pair.u),
                        group.conjugate_by_generator(g, pair.v)};
          if (!seen.insert(conj).second) {
            continue;
          }
          Element q2 = group.left_multiply(g, q);
          if (auto it = owner.find(conj); it != owner.end()) {
            if (it->second.root != i) {
              // conj = q_j R_j q_j^-1 = q2 R_i q2^-1
              edges.push_back({it->second.root, i,
                               group.multiply(group.inverse(q2), it->second.q)});
            }
          } else {
            owner.emplace(conj, Owner{i, q2});
            if (exact && owner.size() > mode.element_cap) {
              throw Error(Errc::ElementCapExceeded,
                          "conjugacy orbits of generator pairs exceed "
                              + std::to_string(mode.element_cap)
                              + " pairs");
            }
            if (auto gp = as_generator_pair(conj)) {
              edges.push_back({i, root_index.at(*gp), q2});
            }
          }
          next.emplace_back(std::move(conj), std::move(q2));
        }
      }
      frontier = std::move(next);
    }
  }

  // Union the roots along the edges, then derive witnesses from the
  // smallest member of each component.
  std::vector<std::vector<std::pair<std::size_t, Element>>> adj(roots.size());
  for (const RootEdge& e : edges) {
    adj[e.from].emplace_back(e.to, e.x);
    adj[e.to].emplace_back(e.from, group.inverse(e.x));
  }
  PairClassPartition out;
  out.exact_  = exact;
  out.radius_ = exact ? 0 : mode.radius;
  std::vector<std::optional<ClassId>> root_class(roots.size());
  std::vector<std::optional<Element>> witness(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (root_class[i]) {
      continue;
    }
    const auto c  = static_cast<ClassId>(out.classes_.size());
    root_class[i] = c;
    witness[i]    = group.identity();
    std::deque<std::size_t>  queue{i};
    std::vector<std::size_t> members{i};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (const auto& [b, x] : adj[a]) {
        if (!root_class[b]) {
          root_class[b] = c;
          witness[b]    = group.multiply(x, *witness[a]);
          members.push_back(b);
          queue.push_back(b);
        }
      }
    }
    std::sort(members.begin(), members.end());
    PairClass cls;
    for (std::size_t b : members) {
      cls.members.push_back(roots[b]);
      cls.witnesses.push_back(*witness[b]);
      out.class_of_.emplace(roots[b], c);
    }
    out.classes_.push_back(std::move(cls));
  }

  for (auto& [pair, own] : owner) {
    out.conjugates_.emplace(pair, *root_class[own.root]);
  }

  for (const PairClass& cls : out.classes_) {
    const GenPair rep = cls.members.front();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      const Element& q = cls.witnesses[k];
      if (group.conjugate(q, group.generator(rep.s)) != group.generator(cls.members[k].s)
          || group.conjugate(q, group.generator(rep.t))
                 != group.generator(cls.members[k].t)) {
        throw Error(Errc::Internal, "conjugation witness failed to verify");
      }
    }
  }
  return out;
}

}  // namespace coxlab
