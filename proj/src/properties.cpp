#include "coxlab/properties.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "coxlab/braid_moves.hpp"
#include "coxlab/error.hpp"
#include "coxlab/inversions.hpp"
#include "coxlab/parity.hpp"

namespace coxlab {

namespace {

  std::string show(const Word& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i ? " " : "") << static_cast<unsigned>(w[i]) + 1;
    }
    os << ')';
    return os.str();
  }

  // Greedily deletes letters while the property keeps failing.
  Word minimize(Word w, const std::function<bool(const Word&)>& fails) {
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word shorter = w;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
        if (fails(shorter)) {
          w      = std::move(shorter);
          shrunk = true;
          break;
        }
      }
    }
    return w;
  }

  // Subgroup generated by `gens`, or nullopt past `limit` elements.
  std::optional<std::unordered_set<Element, ElementHash>> closure(
      const CoxeterGroup& group, const std::vector<Element>& gens, std::size_t limit) {
    std::unordered_set<Element, ElementHash> seen{group.identity()};
    std::deque<Element>                      queue{group.identity()};
    while (!queue.empty()) {
      const Element x = queue.front();
      queue.pop_front();
      for (const Element& g : gens) {
        Element y = group.multiply(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > limit) {
            return std::nullopt;
          }
          queue.push_back(std::move(y));
        }
      }
    }
    return seen;
  }

  class Harness {
   public:
    Harness(const CoxeterGroup& group, const PairClassPartition& partition,
            const PropertyOptions& options)
        : group_(group), partition_(partition), options_(options), rng_(options.seed) {
      const CoxeterMatrix& M = group.matrix();
      for (std::size_t s = 0; s < M.rank(); ++s) {
        for (std::size_t t = 0; t < M.rank(); ++t) {
          if (s != t && M.is_finite(s, t)) {
            pairs_.push_back({static_cast<Generator>(s), static_cast<Generator>(t)});
          }
        }
      }
      report_.samples = options.samples;
      report_.seed    = options.seed;
    }

    PropertyReport run() {
      if (group_.rank() == 0) {
        return report_;
      }
      const bool scan_support = partition_.is_exact() && partition_.conjugate_count() <= 20000;
      for (std::size_t i = 0; i < options_.samples; ++i) {
        word_properties(random_word());
        group_properties();
        const Word reduced = (i % 4 == 3 && !pairs_.empty()) ? random_braid_word()
                                                             : random_reduced_word();
        inversion_properties(reduced);
        if (scan_support && i % 25 == 0) {
          support_completeness(reduced);
        }
        if (!pairs_.empty()) {
          rho_properties();
          dihedral_properties();
        }
      }
      return std::move(report_);
    }

   private:
    std::size_t uniform(std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
    }

    Word random_word() {
      Word w(uniform(0, options_.max_word_length));
      for (auto& g : w) {
        g = static_cast<Generator>(uniform(0, group_.rank() - 1));
      }
      return w;
    }

    Element random_element() { return group_.reduce(random_word()); }

    // A reduced word reached by a short random walk of braid moves from a
    // canonical word.
    Word random_reduced_word() {
      Word w = random_element().word();
      for (std::size_t k = uniform(0, 6); k > 0; --k) {
        const auto moves = braid_moves(w, group_.matrix());
        if (moves.empty()) {
          break;
        }
        w = moves[uniform(0, moves.size() - 1)].result;
      }
      return w;
    }

    // q followed by the longest element of <s,t>, with q stripped of right
    // descents in {s,t} so that lengths add. Always admits a braid move.
    Word random_braid_word() {
      const GenPair p = pairs_[uniform(0, pairs_.size() - 1)];
      Element       q = random_element();
      for (;;) {
        const std::uint64_t desc = group_.right_descents(q);
        if (desc >> p.s & 1U) {
          q = group_.multiply(q, p.s);
        } else if (desc >> p.t & 1U) {
          q = group_.multiply(q, p.t);
        } else {
          break;
        }
      }
      Word w = q.word();
      const Word window = alternating_word(p, group_.matrix()(p.s, p.t));
      w.insert(w.end(), window.begin(), window.end());
      return w;
    }

    void check(const std::string& name, bool ok, const std::function<std::string()>& witness) {
      ++report_.checked[name];
      if (!ok) {
        report_.failures.push_back({name, witness()});
      }
    }

    void check_word(const std::string& name, const Word& w,
                    const std::function<bool(const Word&)>& holds) {
      auto fails = [&](const Word& x) {
        try {
          return !holds(x);
        } catch (const Error&) {
          return true;
        }
      };
      ++report_.checked[name];
      if (fails(w)) {
        report_.failures.push_back({name, "word " + show(minimize(w, fails))});
      }
    }

    void word_properties(const Word& w) {
      check_word("reduce.idempotent", w, [&](const Word& x) {
        const Element e = group_.reduce(x);
        return group_.reduce(e.word()) == e && e.length() <= x.size()
               && (x.size() - e.length()) % 2 == 0;
      });
    }

    void group_properties() {
      const Element a = random_element();
      const Element b = random_element();
      const Element c = random_element();
      auto witness = [&] {
        return "a = " + show(a.word()) + ", b = " + show(b.word()) + ", c = " + show(c.word());
      };
      check("multiply.associative",
            group_.multiply(group_.multiply(a, b), c) == group_.multiply(a, group_.multiply(b, c)),
            witness);
      check("inverse.antihomomorphism",
            group_.inverse(group_.multiply(a, b))
                == group_.multiply(group_.inverse(b), group_.inverse(a)),
            witness);
    }

    void inversion_properties(const Word& a) {
      check_word("invs.distinct_entries", a, [&](const Word& x) {
        if (!group_.is_reduced(x)) {
          return true;
        }
        auto entries = invs(group_, x).entries;
        std::sort(entries.begin(), entries.end());
        return std::adjacent_find(entries.begin(), entries.end()) == entries.end();
      });

      const auto moves = braid_moves(a, group_.matrix());
      if (!moves.empty()) {
        const BraidMove& mv = moves[uniform(0, moves.size() - 1)];
        ++report_.checked["invs.braid_factor_reversal"];
        try {
          find_braid_factor(group_, a, mv.result, mv.pair);
        } catch (const Error& e) {
          report_.failures.push_back({"invs.braid_factor_reversal",
                                      "a = " + show(a) + ", b = " + show(mv.result) + ": "
                                          + e.what()});
        }
      }

      if (a.size() > 10) {
        return;
      }
      check_word("has.at_most_once_and_not_both", a, [&](const Word& x) {
        if (!group_.is_reduced(x)) {
          return true;
        }
        const InversionWord iw = invs(group_, x);
        for (std::size_t i = 0; i < iw.entries.size(); ++i) {
          for (std::size_t j = i + 1; j < iw.entries.size(); ++j) {
            const ReflPair p{iw.entries[i], iw.entries[j]};
            if (partition_.membership(p) != Membership::Member) {
              continue;
            }
            const RhoWord r = group_.rho(p.u, p.v, options_.cap);
            const auto    n = count_embeddings(iw.entries, r.entries);
            const auto    back = count_embeddings(iw.entries, reversal(r).entries);
            if (n > 1 || back > 1 || (n == 1 && back == 1)) {
              return false;
            }
          }
        }
        return true;
      });
    }

    // has_vector enumerates candidates from the inversion word only; compare
    // with a scan over every known conjugate pair.
    void support_completeness(const Word& a) {
      const InversionWord iw   = invs(group_, a);
      const HasVector     fast = has_vector(group_, a, partition_.membership_oracle(), options_.cap);
      HasVector           slow;
      for (const ReflPair& p : partition_.conjugates()) {
        if (has(group_, p, iw, options_.cap) == 1) {
          slow.add(p, 1);
        }
      }
      check("has.support_complete", fast == slow, [&] { return "word " + show(a); });
    }

    // A random conjugate (u, v) = q (s, t) q^-1 of a generator pair.
    std::tuple<GenPair, Element, ReflPair> random_conjugate_pair() {
      const GenPair p = pairs_[uniform(0, pairs_.size() - 1)];
      const Element q = random_element();
      return {p, q,
              ReflPair{group_.conjugate(q, group_.simple_reflection(p.s)),
                       group_.conjugate(q, group_.simple_reflection(p.t))}};
    }

    void rho_properties() {
      const auto [gp, q, pair] = random_conjugate_pair();
      auto witness = [&, gp = gp, q = q] {
        return "pair (" + std::to_string(gp.s + 1) + "," + std::to_string(gp.t + 1)
               + ") conjugated by " + show(q.word());
      };
      const RhoWord r = group_.rho(pair.u, pair.v, options_.cap);

      auto sorted = r.entries;
      std::sort(sorted.begin(), sorted.end());
      const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      bool exactly_once = false;
      if (auto D = closure(group_, {pair.u.element(), pair.v.element()}, 4 * r.m + 4)) {
        std::set<Word> odd_words;
        for (const Element& x : *D) {
          if (x.length() % 2 == 1) {
            odd_words.insert(x.word());
          }
        }
        std::set<Word> rho_words;
        for (const Reflection& x : r.entries) {
          rho_words.insert(x.word());
        }
        exactly_once = D->size() == 2 * r.m && odd_words == rho_words;
      }
      check("rho.distinct_and_exhaustive", distinct && exactly_once
                                               && r.entries.front() == pair.u
                                               && r.entries.back() == pair.v,
            witness);

      const RhoWord back = group_.rho(pair.v, pair.u, options_.cap);
      check("rho.reversal", reversal(r).entries == back.entries, witness);

      const Element q2 = random_element();
      std::vector<Reflection> forward, backward;
      for (const Reflection& x : r.entries) {
        forward.push_back(group_.conjugate(q2, x));
      }
      for (const Reflection& x : back.entries) {
        backward.push_back(group_.conjugate(q2, x));
      }
      std::reverse(forward.begin(), forward.end());
      check("rho.conjugated_reversal", forward == backward, witness);
    }

    void dihedral_properties() {
      const auto [gp, q, base] = random_conjugate_pair();
      const unsigned m = group_.matrix()(gp.s, gp.t);
      // reflections of q D_{s,t} q^-1
      const RhoWord r = group_.rho(base.u, base.v, options_.cap);
      const std::size_t i = uniform(0, r.entries.size() - 1);
      std::size_t       j = uniform(0, r.entries.size() - 2);
      if (j >= i) {
        ++j;
      }
      const ReflPair pair{r.entries[i], r.entries[j]};
      auto witness = [&, gp = gp, q = q] {
        return "pair (" + std::to_string(gp.s + 1) + "," + std::to_string(gp.t + 1)
               + ") conjugated by " + show(q.word()) + ", entries " + std::to_string(i) + ", "
               + std::to_string(j);
      };
      if (partition_.membership(pair) == Membership::Member) {
        check("dihedral.order_preserved",
              group_.order_of_product(pair.u, pair.v, options_.cap) == m,
              witness);
      }

      // (uv)^(g-1) u and (uv)^g u generate a subgroup containing u and v
      const Element& u  = pair.u.element();
      const Element& v  = pair.v.element();
      const auto     mu = group_.order_of_product(pair.u, pair.v, options_.cap);
      if (!mu) {
        return;
      }
      const Element uv = group_.multiply(u, v);
      const std::size_t g = uniform(0, 2 * *mu);
      const Element x1 = group_.multiply(group_.power(uv, (g + *mu - 1) % *mu), u);
      const Element x2 = group_.multiply(group_.power(uv, g % *mu), u);
      auto H = closure(group_, {x1, x2}, 4 * *mu + 4);
      check("subgroup.membership", H && H->contains(u) && H->contains(v), witness);
    }

    const CoxeterGroup&       group_;
    const PairClassPartition& partition_;
    PropertyOptions           options_;
    std::mt19937_64           rng_;
    std::vector<GenPair>      pairs_;
    PropertyReport            report_;
  };

}  // namespace

PropertyReport property_harness(const CoxeterGroup& group, const PairClassPartition& partition,
                                const PropertyOptions& options) {
  return Harness(group, partition, options).run();
}

PropertyReport property_harness(const CoxeterGroup& group, const PropertyOptions& options) {
  if (!finite_type(group.matrix())) {
    return property_harness(group, pair_classes(group, PartitionMode::within_radius(4)), options);
  }
  try {
    return property_harness(group, pair_classes(group, PartitionMode::exact()), options);
  } catch (const Error& e) {
    if (e.code() != Errc::ElementCapExceeded) {
      throw;
    }
  }
  return property_harness(group, pair_classes(group, PartitionMode::within_radius(4)), options);
}

}  // namespace coxlab
