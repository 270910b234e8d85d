#include "coxlab/parity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

Verdict combine(Verdict a, Verdict b) noexcept {
  if (a == Verdict::Fail || b == Verdict::Fail) {
    return Verdict::Fail;
  }
  if (a == Verdict::Inconclusive || b == Verdict::Inconclusive) {
    return Verdict::Inconclusive;
  }
  return Verdict::Pass;
}

BraidStepCertificate find_braid_factor(const CoxeterGroup& group, const Word& a,
                                       const Word& b, GenPair pair) {
  group.check_word(a);
  group.check_word(b);
  const CoxeterMatrix& M = group.matrix();
  if (pair.s == pair.t || pair.s >= M.rank() || pair.t >= M.rank()
      || !M.is_finite(pair.s, pair.t)) {
    throw Error(Errc::NotABraidStep, "pair is not a finite generator pair");
  }
  const std::size_t m = M(pair.s, pair.t);
  if (a.size() != b.size() || a.size() < m) {
    throw Error(Errc::NotABraidStep, "words cannot differ by a braid move");
  }
  const Word before = alternating_word(pair, m);
  const Word after  = alternating_word(pair.swapped(), m);

  std::optional<std::size_t> position;
  for (std::size_t p = 0; p + m <= a.size() && !position; ++p) {
    if (!std::equal(before.begin(), before.end(), a.begin() + p)
        || !std::equal(after.begin(), after.end(), b.begin() + p)) {
      continue;
    }
    if (std::equal(a.begin(), a.begin() + p, b.begin())
        && std::equal(a.begin() + p + m, a.end(), b.begin() + p + m)) {
      position = p;
    }
  }
  if (!position) {
    throw Error(Errc::NotABraidStep, "no braid window turns the first word into the second");
  }

  const std::size_t p = *position;
  Element           q;
  for (std::size_t i = 0; i < p; ++i) {
    q = group.multiply(q, a[i]);
  }
  BraidStepCertificate cert{p,
                            pair,
                            q,
                            group.conjugate(q, group.simple_reflection(pair.s)),
                            group.conjugate(q, group.simple_reflection(pair.t)),
                            {}};
  const RhoWord rho_st = group.rho(group.simple_reflection(pair.s),
                                   group.simple_reflection(pair.t));
  for (const Reflection& r : rho_st.entries) {
    cert.factor.push_back(group.conjugate(q, r));
  }

  // invs(b) is invs(a) with the factor reversed
  const InversionWord ia = invs(group, a);
  const InversionWord ib = invs(group, b);
  bool ok = std::equal(cert.factor.begin(), cert.factor.end(), ia.entries.begin() + p)
            && std::equal(cert.factor.rbegin(), cert.factor.rend(), ib.entries.begin() + p)
            && std::equal(ia.entries.begin(), ia.entries.begin() + p, ib.entries.begin())
            && std::equal(ia.entries.begin() + p + m, ia.entries.end(),
                          ib.entries.begin() + p + m);
  if (!ok) {
    throw Error(Errc::Internal, "braid step certificate failed to validate");
  }
  return cert;
}

namespace {

  std::string word_string(const Word& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
      os << (i ? " " : "") << static_cast<unsigned>(w[i]) + 1;
    }
    os << ')';
    return os.str();
  }

  StepResult compare_step(const BraidStepCertificate& cert, const HasVector& has_a,
                          const HasVector& has_b, bool provisional) {
    HasVector expected = has_a;
    const ReflPair st{cert.s_prime, cert.t_prime};
    expected.add(st, -1);
    expected.add(st.swapped(), 1);
    if (expected == has_b) {
      return {Verdict::Pass, {}};
    }
    std::ostringstream os;
    os << "Has(b) differs from Has(a) - (s',t') + (t',s') for s' = "
       << word_string(cert.s_prime.word()) << ", t' = " << word_string(cert.t_prime.word());
    const bool uncertain = provisional || has_a.undecided() > 0 || has_b.undecided() > 0;
    return {uncertain ? Verdict::Inconclusive : Verdict::Fail, os.str()};
  }

}  // namespace

StepResult verify_has_step(const CoxeterGroup& group, const PairClassPartition& partition,
                           const Word& a, const Word& b, GenPair pair, unsigned cap) {
  try {
    const BraidStepCertificate cert = find_braid_factor(group, a, b, pair);
    const PairMembership oracle = partition.membership_oracle();
    const HasVector has_a = has_vector(group, a, oracle, cap);
    const HasVector has_b = has_vector(group, b, oracle, cap);
    return compare_step(cert, has_a, has_b, !partition.is_exact());
  } catch (const Error& e) {
    if (e.code() == Errc::CapExceeded) {
      return {Verdict::Inconclusive, e.what()};
    }
    throw;
  }
}

std::vector<Cycle> fundamental_cycles(const BraidGraph& g) {
  std::vector<Cycle> cycles;
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    if (i < g.reverse[i]) {
      cycles.push_back({{i, g.reverse[i]}});
    }
  }
  if (g.vertices.empty()) {
    return cycles;
  }

  // BFS tree rooted at vertex 0; parent_arc[v] goes parent -> v.
  const std::size_t        none = g.arcs.size();
  std::vector<std::size_t> parent_arc(g.vertices.size(), none);
  std::vector<std::size_t> depth(g.vertices.size(), 0);
  std::vector<bool>        reached(g.vertices.size(), false);
  std::vector<bool>        tree_arc(g.arcs.size(), false);
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    out[g.arcs[i].from].push_back(i);
  }
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t i : out[v]) {
      const std::size_t w = g.arcs[i].to;
      if (!reached[w]) {
        reached[w]    = true;
        parent_arc[w] = i;
        depth[w]      = depth[v] + 1;
        tree_arc[i] = tree_arc[g.reverse[i]] = true;
        queue.push_back(w);
      }
    }
  }

  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    if (tree_arc[i] || i > g.reverse[i]) {
      continue;
    }
    // arc i: a -> b, then climb from b and a to their common ancestor
    std::size_t a = g.arcs[i].from;
    std::size_t b = g.arcs[i].to;
    std::vector<std::size_t> up;    // from b towards the ancestor
    std::vector<std::size_t> down;  // from a towards the ancestor, reversed later
    while (a != b) {
      if (depth[b] >= depth[a]) {
        up.push_back(g.reverse[parent_arc[b]]);
        b = g.arcs[parent_arc[b]].from;
      } else {
        down.push_back(parent_arc[a]);
        a = g.arcs[parent_arc[a]].from;
      }
    }
    Cycle c;
    c.arcs.push_back(i);
    c.arcs.insert(c.arcs.end(), up.begin(), up.end());
    c.arcs.insert(c.arcs.end(), down.rbegin(), down.rend());
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<Cycle> random_closed_walks(const BraidGraph& g, std::size_t count,
                                       std::size_t max_steps, std::uint64_t seed) {
  std::vector<Cycle> walks;
  if (g.vertices.empty() || g.arcs.empty()) {
    return walks;
  }
  std::vector<std::vector<std::size_t>> out(g.vertices.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    out[g.arcs[i].from].push_back(i);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t start = std::uniform_int_distribution<std::size_t>(
        0, g.vertices.size() - 1)(rng);
    const std::size_t steps = std::uniform_int_distribution<std::size_t>(1, max_steps)(rng);
    Cycle       walk;
    std::size_t v = start;
    std::vector<std::size_t> trail;
    for (std::size_t k = 0; k < steps && !out[v].empty(); ++k) {
      const auto& choices = out[v];
      const std::size_t i =
          choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      walk.arcs.push_back(i);
      v = g.arcs[i].to;
    }
    // close up along a shortest path back to start
    std::vector<std::size_t> via(g.vertices.size(), g.arcs.size());
    std::vector<bool>        seen(g.vertices.size(), false);
    std::deque<std::size_t>  queue{v};
    seen[v] = true;
    while (!queue.empty() && !seen[start]) {
      const std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i : out[x]) {
        if (!seen[g.arcs[i].to]) {
          seen[g.arcs[i].to] = true;
          via[g.arcs[i].to]  = i;
          queue.push_back(g.arcs[i].to);
        }
      }
    }
    for (std::size_t x = start; x != v; x = g.arcs[via[x]].from) {
      trail.push_back(via[x]);
    }
    walk.arcs.insert(walk.arcs.end(), trail.rbegin(), trail.rend());
    walks.push_back(std::move(walk));
  }
  return walks;
}

CycleReport check_cycle(const BraidGraph& g, const PairClassPartition& partition,
                        const Cycle& cycle, const std::vector<ClassId>& colors) {
  std::map<ClassId, std::size_t> tally;
  for (std::size_t i : cycle.arcs) {
    ++tally[colors.empty() ? g.arcs[i].color : colors[i]];
  }
  CycleReport report{cycle, {}, Verdict::Pass};
  for (const auto& [c, n] : tally) {
    const ClassId cop = partition.op(c);
    if (cop < c && tally.contains(cop)) {
      continue;  // reported under cop
    }
    ClassCount cc{std::min(c, cop), std::max(c, cop), 0, 0, Verdict::Pass};
    auto count = [&](ClassId x) {
      auto it = tally.find(x);
      return it == tally.end() ? std::size_t{0} : it->second;
    };
    cc.count_c   = count(cc.c);
    cc.count_cop = count(cc.cop);
    const bool balanced = cc.count_c == cc.count_cop;
    const bool even = (cc.c == cc.cop) ? cc.count_c % 2 == 0
                                       : (cc.count_c + cc.count_cop) % 2 == 0;
    if (!(balanced && even)) {
      cc.verdict = partition.is_exact() ? Verdict::Fail : Verdict::Inconclusive;
    }
    report.verdict = combine(report.verdict, cc.verdict);
    report.counts.push_back(cc);
  }
  return report;
}

CycleParityReport verify_parity(const BraidGraph& g, const PairClassPartition& partition) {
  CycleParityReport report;
  for (const Cycle& c : fundamental_cycles(g)) {
    report.cycles.push_back(check_cycle(g, partition, c));
    report.verdict = combine(report.verdict, report.cycles.back().verdict);
  }
  return report;
}

GraphVerification verify_graph(const CoxeterGroup& group, const PairClassPartition& partition,
                               const BraidGraph& g, unsigned cap) {
  GraphVerification out;
  const PairMembership oracle = partition.membership_oracle();
  std::vector<std::optional<HasVector>> has(g.vertices.size());
  bool capped = false;
  try {
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      has[v] = has_vector(group, g.vertices[v], oracle, cap);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::CapExceeded) {
      throw;
    }
    capped = true;
  }
  for (const Arc& arc : g.arcs) {
    StepResult r;
    if (capped) {
      r = {Verdict::Inconclusive, "order of a product exceeded the cap"};
    } else {
      const BraidStepCertificate cert =
          find_braid_factor(group, g.vertices[arc.from], g.vertices[arc.to], arc.move);
      r = compare_step(cert, *has[arc.from], *has[arc.to], !partition.is_exact());
    }
    switch (r.verdict) {
      case Verdict::Pass: ++out.steps_passed; break;
      case Verdict::Fail: ++out.steps_failed; break;
      case Verdict::Inconclusive: ++out.steps_inconclusive; break;
    }
    out.verdict = combine(out.verdict, r.verdict);
    out.steps.push_back(std::move(r));
  }
  out.parity  = verify_parity(g, partition);
  out.verdict = combine(out.verdict, out.parity.verdict);
  return out;
}

}  // namespace coxlab

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace coxlab {

std::vector<ElementVerification> verify_elements(const CoxeterGroup& group,
                                                 const PairClassPartition& partition,
                                                 const std::vector<Element>& elements,
                                                 unsigned threads, unsigned cap) {
  std::vector<std::optional<ElementVerification>> slots(elements.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr       failure;
  std::mutex               failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < elements.size(); i = next++) {
      try {
        const BraidGraph g = reduced_graph(group, elements[i], partition);
        slots[i] = ElementVerification{elements[i], g.vertices.size(), g.arcs.size(),
                                       verify_graph(group, partition, g, cap)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  const unsigned workers = std::max(1U, std::min<unsigned>(threads, elements.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back(work);
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  std::vector<ElementVerification> out;
  out.reserve(elements.size());
  for (auto& s : slots) {
    out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace coxlab
