#include "coxlab/report.hpp"

#include <array>
#include <sstream>

#include "coxlab/inversions.hpp"
#include "json.hpp"

namespace coxlab {

namespace {

  using json = nlohmann::ordered_json;

  json word_json(const Word& w) {
    json out = json::array();
    for (Generator g : w) {
      out.push_back(static_cast<unsigned>(g) + 1);
    }
    return out;
  }

  json pair_json(GenPair p) {
    return json::array({static_cast<unsigned>(p.s) + 1, static_cast<unsigned>(p.t) + 1});
  }

  json matrix_json(const CoxeterMatrix& M) {
    json out = json::array();
    for (std::size_t i = 0; i < M.rank(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < M.rank(); ++j) {
        if (M.is_finite(i, j)) {
          row.push_back(M(i, j));
        } else {
          row.push_back("inf");
        }
      }
      out.push_back(std::move(row));
    }
    return out;
  }

  json partition_summary(const PairClassPartition& p) {
    json out;
    out["status"] = p.is_exact() ? "Exact" : "ProvisionalUpToRadius";
    if (!p.is_exact()) {
      out["radius"] = p.radius();
    }
    out["classes"] = p.size();
    return out;
  }

  json parity_json(const CycleParityReport& report) {
    json cycles = json::array();
    for (const CycleReport& c : report.cycles) {
      json counts = json::array();
      for (const ClassCount& cc : c.counts) {
        counts.push_back({{"class", cc.c},
                          {"op", cc.cop},
                          {"count_c", cc.count_c},
                          {"count_cop", cc.count_cop},
                          {"verdict", verdict_name(cc.verdict)}});
      }
      cycles.push_back({{"arcs", c.cycle.arcs},
                        {"length", c.cycle.arcs.size()},
                        {"counts", std::move(counts)},
                        {"verdict", verdict_name(c.verdict)}});
    }
    return {{"verdict", verdict_name(report.verdict)}, {"cycles", std::move(cycles)}};
  }

  json steps_json(const GraphVerification& v) {
    json failures = json::array();
    for (std::size_t i = 0; i < v.steps.size(); ++i) {
      if (v.steps[i].verdict != Verdict::Pass) {
        failures.push_back({{"arc", i},
                            {"verdict", verdict_name(v.steps[i].verdict)},
                            {"detail", v.steps[i].detail}});
      }
    }
    return {{"passed", v.steps_passed},
            {"failed", v.steps_failed},
            {"inconclusive", v.steps_inconclusive},
            {"failures", std::move(failures)}};
  }

}  // namespace

std::string partition_to_json(const CoxeterGroup& group, const PairClassPartition& partition) {
  json classes = json::array();
  for (std::size_t c = 0; c < partition.size(); ++c) {
    const PairClass& cls = partition.classes()[c];
    json members         = json::array();
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      members.push_back({{"pair", pair_json(cls.members[k])},
                         {"witness", word_json(cls.witnesses[k].word())}});
    }
    json status = partition.is_exact()
                      ? json("Exact")
                      : json("ProvisionalUpToRadius(" + std::to_string(partition.radius()) + ")");
    classes.push_back({{"id", c},
                       {"op", partition.op(static_cast<ClassId>(c))},
                       {"status", std::move(status)},
                       {"members", std::move(members)}});
  }
  json out;
  out["matrix"]          = matrix_json(group.matrix());
  out["partition"]       = partition_summary(partition);
  out["conjugate_pairs"] = partition.conjugate_count();
  out["classes"]         = std::move(classes);
  return out.dump(2) + "\n";
}

std::string graph_to_json(const CoxeterGroup& group, const BraidGraph& g,
                          const GraphVerification* verification,
                          const CycleParityReport* parity) {
  json vertices = json::array();
  for (const Word& w : g.vertices) {
    vertices.push_back(word_json(w));
  }
  json arcs = json::array();
  for (const Arc& a : g.arcs) {
    arcs.push_back({{"from", a.from},
                    {"to", a.to},
                    {"pair", pair_json(a.move)},
                    {"position", a.position},
                    {"class", a.color}});
  }
  json out;
  out["matrix"]  = matrix_json(group.matrix());
  out["element"] = word_json(g.element.word());
  out["mode"]    = g.mode == GraphMode::Reduced ? "reduced" : "expressions";
  out["length"]  = g.expression_length;
  out["vertices"] = std::move(vertices);
  out["arcs"]     = std::move(arcs);
  if (verification) {
    out["has_steps"] = steps_json(*verification);
    out["report"]    = parity_json(verification->parity);
  } else if (parity) {
    out["report"] = parity_json(*parity);
  }
  return out.dump(2) + "\n";
}

std::string graph_to_dot(const BraidGraph& g) {
  static constexpr std::array<const char*, 8> palette = {
      "red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "gray40"};
  std::ostringstream out;
  out << "digraph braid_graph {\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    out << "  v" << v << " [label=\"";
    for (std::size_t i = 0; i < g.vertices[v].size(); ++i) {
      out << (i ? " " : "") << static_cast<unsigned>(g.vertices[v][i]) + 1;
    }
    out << "\"];\n";
  }
  for (const Arc& a : g.arcs) {
    out << "  v" << a.from << " -> v" << a.to << " [label=\"(" << a.move.s + 1 << ","
        << a.move.t + 1 << ")\", color=\"" << palette[a.color % palette.size()]
        << "\", class=" << a.color << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string invs_to_json(const CoxeterGroup& group, const PairClassPartition& partition,
                         const Word& word, unsigned cap) {
  const InversionWord iw = invs(group, word);
  json entries           = json::array();
  for (const Reflection& r : iw.entries) {
    entries.push_back(word_json(r.word()));
  }
  json out;
  out["matrix"]    = matrix_json(group.matrix());
  out["word"]      = word_json(word);
  out["element"]   = word_json(group.reduce(word).word());
  const bool reduced = group.is_reduced(word);
  out["reduced"]   = reduced;
  out["inversions"] = std::move(entries);
  if (reduced) {
    const HasVector hv = has_vector(group, word, partition.membership_oracle(), cap);
    json support       = json::array();
    for (const auto& [p, value] : hv.support()) {
      support.push_back({{"u", word_json(p.u.word())},
                         {"v", word_json(p.v.word())},
                         {"class", *partition.lookup(p)},
                         {"value", value}});
    }
    out["has"] = {{"support", std::move(support)}, {"undecided", hv.undecided()}};
  } else {
    out["has"] = nullptr;
  }
  return out.dump(2) + "\n";
}

std::string verification_to_json(const CoxeterGroup& group, const PairClassPartition& partition,
                                 const std::vector<ElementVerification>& results) {
  json        elements = json::array();
  Verdict     verdict  = Verdict::Pass;
  std::size_t arcs = 0, cycles = 0;
  for (const ElementVerification& r : results) {
    verdict = combine(verdict, r.result.verdict);
    arcs += r.arcs;
    cycles += r.result.parity.cycles.size();
    elements.push_back({{"element", word_json(r.element.word())},
                        {"vertices", r.vertices},
                        {"arcs", r.arcs},
                        {"has_steps", steps_json(r.result)},
                        {"report", parity_json(r.result.parity)},
                        {"verdict", verdict_name(r.result.verdict)}});
  }
  json out;
  out["matrix"]    = matrix_json(group.matrix());
  out["partition"] = partition_summary(partition);
  out["elements"]  = std::move(elements);
  out["summary"]   = {{"elements", results.size()},
                      {"arcs", arcs},
                      {"cycles", cycles},
                      {"verdict", verdict_name(verdict)}};
  return out.dump(2) + "\n";
}

std::string properties_to_json(const CoxeterGroup& group, const PropertyReport& report) {
  json failures = json::array();
  for (const PropertyFailure& f : report.failures) {
    failures.push_back({{"property", f.property}, {"witness", f.witness}});
  }
  json checked = json::object();
  for (const auto& [name, n] : report.checked) {
    checked[name] = n;
  }
  json out;
  out["matrix"]   = matrix_json(group.matrix());
  out["samples"]  = report.samples;
  out["seed"]     = report.seed;
  out["checked"]  = std::move(checked);
  out["failures"] = std::move(failures);
  out["verdict"]  = report.passed() ? "Pass" : "Fail";
  return out.dump(2) + "\n";
}

}  // namespace coxlab
