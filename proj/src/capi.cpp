#include "coxlab/coxlab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/braid_graph.hpp"
#include "coxlab/catalog.hpp"
#include "coxlab/error.hpp"
#include "coxlab/group.hpp"
#include "coxlab/matrix_file.hpp"
#include "coxlab/pair_classes.hpp"
#include "coxlab/parity.hpp"
#include "coxlab/properties.hpp"
#include "coxlab/report.hpp"

struct coxlab_group {
  std::shared_ptr<const coxlab::CoxeterGroup> group;
};

struct coxlab_partition {
  std::shared_ptr<const coxlab::CoxeterGroup> group;
  std::shared_ptr<const coxlab::PairClassPartition> partition;
};

struct coxlab_graph {
  coxlab_partition   owner;
  coxlab::BraidGraph graph;
};

namespace {

  thread_local std::string last_error;

  coxlab_status status_of(coxlab::Errc code) {
    using coxlab::Errc;
    switch (code) {
      case Errc::DiagonalNotOne: return COXLAB_ERR_DIAGONAL_NOT_ONE;
      case Errc::OffDiagonalBelowTwo: return COXLAB_ERR_OFF_DIAGONAL_BELOW_TWO;
      case Errc::Asymmetric: return COXLAB_ERR_ASYMMETRIC;
      case Errc::NotSquare: return COXLAB_ERR_NOT_SQUARE;
      case Errc::RankTooLarge: return COXLAB_ERR_RANK_TOO_LARGE;
      case Errc::InvalidLetter: return COXLAB_ERR_INVALID_LETTER;
      case Errc::CapExceeded: return COXLAB_ERR_CAP_EXCEEDED;
      case Errc::ElementCapExceeded: return COXLAB_ERR_ELEMENT_CAP_EXCEEDED;
      case Errc::LengthParityMismatch: return COXLAB_ERR_LENGTH_PARITY_MISMATCH;
      case Errc::NotABraidStep: return COXLAB_ERR_NOT_A_BRAID_STEP;
      case Errc::InvalidArgument: return COXLAB_ERR_INVALID_ARGUMENT;
      case Errc::ParseError: return COXLAB_ERR_PARSE;
      case Errc::UnknownCatalogType: return COXLAB_ERR_UNKNOWN_CATALOG_TYPE;
      case Errc::Internal: return COXLAB_ERR_INTERNAL;
    }
    return COXLAB_ERR_INTERNAL;
  }

  // Runs f, translating exceptions into status codes.
  template <typename F>
  coxlab_status guarded(F&& f) noexcept {
    try {
      last_error.clear();
      f();
      return COXLAB_OK;
    } catch (const coxlab::Error& e) {
      last_error = e.what();
      return status_of(e.code());
    } catch (const std::bad_alloc&) {
      last_error = "out of memory";
      return COXLAB_ERR_INTERNAL;
    } catch (const std::exception& e) {
      last_error = e.what();
      return COXLAB_ERR_INTERNAL;
    } catch (...) {
      last_error = "unknown error";
      return COXLAB_ERR_INTERNAL;
    }
  }

  void require(bool ok, const char* what) {
    if (!ok) {
      throw coxlab::Error(coxlab::Errc::InvalidArgument, what);
    }
  }

  char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  coxlab::Word to_word(const coxlab::CoxeterGroup& group, const unsigned* word, size_t len) {
    require(word != nullptr || len == 0, "word pointer is null");
    coxlab::Word w;
    w.reserve(len);
    for (size_t i = 0; i < len; ++i) {
      if (word[i] >= group.rank()) {
        throw coxlab::Error(coxlab::Errc::InvalidLetter,
                            "letter " + std::to_string(word[i] + 1) + " is out of range for rank "
                                + std::to_string(group.rank()));
      }
      w.push_back(static_cast<coxlab::Generator>(word[i]));
    }
    return w;
  }

  coxlab_verdict verdict_of(coxlab::Verdict v) {
    switch (v) {
      case coxlab::Verdict::Pass: return COXLAB_PASS;
      case coxlab::Verdict::Fail: return COXLAB_FAIL;
      case coxlab::Verdict::Inconclusive: return COXLAB_INCONCLUSIVE;
    }
    return COXLAB_FAIL;
  }

  coxlab_group* make_group(coxlab::CoxeterMatrix m) {
    return new coxlab_group{std::make_shared<const coxlab::CoxeterGroup>(std::move(m))};
  }

}  // namespace

extern "C" {

const char* coxlab_last_error(void) {
  return last_error.c_str();
}

void coxlab_string_free(char* s) {
  std::free(s);
}

coxlab_status coxlab_group_from_matrix(const unsigned* entries, size_t rank,
                                       coxlab_group** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    require(entries != nullptr || rank == 0, "entries pointer is null");
    std::vector<std::vector<unsigned>> raw(rank, std::vector<unsigned>(rank));
    for (size_t i = 0; i < rank; ++i) {
      for (size_t j = 0; j < rank; ++j) {
        const unsigned v = entries[i * rank + j];
        raw[i][j]        = v == COXLAB_INFINITY ? coxlab::kInfinity : v;
      }
    }
    *out = make_group(coxlab::CoxeterMatrix::validate(raw));
  });
}

coxlab_status coxlab_group_from_catalog(const char* name, coxlab_group** out) {
  return guarded([&] {
    require(out != nullptr && name != nullptr, "null argument");
    *out = make_group(coxlab::catalog_matrix(name));
  });
}

coxlab_status coxlab_group_from_matrix_text(const char* text, coxlab_group** out) {
  return guarded([&] {
    require(out != nullptr && text != nullptr, "null argument");
    *out = make_group(coxlab::parse_matrix_file(text));
  });
}

void coxlab_group_free(coxlab_group* group) {
  delete group;
}

size_t coxlab_group_rank(const coxlab_group* group) {
  return group ? group->group->rank() : 0;
}

coxlab_status coxlab_group_matrix_text(const coxlab_group* group, char** out) {
  return guarded([&] {
    require(group != nullptr && out != nullptr, "null argument");
    *out = copy_string(coxlab::format_matrix_file(group->group->matrix()));
  });
}

coxlab_status coxlab_reduce(const coxlab_group* group, const unsigned* word, size_t len,
                            unsigned* out, size_t* out_len) {
  return guarded([&] {
    require(group != nullptr && out_len != nullptr, "null argument");
    require(out != nullptr || len == 0, "output buffer is null");
    const coxlab::Element e = group->group->reduce(to_word(*group->group, word, len));
    for (size_t i = 0; i < e.length(); ++i) {
      out[i] = e.word()[i];
    }
    *out_len = e.length();
  });
}

coxlab_status coxlab_group_order(const coxlab_group* group, size_t element_cap, size_t* out) {
  return guarded([&] {
    require(group != nullptr && out != nullptr, "null argument");
    const size_t cap = element_cap == 0 ? coxlab::kDefaultElementCap : element_cap;
    *out             = group->group->enumerate(std::nullopt, cap).size();
  });
}

coxlab_status coxlab_partition_compute(const coxlab_group* group, unsigned radius,
                                       coxlab_partition** out) {
  return guarded([&] {
    require(group != nullptr && out != nullptr, "null argument");
    const auto mode = radius == 0 ? coxlab::PartitionMode::exact()
                                  : coxlab::PartitionMode::within_radius(radius);
    auto p = std::make_shared<const coxlab::PairClassPartition>(
        coxlab::pair_classes(*group->group, mode));
    *out = new coxlab_partition{group->group, std::move(p)};
  });
}

void coxlab_partition_free(coxlab_partition* partition) {
  delete partition;
}

size_t coxlab_partition_size(const coxlab_partition* partition) {
  return partition ? partition->partition->size() : 0;
}

int coxlab_partition_is_exact(const coxlab_partition* partition) {
  return partition && partition->partition->is_exact() ? 1 : 0;
}

coxlab_status coxlab_partition_class_of(const coxlab_partition* partition, unsigned s,
                                        unsigned t, uint32_t* out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    const size_t n = partition->group->rank();
    require(s < n && t < n, "generator out of range");
    *out = partition->partition->class_of(
        {static_cast<coxlab::Generator>(s), static_cast<coxlab::Generator>(t)});
  });
}

coxlab_status coxlab_partition_op(const coxlab_partition* partition, uint32_t c, uint32_t* out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    *out = partition->partition->op(c);
  });
}

coxlab_status coxlab_partition_json(const coxlab_partition* partition, char** out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    *out = copy_string(coxlab::partition_to_json(*partition->group, *partition->partition));
  });
}

coxlab_status coxlab_graph_reduced(const coxlab_partition* partition, const unsigned* word,
                                   size_t len, coxlab_graph** out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    const auto& group = *partition->group;
    const auto  w     = group.reduce(to_word(group, word, len));
    *out = new coxlab_graph{*partition, coxlab::reduced_graph(group, w, *partition->partition)};
  });
}

coxlab_status coxlab_graph_expressions(const coxlab_partition* partition, const unsigned* word,
                                       size_t len, size_t k, coxlab_graph** out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    const auto& group = *partition->group;
    const auto  w     = group.reduce(to_word(group, word, len));
    *out              = new coxlab_graph{*partition,
                            coxlab::expression_graph(group, w, k, *partition->partition)};
  });
}

void coxlab_graph_free(coxlab_graph* graph) {
  delete graph;
}

size_t coxlab_graph_vertex_count(const coxlab_graph* graph) {
  return graph ? graph->graph.vertices.size() : 0;
}

size_t coxlab_graph_arc_count(const coxlab_graph* graph) {
  return graph ? graph->graph.arcs.size() : 0;
}

coxlab_status coxlab_graph_json(const coxlab_graph* graph, char** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = copy_string(coxlab::graph_to_json(*graph->owner.group, graph->graph));
  });
}

coxlab_status coxlab_graph_dot(const coxlab_graph* graph, char** out) {
  return guarded([&] {
    require(graph != nullptr && out != nullptr, "null argument");
    *out = copy_string(coxlab::graph_to_dot(graph->graph));
  });
}

coxlab_status coxlab_graph_verify(const coxlab_graph* graph, coxlab_verdict* verdict,
                                  char** json_out) {
  return guarded([&] {
    require(graph != nullptr && verdict != nullptr, "null argument");
    const auto& group     = *graph->owner.group;
    const auto& partition = *graph->owner.partition;
    if (graph->graph.mode == coxlab::GraphMode::Reduced) {
      const auto v = coxlab::verify_graph(group, partition, graph->graph);
      if (json_out) {
        *json_out = copy_string(coxlab::graph_to_json(group, graph->graph, &v));
      }
      *verdict = verdict_of(v.verdict);
    } else {
      const auto report = coxlab::verify_parity(graph->graph, partition);
      if (json_out) {
        *json_out = copy_string(coxlab::graph_to_json(group, graph->graph, nullptr, &report));
      }
      *verdict = verdict_of(report.verdict);
    }
  });
}

coxlab_status coxlab_verify_elements(const coxlab_partition* partition, long max_length,
                                     unsigned threads, coxlab_verdict* verdict,
                                     char** json_out) {
  return guarded([&] {
    require(partition != nullptr && verdict != nullptr, "null argument");
    const auto& group = *partition->group;
    std::optional<size_t> bound;
    if (max_length >= 0) {
      bound = static_cast<size_t>(max_length);
    }
    const auto elements = group.enumerate(bound, coxlab::kDefaultElementCap);
    const auto results =
        coxlab::verify_elements(group, *partition->partition, elements, threads == 0 ? 1 : threads);
    coxlab::Verdict v = coxlab::Verdict::Pass;
    for (const auto& r : results) {
      v = coxlab::combine(v, r.result.verdict);
    }
    if (json_out) {
      *json_out = copy_string(coxlab::verification_to_json(group, *partition->partition, results));
    }
    *verdict = verdict_of(v);
  });
}

coxlab_status coxlab_invs_json(const coxlab_partition* partition, const unsigned* word,
                               size_t len, char** out) {
  return guarded([&] {
    require(partition != nullptr && out != nullptr, "null argument");
    const auto& group = *partition->group;
    *out = copy_string(coxlab::invs_to_json(group, *partition->partition, to_word(group, word, len)));
  });
}

coxlab_status coxlab_properties(const coxlab_partition* partition, size_t samples, uint64_t seed,
                                coxlab_verdict* verdict, char** json_out) {
  return guarded([&] {
    require(partition != nullptr && verdict != nullptr, "null argument");
    coxlab::PropertyOptions options;
    options.samples   = samples;
    options.seed      = seed;
    const auto report = coxlab::property_harness(*partition->group, *partition->partition, options);
    if (json_out) {
      *json_out = copy_string(coxlab::properties_to_json(*partition->group, report));
    }
    *verdict = report.passed() ? COXLAB_PASS : COXLAB_FAIL;
  });
}

}  // extern "C"
