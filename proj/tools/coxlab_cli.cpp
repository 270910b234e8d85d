// coxlab command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "coxlab/coxlab.h"

namespace {

constexpr int kExitUsage = 3;

// Input problems surface as this; main() maps it to exit code 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(coxlab_status status) {
  if (status != COXLAB_OK) {
    throw InputError(coxlab_last_error());
  }
}

struct GroupDeleter {
  void operator()(coxlab_group* g) const { coxlab_group_free(g); }
};
struct PartitionDeleter {
  void operator()(coxlab_partition* p) const { coxlab_partition_free(p); }
};
struct GraphDeleter {
  void operator()(coxlab_graph* g) const { coxlab_graph_free(g); }
};
struct StringDeleter {
  void operator()(char* s) const { coxlab_string_free(s); }
};

using GroupPtr     = std::unique_ptr<coxlab_group, GroupDeleter>;
using PartitionPtr = std::unique_ptr<coxlab_partition, PartitionDeleter>;
using GraphPtr     = std::unique_ptr<coxlab_graph, GraphDeleter>;
using StringPtr    = std::unique_ptr<char, StringDeleter>;

struct GroupOptions {
  std::string type;
  std::string matrix_file;
  unsigned    radius = 0;
};

void add_group_options(CLI::App* cmd, GroupOptions& opts, bool with_radius) {
  auto* type   = cmd->add_option("--type", opts.type, "Catalog type: A3, B3, D4, I2_5, H3, H4, F4");
  auto* matrix = cmd->add_option("--matrix", opts.matrix_file, "Coxeter matrix file");
  type->excludes(matrix);
  matrix->excludes(type);
  if (with_radius) {
    cmd->add_option("--radius", opts.radius,
                    "Conjugacy search radius (provisional classes); default exact");
  }
}

GroupPtr load_group(const GroupOptions& opts) {
  coxlab_group* raw = nullptr;
  if (!opts.type.empty()) {
    check(coxlab_group_from_catalog(opts.type.c_str(), &raw));
  } else if (!opts.matrix_file.empty()) {
    std::ifstream in(opts.matrix_file);
    if (!in) {
      throw InputError("cannot open matrix file '" + opts.matrix_file + "'");
    }
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    check(coxlab_group_from_matrix_text(text.c_str(), &raw));
  } else {
    throw InputError("one of --type or --matrix is required");
  }
  return GroupPtr(raw);
}

// fallback: radius to use when the exact partition is out of reach (0: none)
PartitionPtr load_partition(const coxlab_group* group, unsigned radius, unsigned fallback = 0) {
  coxlab_partition* raw    = nullptr;
  auto              status = coxlab_partition_compute(group, radius, &raw);
  if (status == COXLAB_ERR_ELEMENT_CAP_EXCEEDED && radius == 0 && fallback != 0) {
    std::cerr << "coxlab: " << coxlab_last_error() << "; using --radius " << fallback << "\n";
    status = coxlab_partition_compute(group, fallback, &raw);
  }
  if (status == COXLAB_ERR_ELEMENT_CAP_EXCEEDED) {
    throw InputError(std::string(coxlab_last_error()) + " (pass --radius R)");
  }
  check(status);
  return PartitionPtr(raw);
}

// "2 1 3" (1-indexed) -> {1, 0, 2}
std::vector<unsigned> parse_word(const std::string& text) {
  std::vector<unsigned> word;
  std::istringstream    in(text);
  for (std::string tok; in >> tok;) {
    std::size_t used  = 0;
    long        value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || value < 1) {
      throw InputError("invalid word letter '" + tok + "' (generators are numbered from 1)");
    }
    word.push_back(static_cast<unsigned>(value - 1));
  }
  return word;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) {
    throw InputError("cannot write '" + path + "'");
  }
  out << contents;
}

unsigned worker_count() {
  if (const char* env = std::getenv("COXLAB_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) {
        return static_cast<unsigned>(n);
      }
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

int exit_code(coxlab_verdict v) {
  return static_cast<int>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter groups, braid-move graphs and their cycle parity"};
  app.require_subcommand(1);

  GroupOptions opts;
  std::string  word_text;
  std::string  dot_file;
  std::string  json_file;
  bool         all_elements = false;
  long         max_length   = -1;
  std::size_t  length       = 0;
  std::size_t  samples      = 1000;
  std::uint64_t seed        = 42;

  auto* classes = app.add_subcommand("classes", "Conjugacy classes of generator pairs");
  add_group_options(classes, opts, true);

  auto* graph = app.add_subcommand("graph", "Graph of reduced expressions of an element");
  add_group_options(graph, opts, true);
  graph->add_option("--word", word_text, "Word, e.g. \"2 1 2 4\"")->required();
  graph->add_option("--dot", dot_file, "Write DOT to this file");
  graph->add_option("--json", json_file, "Write JSON to this file");

  auto* verify = app.add_subcommand("verify", "Check Has steps and cycle parity");
  add_group_options(verify, opts, true);
  auto* word_opt = verify->add_option("--word", word_text, "Word of the element to check");
  auto* all_opt  = verify->add_flag("--all-elements", all_elements, "Check every element");
  verify->add_option("--max-length", max_length, "Only elements up to this length")
      ->needs(all_opt);
  word_opt->excludes(all_opt);

  auto* inv = app.add_subcommand("invs", "Inversion word and Has support");
  add_group_options(inv, opts, true);
  inv->add_option("--word", word_text, "Word")->required();

  auto* expr = app.add_subcommand("expr-graph", "Braid component of length-K expressions");
  add_group_options(expr, opts, true);
  expr->add_option("--word", word_text, "Word of the element")->required();
  expr->add_option("--length", length, "Expression length K")->required();
  expr->add_option("--dot", dot_file, "Write DOT to this file");
  expr->add_option("--json", json_file, "Write JSON to this file");

  auto* props = app.add_subcommand("props", "Randomized property suites");
  add_group_options(props, opts, true);
  props->add_option("--samples", samples, "Samples per suite");
  props->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    const GroupPtr     group     = load_group(opts);
    const PartitionPtr partition =
        load_partition(group.get(), opts.radius, props->parsed() ? 4U : 0U);

    if (classes->parsed()) {
      char* out = nullptr;
      check(coxlab_partition_json(partition.get(), &out));
      std::cout << StringPtr(out).get();
      return 0;
    }

    if (graph->parsed() || expr->parsed()) {
      const auto    word = parse_word(word_text);
      coxlab_graph* raw  = nullptr;
      if (graph->parsed()) {
        check(coxlab_graph_reduced(partition.get(), word.data(), word.size(), &raw));
      } else {
        check(coxlab_graph_expressions(partition.get(), word.data(), word.size(), length, &raw));
      }
      const GraphPtr g(raw);
      char*          json = nullptr;
      if (graph->parsed()) {
        check(coxlab_graph_json(g.get(), &json));
      } else {
        // exploratory: findings are reported, not treated as errors
        coxlab_verdict verdict{};
        check(coxlab_graph_verify(g.get(), &verdict, &json));
      }
      const StringPtr json_text(json);
      std::cout << json_text.get();
      if (!json_file.empty()) {
        write_file(json_file, json_text.get());
      }
      if (!dot_file.empty()) {
        char* dot = nullptr;
        check(coxlab_graph_dot(g.get(), &dot));
        write_file(dot_file, StringPtr(dot).get());
      }
      return 0;
    }

    if (verify->parsed()) {
      coxlab_verdict verdict{};
      char*          json = nullptr;
      if (all_elements) {
        check(coxlab_verify_elements(partition.get(), max_length, worker_count(), &verdict, &json));
      } else if (!word_opt->empty()) {
        const auto    word = parse_word(word_text);
        coxlab_graph* raw  = nullptr;
        check(coxlab_graph_reduced(partition.get(), word.data(), word.size(), &raw));
        const GraphPtr g(raw);
        check(coxlab_graph_verify(g.get(), &verdict, &json));
      } else {
        throw InputError("verify needs --word or --all-elements");
      }
      std::cout << StringPtr(json).get();
      return exit_code(verdict);
    }

    if (inv->parsed()) {
      const auto word = parse_word(word_text);
      char*      json = nullptr;
      check(coxlab_invs_json(partition.get(), word.data(), word.size(), &json));
      std::cout << StringPtr(json).get();
      return 0;
    }

    if (props->parsed()) {
      coxlab_verdict verdict{};
      char*          json = nullptr;
      check(coxlab_properties(partition.get(), samples, seed, &verdict, &json));
      std::cout << StringPtr(json).get();
      return exit_code(verdict);
    }
  } catch (const InputError& e) {
    std::cerr << "coxlab: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
