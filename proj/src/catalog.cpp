#include "coxlab/catalog.hpp"

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

  using Rows = std::vector<std::vector<unsigned>>;

  Rows commuting(std::size_t n) {
    Rows m(n, std::vector<unsigned>(n, 2));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  void link(Rows& m, std::size_t i, std::size_t j, unsigned value) {
    m[i][j] = m[j][i] = value;
  }

  Rows path(const std::vector<unsigned>& labels) {
    Rows m = commuting(labels.size() + 1);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      link(m, i, i + 1, labels[i]);
    }
    return m;
  }

  [[noreturn]] void unknown(std::string_view name) {
    throw Error(Errc::UnknownCatalogType, "unknown catalog type '" + std::string(name) + "'");
  }

  // Parses a parameter written as "3", "(3)", "_3" or "_inf".
  std::optional<unsigned> parameter(std::string_view text, bool allow_inf) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
      text = text.substr(1, text.size() - 2);
    } else if (!text.empty() && text.front() == '_') {
      text.remove_prefix(1);
    }
    if (allow_inf && (text == "inf" || text == "oo")) {
      return kInfinity;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
      return std::nullopt;
    }
    return value;
  }

}  // namespace

CoxeterMatrix catalog_matrix(std::string_view name) {
  if (name == "H3") {
    return CoxeterMatrix::validate(path({5, 3}));
  }
  if (name == "H4") {
    return CoxeterMatrix::validate(path({5, 3, 3}));
  }
  if (name == "F4") {
    return CoxeterMatrix::validate(path({3, 4, 3}));
  }
  if (name.starts_with("I2")) {
    auto m = parameter(name.substr(2), true);
    if (!m || *m < 2) {
      unknown(name);
    }
    Rows rows = commuting(2);
    link(rows, 0, 1, *m);
    return CoxeterMatrix::validate(rows);
  }
  if (name.empty()) {
    unknown(name);
  }
  const char family = name.front();
  auto       n      = parameter(name.substr(1), false);
  if (!n || *n > kMaxRank) {
    unknown(name);
  }
  switch (family) {
    case 'A': {
      if (*n < 1) {
        unknown(name);
      }
      return CoxeterMatrix::validate(path(std::vector<unsigned>(*n - 1, 3)));
    }
    case 'B': {
      if (*n < 2) {
        unknown(name);
      }
      std::vector<unsigned> labels(*n - 1, 3);
      labels.back() = 4;
      return CoxeterMatrix::validate(path(labels));
    }
    case 'D': {
      if (*n < 4) {
        unknown(name);
      }
      // chain s_1 ... s_{n-1}, with s_n attached to s_{n-2}
      Rows rows = path(std::vector<unsigned>(*n - 2, 3));
      Rows full = commuting(*n);
      for (std::size_t i = 0; i + 1 < *n; ++i) {
        for (std::size_t j = 0; j + 1 < *n; ++j) {
          full[i][j] = rows[i][j];
        }
      }
      link(full, *n - 3, *n - 1, 3);
      return CoxeterMatrix::validate(full);
    }
    default: unknown(name);
  }
}

}  // namespace coxlab
