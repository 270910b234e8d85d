#include "coxlab/matrix_file.hpp"

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

  std::vector<std::vector<std::string>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      std::istringstream       ls(line);
      std::vector<std::string> tokens;
      for (std::string tok; ls >> tok;) {
        tokens.push_back(tok);
      }
      if (!tokens.empty()) {
        lines.push_back(std::move(tokens));
      }
    }
    return lines;
  }

  unsigned parse_entry(const std::string& tok, std::size_t row) {
    if (tok == "inf") {
      return kInfinity;
    }
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value == 0) {
      throw Error(Errc::ParseError, "row " + std::to_string(row + 1) + ": bad entry '" + tok
                                        + "' (expected a positive integer or inf)");
    }
    return value;
  }

}  // namespace

CoxeterMatrix parse_matrix_file(std::string_view text) {
  const auto lines = tokenize_lines(text);
  if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "rank") {
    throw Error(Errc::ParseError, "matrix file must start with 'rank n'");
  }
  std::size_t n = 0;
  {
    const std::string& tok = lines[0][1];
    auto [ptr, ec]         = std::from_chars(tok.data(), tok.data() + tok.size(), n);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw Error(Errc::ParseError, "bad rank '" + tok + "'");
    }
  }
  if (lines.size() != n + 1) {
    throw Error(Errc::ParseError, "expected " + std::to_string(n) + " matrix rows, found "
                                      + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<unsigned>> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& tokens = lines[i + 1];
    if (tokens.size() != n) {
      throw Error(Errc::ParseError, "row " + std::to_string(i + 1) + " has "
                                        + std::to_string(tokens.size()) + " entries, expected "
                                        + std::to_string(n));
    }
    for (const auto& tok : tokens) {
      raw[i].push_back(parse_entry(tok, i));
    }
  }
  return CoxeterMatrix::validate(raw);
}

std::string format_matrix_file(const CoxeterMatrix& matrix) {
  std::ostringstream out;
  out << "rank " << matrix.rank() << '\n';
  for (std::size_t i = 0; i < matrix.rank(); ++i) {
    for (std::size_t j = 0; j < matrix.rank(); ++j) {
      out << (j ? " " : "");
      if (matrix.is_finite(i, j)) {
        out << matrix(i, j);
      } else {
        out << "inf";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace coxlab
