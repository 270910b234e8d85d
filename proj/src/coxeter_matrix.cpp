#include "coxlab/coxeter_matrix.hpp"

#include <algorithm>
#include <string>

#include "coxlab/error.hpp"

namespace coxlab {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DiagonalNotOne: return "DiagonalNotOne";
    case Errc::OffDiagonalBelowTwo: return "OffDiagonalBelowTwo";
    case Errc::Asymmetric: return "Asymmetric";
    case Errc::NotSquare: return "NotSquare";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::InvalidLetter: return "InvalidLetter";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ElementCapExceeded: return "ElementCapExceeded";
    case Errc::LengthParityMismatch: return "LengthParityMismatch";
    case Errc::NotABraidStep: return "NotABraidStep";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownCatalogType: return "UnknownCatalogType";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

CoxeterMatrix CoxeterMatrix::validate(
    const std::vector<std::vector<unsigned>>& raw) {
  const std::size_t n = raw.size();
  if (n > kMaxRank) {
    throw Error(Errc::RankTooLarge,
                "rank " + std::to_string(n) + " exceeds the supported maximum "
                    + std::to_string(kMaxRank));
  }
  for (const auto& row : raw) {
    if (row.size() != n) {
      throw Error(Errc::NotSquare, "Coxeter matrix is not square");
    }
  }
  auto where = [](std::size_t i, std::size_t j) {
    return " at (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")";
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i][i] != 1) {
      throw Error(Errc::DiagonalNotOne, "diagonal entry is not 1" + where(i, i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      if (raw[i][j] < 2) {
        throw Error(Errc::OffDiagonalBelowTwo,
                    "off-diagonal entry is below 2" + where(i, j));
      }
      if (raw[i][j] != raw[j][i]) {
        throw Error(Errc::Asymmetric, "matrix is not symmetric" + where(i, j));
      }
    }
  }
  CoxeterMatrix m;
  m.rank_ = n;
  m.entries_.reserve(n * n);
  for (const auto& row : raw) {
    m.entries_.insert(m.entries_.end(), row.begin(), row.end());
  }
  return m;
}

std::vector<std::vector<unsigned>> CoxeterMatrix::rows() const {
  std::vector<std::vector<unsigned>> out(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    out[i].assign(entries_.begin() + i * rank_,
                  entries_.begin() + (i + 1) * rank_);
  }
  return out;
}

namespace {

// Whether one connected component of the Coxeter diagram is of finite type.
bool finite_component(const CoxeterMatrix& m, const std::vector<std::size_t>& nodes) {
  const std::size_t n = nodes.size();
  if (n <= 2) {
    return n < 2 || m.is_finite(nodes[0], nodes[1]);
  }
  std::vector<std::size_t> degree(n, 0);
  std::size_t              edges = 0, heavy = 0;
  unsigned                 label = 3;
  std::size_t              heavy_a = 0, heavy_b = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const unsigned e = m(nodes[i], nodes[j]);
      if (e == 2) {
        continue;
      }
      if (e == kInfinity || e > 5) {
        return false;
      }
      ++edges;
      ++degree[i];
      ++degree[j];
      if (e > 3) {
        ++heavy;
        label   = e;
        heavy_a = i;
        heavy_b = j;
      }
    }
  }
  // Connected with n - 1 edges: a tree.
  if (edges != n - 1 || heavy > 1) {
    return false;
  }
  const std::size_t branch =
      static_cast<std::size_t>(std::count_if(degree.begin(), degree.end(), [](auto d) { return d >= 3; }));
  if (heavy == 1) {
    if (branch != 0) {
      return false;
    }
    const bool at_end = degree[heavy_a] == 1 || degree[heavy_b] == 1;
    if (label == 4) {
      return at_end || n == 4;  // B_n, or F4 with the 4 in the middle
    }
    return at_end && n <= 4;  // H3, H4
  }
  if (branch == 0) {
    return true;  // A_n
  }
  if (branch > 1) {
    return false;
  }
  std::size_t center = 0;
  while (degree[center] < 3) {
    ++center;
  }
  if (degree[center] != 3) {
    return false;
  }
  // Arm lengths p <= q <= r; finite iff 1/(p+1) + 1/(q+1) + 1/(r+1) > 1.
  std::vector<std::size_t> arms;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == center || m(nodes[center], nodes[k]) == 2) {
      continue;
    }
    std::size_t len = 1, prev = center, cur = k;
    for (;;) {
      std::size_t next = n;
      for (std::size_t x = 0; x < n; ++x) {
        if (x != prev && x != cur && m(nodes[cur], nodes[x]) != 2) {
          next = x;
        }
      }
      if (next == n) {
        break;
      }
      prev = cur;
      cur  = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  const std::size_t p = arms[0] + 1, q = arms[1] + 1, r = arms[2] + 1;
  return q * r + p * r + p * q > p * q * r;
}

}  // namespace

std::vector<bool> finite_components(const CoxeterMatrix& m) {
  const std::size_t n = m.rank();
  std::vector<bool> seen(n, false);
  std::vector<bool> finite(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) {
      continue;
    }
    std::vector<std::size_t> nodes{start};
    seen[start] = true;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!seen[j] && m(nodes[head], j) != 2 && j != nodes[head]) {
          seen[j] = true;
          nodes.push_back(j);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    const bool ok = finite_component(m, nodes);
    for (std::size_t v : nodes) {
      finite[v] = ok;
    }
  }
  return finite;
}

bool finite_type(const CoxeterMatrix& m) {
  const auto f = finite_components(m);
  return std::all_of(f.begin(), f.end(), [](bool b) { return b; });
}

}  // namespace coxlab
