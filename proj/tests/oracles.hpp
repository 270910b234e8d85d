#pragma once

// Concrete models used as independent references in tests. None of this
// touches the word-rewriting machinery of the library: elements are
// permutations, signed permutations or plane isometries, and lengths come
// from breadth-first search on the Cayley graph.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using State = std::vector<int>;

struct Model {
  std::size_t        rank = 0;
  State              identity;
  std::vector<State> gens;
  std::function<State(const State&, const State&)> compose;  // (a*b)(x) = a(b(x))
  std::function<State(const State&)>               inverse;

  State eval(const std::vector<std::uint8_t>& word) const {
    State x = identity;
    for (auto s : word) {
      x = compose(x, gens.at(s));
    }
    return x;
  }
  State conj(const State& q, const State& x) const { return compose(compose(q, x), inverse(q)); }
};

inline State perm_compose(const State& a, const State& b) {
  State r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] = a[b[i]];
  }
  return r;
}

inline State perm_inverse(const State& a) {
  State r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[a[i]] = static_cast<int>(i);
  }
  return r;
}

inline State perm_identity(std::size_t n) {
  State r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = static_cast<int>(i);
  }
  return r;
}

// A_n: S_{n+1} with s_i = (i, i+1).
inline Model type_a(std::size_t n) {
  Model m;
  m.rank     = n;
  m.identity = perm_identity(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    State s = m.identity;
    std::swap(s[i], s[i + 1]);
    m.gens.push_back(s);
  }
  m.compose = perm_compose;
  m.inverse = perm_inverse;
  return m;
}

// B_n: signed permutations of {±1..±n}, stored as permutations of 2n points
// (point 2i is +(i+1), point 2i+1 is -(i+1)). s_i swaps i and i+1 for i < n,
// s_n negates n.
inline Model type_b(std::size_t n) {
  Model m;
  m.rank     = n;
  m.identity = perm_identity(2 * n);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    State s = m.identity;
    std::swap(s[2 * i], s[2 * i + 2]);
    std::swap(s[2 * i + 1], s[2 * i + 3]);
    m.gens.push_back(s);
  }
  State neg = m.identity;
  std::swap(neg[2 * n - 2], neg[2 * n - 1]);
  m.gens.push_back(neg);
  m.compose = perm_compose;
  m.inverse = perm_inverse;
  return m;
}

// I_2(m): isometries x -> sigma*x + k of Z/m, stored as {k, sigma}.
// s: x -> -x, t: x -> 1 - x, so st is a rotation of order m.
inline Model dihedral(int order) {
  Model m;
  m.rank     = 2;
  m.identity = {0, 1};
  m.gens     = {{0, -1}, {1 % order, -1}};
  auto mod   = [order](int x) { return ((x % order) + order) % order; };
  m.compose  = [mod](const State& a, const State& b) {
    return State{mod(a[1] * b[0] + a[0]), a[1] * b[1]};
  };
  m.inverse = [mod](const State& a) { return State{mod(-a[1] * a[0]), a[1]}; };
  return m;
}

struct Cayley {
  std::map<State, std::size_t>   length;
  std::map<State, std::uint64_t> geodesics;  // number of reduced words
  std::vector<State>             elements;   // BFS order
};

// Breadth-first search from the identity; throws if the group exceeds cap.
inline Cayley cayley(const Model& m, std::size_t cap = 100000) {
  Cayley c;
  c.length[m.identity]    = 0;
  c.geodesics[m.identity] = 1;
  c.elements.push_back(m.identity);
  for (std::size_t head = 0; head < c.elements.size(); ++head) {
    const State x = c.elements[head];
    for (const auto& g : m.gens) {
      State y  = m.compose(x, g);
      auto  it = c.length.find(y);
      if (it == c.length.end()) {
        if (c.elements.size() >= cap) {
          throw std::runtime_error("oracle: group larger than cap");
        }
        c.length[y]    = c.length[x] + 1;
        c.geodesics[y] = c.geodesics[x];
        c.elements.push_back(y);
      } else if (it->second == c.length[x] + 1) {
        c.geodesics[y] += c.geodesics[x];
      }
    }
  }
  return c;
}

// Reflections t_i = (a_1..a_{i-1}) a_i (a_1..a_{i-1})^-1.
inline std::vector<State> inversion_word(const Model& m, const std::vector<std::uint8_t>& w) {
  std::vector<State> out;
  State              prefix = m.identity;
  for (auto s : w) {
    out.push_back(m.conj(prefix, m.gens[s]));
    prefix = m.compose(prefix, m.gens[s]);
  }
  return out;
}

inline std::size_t order(const Model& m, const State& x, std::size_t cap = 1000) {
  State y = x;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (y == m.identity) {
      return k;
    }
    y = m.compose(y, x);
  }
  throw std::runtime_error("oracle: order above cap");
}

inline std::vector<State> rho(const Model& m, const State& u, const State& v) {
  const State       uv = m.compose(u, v);
  const std::size_t n  = order(m, uv);
  std::vector<State> out;
  State              p = m.identity;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(m.compose(p, u));
    p = m.compose(p, uv);
  }
  return out;
}

inline bool is_subsequence(const std::vector<State>& hay, const std::vector<State>& needle) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < hay.size() && j < needle.size(); ++i) {
    if (hay[i] == needle[j]) {
      ++j;
    }
  }
  return j == needle.size();
}

using Pair = std::pair<State, State>;

// All simultaneous conjugates (x s x^-1, x t x^-1) of generator pairs s != t,
// grouped by the generator pair class they come from.
struct PairOrbits {
  std::set<Pair>                     all;
  std::vector<std::set<std::size_t>> classes;  // sets of indices s*rank+t
};

inline PairOrbits pair_orbits(const Model& m, const Cayley& c) {
  PairOrbits                      out;
  std::map<Pair, std::size_t>     first_pair;  // conjugate -> generator pair index
  const std::size_t               r = m.rank;
  std::vector<std::size_t>        parent(r * r);
  for (std::size_t i = 0; i < parent.size(); ++i) {
    parent[i] = i;
  }
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t t = 0; t < r; ++t) {
      if (s == t) {
        continue;
      }
      for (const auto& x : c.elements) {
        Pair p{m.conj(x, m.gens[s]), m.conj(x, m.gens[t])};
        out.all.insert(p);
        auto [it, fresh] = first_pair.emplace(p, s * r + t);
        if (!fresh) {
          parent[find(s * r + t)] = find(it->second);
        }
      }
    }
  }
  std::map<std::size_t, std::set<std::size_t>> groups;
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t t = 0; t < r; ++t) {
      if (s != t) {
        groups[find(s * r + t)].insert(s * r + t);
      }
    }
  }
  for (auto& [root, members] : groups) {
    out.classes.push_back(members);
  }
  return out;
}

// Has(w) restricted to `support`: pairs (u, v) with rho_{u,v} a subword.
inline std::set<Pair> has_set(const Model& m, const std::vector<std::uint8_t>& w,
                              const std::set<Pair>& support) {
  const auto     iw = inversion_word(m, w);
  std::set<Pair> out;
  for (std::size_t i = 0; i < iw.size(); ++i) {
    for (std::size_t j = 0; j < iw.size(); ++j) {
      if (i == j) {
        continue;
      }
      Pair p{iw[i], iw[j]};
      if (support.count(p) && is_subsequence(iw, rho(m, p.first, p.second))) {
        out.insert(p);
      }
    }
  }
  return out;
}

// Every pair of distinct reflections whose product has finite order.
inline std::set<Pair> all_reflection_pairs(const Model& m, const Cayley& c) {
  std::set<State> refl;
  for (const auto& x : c.elements) {
    for (const auto& g : m.gens) {
      refl.insert(m.conj(x, g));
    }
  }
  std::set<Pair> out;
  for (const auto& u : refl) {
    for (const auto& v : refl) {
      if (u != v) {
        out.insert({u, v});
      }
    }
  }
  return out;
}

}  // namespace oracle
