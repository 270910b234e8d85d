#include "doctest.h"
#include "oracles.hpp"

#include <coxlab/catalog.hpp>
#include <coxlab/coxeter_matrix.hpp>
#include <coxlab/error.hpp>
#include <coxlab/group.hpp>

#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

using namespace coxlab;

namespace {

Errc validation_error(const std::vector<std::vector<unsigned>>& raw) {
  try {
    CoxeterMatrix::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("matrix accepted");
  return Errc::Internal;
}

Word random_word(std::mt19937_64& rng, std::size_t rank, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<unsigned>    gen(0, static_cast<unsigned>(rank - 1));
  Word                                       w(len(rng));
  for (auto& x : w) {
    x = static_cast<Generator>(gen(rng));
  }
  return w;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("valid matrices") {
    CHECK(CoxeterMatrix::validate({{1, 3}, {3, 1}}).rank() == 2);
    CHECK(CoxeterMatrix::validate({{1, 2}, {2, 1}})(0, 1) == 2);
    CHECK(CoxeterMatrix::validate({}).rank() == 0);
    auto inf = CoxeterMatrix::validate({{1, kInfinity}, {kInfinity, 1}});
    CHECK_FALSE(inf.is_finite(0, 1));
  }

  TEST_CASE("invalid matrices") {
    CHECK(validation_error({{1, 1}, {1, 1}}) == Errc::OffDiagonalBelowTwo);
    CHECK(validation_error({{2, 3}, {3, 1}}) == Errc::DiagonalNotOne);
    CHECK(validation_error({{1, 3}, {4, 1}}) == Errc::Asymmetric);
    CHECK(validation_error({{1, 3}, {3}}) == Errc::NotSquare);
    std::vector<std::vector<unsigned>> big(kMaxRank + 1, std::vector<unsigned>(kMaxRank + 1, 2));
    for (std::size_t i = 0; i < big.size(); ++i) {
      big[i][i] = 1;
    }
    CHECK(validation_error(big) == Errc::RankTooLarge);
  }

  TEST_CASE("catalog") {
    CHECK(catalog_matrix("A3").rows() ==
          std::vector<std::vector<unsigned>>{{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
    CHECK(catalog_matrix("A(3)") == catalog_matrix("A3"));
    CHECK(catalog_matrix("B3")(1, 2) == 4);
    CHECK(catalog_matrix("B3")(0, 1) == 3);
    auto d4 = catalog_matrix("D4");
    CHECK(d4(1, 3) == 3);
    CHECK(d4(2, 3) == 2);
    CHECK(catalog_matrix("I2_5")(0, 1) == 5);
    CHECK(catalog_matrix("I2(4)")(0, 1) == 4);
    CHECK_FALSE(catalog_matrix("I2_inf").is_finite(0, 1));
    CHECK(catalog_matrix("H3")(0, 1) == 5);
    CHECK(catalog_matrix("F4")(1, 2) == 4);
    CHECK_THROWS_AS(catalog_matrix("Z9"), Error);
    CHECK_THROWS_AS(catalog_matrix("D3"), Error);
  }
}

TEST_SUITE("finite-type") {
  CoxeterMatrix from_edges(std::size_t n, const std::vector<std::tuple<int, int, unsigned>>& edges) {
    std::vector<std::vector<unsigned>> raw(n, std::vector<unsigned>(n, 2));
    for (std::size_t i = 0; i < n; ++i) {
      raw[i][i] = 1;
    }
    for (auto [a, b, m] : edges) {
      raw[a][b] = raw[b][a] = m;
    }
    return CoxeterMatrix::validate(raw);
  }

  // Star with arms of the given lengths around node 0.
  CoxeterMatrix star(std::vector<int> arms) {
    std::vector<std::tuple<int, int, unsigned>> edges;
    int                                         next = 1;
    for (int len : arms) {
      int prev = 0;
      for (int k = 0; k < len; ++k) {
        edges.emplace_back(prev, next, 3);
        prev = next++;
      }
    }
    return from_edges(static_cast<std::size_t>(next), edges);
  }

  TEST_CASE("catalog types are finite") {
    for (const char* t : {"A1", "A7", "B2", "B6", "D4", "D7", "F4", "H3", "H4", "I2_5", "I2_12"}) {
      CHECK_MESSAGE(finite_type(catalog_matrix(t)), t);
    }
    CHECK(finite_type(CoxeterMatrix::validate({})));
    CHECK(finite_type(star({1, 2, 2})));  // E6
    CHECK(finite_type(star({1, 2, 3})));  // E7
    CHECK(finite_type(star({1, 2, 4})));  // E8
    CHECK(finite_type(from_edges(4, {{0, 1, 5}, {2, 3, 4}})));
  }

  TEST_CASE("infinite diagrams") {
    CHECK_FALSE(finite_type(catalog_matrix("I2_inf")));
    CHECK_FALSE(finite_type(star({2, 2, 2})));     // affine E6
    CHECK_FALSE(finite_type(star({1, 3, 3})));     // affine E7
    CHECK_FALSE(finite_type(star({1, 2, 5})));     // affine E8
    CHECK_FALSE(finite_type(star({1, 1, 1, 1})));  // affine D4
    CHECK_FALSE(finite_type(from_edges(3, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}})));
    CHECK_FALSE(finite_type(from_edges(5, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}, {3, 4, 3}})));
    CHECK_FALSE(finite_type(from_edges(3, {{0, 1, 4}, {1, 2, 4}})));
    CHECK_FALSE(finite_type(from_edges(5, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}})));
    CHECK_FALSE(finite_type(from_edges(3, {{0, 1, 6}, {1, 2, 3}})));
  }

  TEST_CASE("agrees with enumeration in rank 3") {
    std::mt19937_64 rng(17);
    const unsigned  labels[] = {2, 3, 4, 5, 6, kInfinity};
    for (int trial = 0; trial < 150; ++trial) {
      auto m = from_edges(3, {{0, 1, labels[rng() % 6]}, {1, 2, labels[rng() % 6]},
                              {0, 2, labels[rng() % 6]}});
      CoxeterGroup g(m);
      bool         bounded = true;
      try {
        g.enumerate(std::nullopt, 1000);
      } catch (const Error&) {
        bounded = false;
      }
      CHECK(finite_type(m) == bounded);
    }
  }
}

TEST_SUITE("group") {
  TEST_CASE("reduce") {
    CoxeterGroup a2(catalog_matrix("A2"));
    CoxeterGroup a3(catalog_matrix("A3"));
    CHECK(a2.reduce({0, 0}).is_identity());
    CHECK(a3.reduce({1, 2, 0}).word() == Word{1, 0, 2});
    CHECK(a2.reduce({0, 1, 0, 1}).word() == Word{1, 0});
    CHECK_THROWS_AS(a2.reduce({0, 2}), Error);
  }

  TEST_CASE("multiply, inverse, conjugate") {
    CoxeterGroup a2(catalog_matrix("A2"));
    const auto   s1 = a2.generator(0);
    const auto   s2 = a2.generator(1);
    CHECK(a2.multiply(s1, s1).is_identity());
    CHECK(a2.inverse(a2.reduce({0, 1})) == a2.reduce({1, 0}));
    CHECK(a2.conjugate(a2.reduce({0, 1, 0}), s1) == s2);
    CHECK(a2.power(a2.reduce({0, 1}), 3).is_identity());
  }

  TEST_CASE("descents") {
    CoxeterGroup a3(catalog_matrix("A3"));
    auto         pi = a3.reduce({1, 0, 2});
    CHECK(a3.right_descents(pi) == 0b101);
    CHECK(a3.left_descents(pi) == 0b010);
  }

  TEST_CASE("order of product") {
    CoxeterGroup a2(catalog_matrix("A2"));
    CoxeterGroup a1a1(CoxeterMatrix::validate({{1, 2}, {2, 1}}));
    CHECK(a2.order_of_product(a2.generator(0), a2.generator(1)) == 3u);
    CHECK(a1a1.order_of_product(a1a1.generator(0), a1a1.generator(1)) == 2u);

    // (1 3) * (2 3) is a 3-cycle.
    auto      t13 = a2.reduce({0, 1, 0});
    auto      m   = oracle::type_a(2);
    const int expected =
        static_cast<int>(oracle::order(m, m.compose(m.eval({0, 1, 0}), m.gens[1])));
    CHECK(expected == 3);
    CHECK(a2.order_of_product(t13, a2.generator(1), 10) == 3u);

    CoxeterGroup free2(CoxeterMatrix::validate({{1, kInfinity}, {kInfinity, 1}}));
    CHECK_FALSE(free2.order_of_product(free2.generator(0), free2.generator(1), 20).has_value());
  }

  TEST_CASE("rho") {
    CoxeterGroup a1a1(CoxeterMatrix::validate({{1, 2}, {2, 1}}));
    auto         r2 = a1a1.rho(a1a1.simple_reflection(0), a1a1.simple_reflection(1));
    REQUIRE(r2.entries.size() == 2);
    CHECK(r2.entries[0].word() == Word{0});
    CHECK(r2.entries[1].word() == Word{1});

    CoxeterGroup a2(catalog_matrix("A2"));
    auto         r3 = a2.rho(a2.simple_reflection(0), a2.simple_reflection(1));
    REQUIRE(r3.entries.size() == 3);
    CHECK(r3.entries[1].word() == a2.reduce({0, 1, 0}).word());
    CHECK(r3.entries[2].word() == Word{1});

    auto rev = reversal(r3);
    auto r3op = a2.rho(a2.simple_reflection(1), a2.simple_reflection(0));
    CHECK(rev.entries == r3op.entries);
    CHECK(reversal(rev).entries == r3.entries);

    CoxeterGroup b2(catalog_matrix("B2"));
    auto         r4 = b2.rho(b2.simple_reflection(0), b2.simple_reflection(1));
    REQUIRE(r4.entries.size() == 4);
    auto model = oracle::type_b(2);
    auto ref   = oracle::rho(model, model.gens[0], model.gens[1]);
    REQUIRE(ref.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(model.eval(r4.entries[i].word()) == ref[i]);
    }
    CHECK(r4.entries[1].word() == Word{0, 1, 0});
    CHECK(r4.entries[2].word() == Word{1, 0, 1});

    CoxeterGroup free2(CoxeterMatrix::validate({{1, kInfinity}, {kInfinity, 1}}));
    CHECK_THROWS_AS(free2.rho(free2.simple_reflection(0), free2.simple_reflection(1), 16), Error);
  }

  TEST_CASE("conjugated rho reversal in A3") {
    CoxeterGroup    a3(catalog_matrix("A3"));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      auto q  = a3.reduce(random_word(rng, 3, 8));
      auto s  = a3.conjugate(q, a3.simple_reflection(0));
      auto t  = a3.conjugate(q, a3.simple_reflection(1));
      auto st = a3.rho(s, t);
      auto ts = a3.rho(t, s);
      CHECK(reversal(st).entries == ts.entries);
    }
  }

  TEST_CASE("reduced words and enumeration") {
    CoxeterGroup a3(catalog_matrix("A3"));
    auto         all = a3.enumerate(std::nullopt, 1000);
    CHECK(all.size() == 24);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(a3.reduced_words(a3.reduce({1, 0, 2})) == std::vector<Word>{{1, 0, 2}, {1, 2, 0}});
    CHECK(a3.enumerate(2, 1000).size() == 1 + 3 + 5);

    CoxeterGroup free2(CoxeterMatrix::validate({{1, kInfinity}, {kInfinity, 1}}));
    CHECK_THROWS_AS(free2.enumerate(std::nullopt, 100), Error);
    CHECK(free2.enumerate(3, 100).size() == 7);
  }

  TEST_CASE("long words in a hyperbolic group") {
    // Root coefficients grow exponentially here, beyond long double range.
    CoxeterGroup g(CoxeterMatrix::validate(
        {{1, 3, 2, kInfinity}, {3, 1, 5, 2}, {2, 5, 1, 3}, {kInfinity, 2, 3, 1}}));
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 12; ++trial) {
      Word w = random_word(rng, g.rank(), 400);
      auto a = g.reduce(w);
      CHECK(a.length() <= w.size());
      CHECK(a.length() % 2 == w.size() % 2);
      CHECK(g.reduce(a.word()) == a);
      CHECK(g.reduce_exact(w) == a);
      CHECK(g.multiply(a, g.reduce(Word(w.rbegin(), w.rend()))).is_identity());
    }
    const Element x = g.reduce({0, 1, 2, 3, 1, 0, 3});
    Element       p = x;
    for (int k = 2; k <= 40; ++k) {
      const Element next = g.multiply(p, x);
      CHECK(next.length() > p.length());
      CHECK(g.multiply(next, g.inverse(x)) == p);
      p = next;
    }
    const auto r = g.conjugate(x, g.simple_reflection(1));
    CHECK_FALSE(g.order_of_product(r, g.simple_reflection(3)).has_value());
  }

  TEST_CASE("roots of reflections") {
    for (const char* type : {"B3", "H3", "F4"}) {
      CoxeterGroup    g(catalog_matrix(type));
      std::mt19937_64 rng(5);
      for (int trial = 0; trial < 60; ++trial) {
        const auto q = g.reduce(random_word(rng, g.rank(), 12));
        const auto r = g.conjugate(q, g.simple_reflection(trial % g.rank()));
        const auto beta = g.root(r);
        // s r s has root s(beta), up to sign
        for (std::size_t s = 0; s < g.rank(); ++s) {
          auto moved = beta;
          long double b = 0.0L;
          for (std::size_t j = 0; j < g.rank(); ++j) {
            b += beta[j] * (j == s ? 2.0L
                                   : -2.0L * std::cos(std::numbers::pi_v<long double>
                                                      / g.matrix()(s, j)));
          }
          moved[s] -= b;
          const auto conj = g.root(g.conjugate_by_generator(static_cast<Generator>(s), r));
          const long double sign = r == g.simple_reflection(static_cast<Generator>(s)) ? -1 : 1;
          for (std::size_t j = 0; j < g.rank(); ++j) {
            CHECK(static_cast<double>(conj[j]) ==
                  doctest::Approx(static_cast<double>(sign * moved[j])).epsilon(1e-9));
          }
        }
      }
    }
  }

  TEST_CASE("order of reflection products agrees with powering") {
    std::vector<CoxeterMatrix> matrices = {catalog_matrix("H3"), catalog_matrix("D4")};
    matrices.push_back(CoxeterMatrix::validate({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}));
    matrices.push_back(CoxeterMatrix::validate({{1, 7, 3}, {7, 1, 4}, {3, 4, 1}}));
    std::mt19937_64 rng(23);
    for (const auto& m : matrices) {
      CoxeterGroup g(m);
      for (int trial = 0; trial < 80; ++trial) {
        const auto u = g.conjugate(g.reduce(random_word(rng, g.rank(), 4)),
                                   g.simple_reflection(trial % g.rank()));
        const auto v = g.conjugate(g.reduce(random_word(rng, g.rank(), 4)),
                                   g.simple_reflection((trial / 3) % g.rank()));
        CHECK(g.order_of_product(u, v, 12) == g.order_of_product(u.element(), v.element(), 12));
      }
    }
  }
}

TEST_SUITE("oracle-equivalence") {
  // Lengths, equality and reduced-word counts against the concrete models.
  void check_against(const char* type, const oracle::Model& model, std::uint64_t seed) {
    CoxeterGroup    g(catalog_matrix(type));
    auto            cay = oracle::cayley(model);
    std::mt19937_64 rng(seed);
    CHECK(g.enumerate(std::nullopt, 100000).size() == cay.elements.size());
    for (int trial = 0; trial < 200; ++trial) {
      Word a  = random_word(rng, g.rank(), 14);
      Word b  = random_word(rng, g.rank(), 14);
      auto ea = g.reduce(a);
      auto eb = g.reduce(b);
      CHECK(ea.length() == cay.length.at(model.eval(a)));
      CHECK(model.eval(ea.word()) == model.eval(a));
      CHECK((ea == eb) == (model.eval(a) == model.eval(b)));
      auto prod = g.multiply(ea, eb);
      CHECK(model.eval(prod.word()) == model.compose(model.eval(a), model.eval(b)));
      CHECK(model.eval(g.inverse(ea).word()) == model.inverse(model.eval(a)));
      if (trial % 10 == 0) {
        CHECK(g.reduced_words(ea).size() == cay.geodesics.at(model.eval(a)));
      }
    }
  }

  TEST_CASE("type A") {
    check_against("A3", oracle::type_a(3), 1);
    check_against("A4", oracle::type_a(4), 2);
  }
  TEST_CASE("type B") {
    check_against("B2", oracle::type_b(2), 3);
    check_against("B3", oracle::type_b(3), 4);
  }
  TEST_CASE("normal form is the least word of its braid orbit") {
    std::vector<CoxeterMatrix> matrices = {catalog_matrix("H3"), catalog_matrix("F4"),
                                           catalog_matrix("D5"), catalog_matrix("H4")};
    matrices.push_back(CoxeterMatrix::validate({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}));
    matrices.push_back(CoxeterMatrix::validate({{1, 7, 2}, {7, 1, kInfinity}, {2, kInfinity, 1}}));
    matrices.push_back(CoxeterMatrix::validate(
        {{1, 3, 2, kInfinity}, {3, 1, 5, 2}, {2, 5, 1, 3}, {kInfinity, 2, 3, 1}}));
    std::mt19937_64 rng(31);
    for (const auto& m : matrices) {
      CoxeterGroup g(m);
      for (int trial = 0; trial < 40; ++trial) {
        auto a     = g.reduce(random_word(rng, g.rank(), 16));
        auto words = g.reduced_words(a);
        CHECK(words.front() == a.word());
        for (std::size_t i = 0; i < words.size(); i += 7) {
          CHECK(g.reduce(words[i]) == a);
        }
      }
    }
  }

  TEST_CASE("exact reduction matches") {
    std::vector<CoxeterMatrix> matrices = {catalog_matrix("A4"), catalog_matrix("B4"),
                                           catalog_matrix("H4"), catalog_matrix("I2_inf")};
    matrices.push_back(CoxeterMatrix::validate({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}));
    matrices.push_back(CoxeterMatrix::validate({{1, 7, 3}, {7, 1, 4}, {3, 4, 1}}));
    std::mt19937_64 rng(37);
    for (const auto& m : matrices) {
      CoxeterGroup g(m);
      for (int trial = 0; trial < 150; ++trial) {
        const Word w = random_word(rng, g.rank(), 40);
        CHECK(g.reduce_exact(w) == g.reduce(w));
      }
    }
    oracle::Model a3 = oracle::type_a(3);
    CoxeterGroup  g(catalog_matrix("A3"));
    auto          cay = oracle::cayley(a3);
    for (int trial = 0; trial < 100; ++trial) {
      const Word w = random_word(rng, 3, 20);
      CHECK(g.reduce_exact(w).length() == cay.length.at(a3.eval(w)));
    }
  }

  TEST_CASE("roots in type A") {
    // The reflection swapping i < j has root alpha_i + ... + alpha_(j-1).
    CoxeterGroup  g(catalog_matrix("A4"));
    oracle::Model model = oracle::type_a(4);
    for (const auto& e : g.enumerate(std::nullopt, 1000)) {
      for (Generator s = 0; s < 4; ++s) {
        const auto  r    = g.conjugate(e, g.simple_reflection(s));
        const auto  perm = model.eval(r.word());
        std::size_t i = 5, j = 0;
        for (std::size_t k = 0; k < perm.size(); ++k) {
          if (perm[k] != static_cast<int>(k)) {
            i = std::min(i, k);
            j = std::max(j, k);
          }
        }
        const auto beta = g.root(r);
        for (std::size_t k = 0; k < 4; ++k) {
          CHECK(beta[k] == ((k >= i && k < j) ? 1.0L : 0.0L));
        }
      }
    }
  }

  TEST_CASE("dihedral") {
    for (int m = 2; m <= 7; ++m) {
      check_against(("I2_" + std::to_string(m)).c_str(), oracle::dihedral(m), 10 + m);
    }
  }
}
