#include <doctest.h>

#include "lrc/cluster.hpp"
#include "lrc/grassmannian.hpp"
#include "oracles.hpp"

#include <random>

using namespace lrc;

namespace {

// Random skew-symmetrizable m x n matrix: D B skew-symmetric for random D.
IntMatrix random_exchange(std::mt19937_64& rng, int n, int extra) {
  std::uniform_int_distribution<int> dd(1, 2), entry(-2, 2), coin(0, 2);
  std::vector<int> d(n);
  for (auto& v : d) v = dd(rng);
  IntMatrix b(n + extra, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) == 0) continue;
      const int base = entry(rng);
      const int l = std::lcm(d[i], d[j]);
      // d_i b_ij = base * l = -d_j b_ji
      b[i][j] = base * l / d[i];
      b[j][i] = -base * l / d[j];
    }
  }
  for (int i = n; i < n + extra; ++i) {
    for (int j = 0; j < n; ++j) b[i][j] = entry(rng);
  }
  return b;
}

IntMatrix random_mutations(IntMatrix b, int steps, std::mt19937_64& rng) {
  const int n = static_cast<int>(b.front().size());
  for (int s = 0; s < steps; ++s) b = mutate_matrix(b, static_cast<int>(rng() % n) + 1);
  return b;
}

IntMatrix quiver_for(const char* name) {
  return exchange_matrix_for_cartan(CartanMatrix::parse(name)).entries();
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("matrix mutation examples") {
  CHECK(mutate_matrix(IntMatrix{{0, 1}, {-1, 0}}, 1) == IntMatrix{{0, -1}, {1, 0}});
  CHECK(mutate_matrix(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}, 2) ==
        IntMatrix{{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}});
  CHECK_THROWS_AS(mutate_matrix(IntMatrix{{0, 1}, {-1, 0}}, 3), DomainError);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(ExchangeMatrix({{0, 1, 0}}), DomainError);
}

TEST_CASE("skew-symmetrizability") {
  CHECK(is_skew_symmetrizable({{0, 1}, {-1, 0}}) == std::vector<int>{1, 1});
  CHECK(is_skew_symmetrizable({{0, 1}, {-2, 0}}) == std::vector<int>{2, 1});
  CHECK_FALSE(is_skew_symmetrizable({{0, 1}, {1, 0}}).has_value());
  CHECK_FALSE(is_skew_symmetrizable({{0, 1, 1}, {-2, 0, 1}, {-1, -1, 0}}).has_value());
}

TEST_CASE("Cartan companion") {
  CHECK(cartan_companion({{0, 1}, {-1, 0}}) == IntMatrix{{2, -1}, {-1, 2}});
  CHECK(cartan_companion({{0, 2}, {-2, 0}}) == IntMatrix{{2, -2}, {-2, 2}});
  CHECK(cartan_companion({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}) == CartanMatrix::of_type('A', 3).entries());
  for (const char* name : {"A4", "B3", "C3", "D5", "G2", "F4", "E6"}) {
    CHECK(cartan_companion(quiver_for(name)) == CartanMatrix::parse(name).entries());
  }
}

TEST_CASE("property: mutation involution, principal part and symmetrizer") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const int extra = static_cast<int>(rng() % 3);
    const IntMatrix b = random_exchange(rng, n, extra);
    const auto d = is_skew_symmetrizable(IntMatrix(b.begin(), b.begin() + n));
    REQUIRE(d.has_value());
    const int k = static_cast<int>(rng() % n) + 1;
    const IntMatrix once = mutate_matrix(b, k);
    CHECK(mutate_matrix(once, k) == b);
    CHECK(IntMatrix(once.begin(), once.begin() + n) == mutate_matrix(IntMatrix(b.begin(), b.begin() + n), k));
    const auto d2 = is_skew_symmetrizable(IntMatrix(once.begin(), once.begin() + n));
    REQUIRE(d2.has_value());
    CHECK(*d2 == *d);
  }
}

TEST_CASE("property: seed involution and exchange symmetry") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const ExchangeMatrix b(random_exchange(rng, n, static_cast<int>(rng() % 2)));
    Seed s = Seed::initial(b);
    for (int step = 0; step < 2; ++step) s = mutate_seed(s, static_cast<int>(rng() % n) + 1);
    const int k = static_cast<int>(rng() % n) + 1;
    const Seed t = mutate_seed(s, k);
    CHECK(mutate_seed(t, k) == s);
    const auto [p, q] = exchange_monomials(s, k);
    CHECK(s.cluster[k - 1] * t.cluster[k - 1] == p + q);
    const auto [p2, q2] = exchange_monomials(t, k);
    CHECK(p + q == p2 + q2);
  }
}

TEST_CASE("seed mutation examples") {
  // Rank 1 with two coefficients: x x' = p2 p3 + 1.
  Seed s = Seed::initial(ExchangeMatrix({{0}, {1}, {1}}), {"x", "pb", "pc"});
  const Seed t = mutate_seed(s, 1);
  CHECK(t.cluster[0].to_string(t.names) == "x^-1*pb*pc + x^-1");
  CHECK(exchange_relation_text({"a"}, {"b", "c"}, ExchangeMatrix({{0}, {1}, {1}}), 1, "d") == "a*d = 1 + b*c");
  // x2 x13 = x1 x23 + x3 x12.
  CHECK(exchange_relation_text({"x2"}, {"x1", "x23", "x3", "x12"}, ExchangeMatrix({{0}, {1}, {1}, {-1}, {-1}}), 1,
                               "x13") == "x2*x13 = x1*x23 + x12*x3");
  const Seed a2 = mutate_seed(Seed::initial(ExchangeMatrix({{0, 1}, {-1, 0}})), 1);
  CHECK(a2.cluster[0].to_string(a2.names) == "x1^-1*x2 + x1^-1");
  CHECK_THROWS_AS(mutate_seed(a2, 0), DomainError);
}

TEST_CASE("exchange graphs of finite type") {
  const auto a2 = enumerate_exchange_graph(ExchangeMatrix({{0, 1}, {-1, 0}}));
  CHECK(a2.complete);
  CHECK(a2.variables.size() == 5);
  CHECK(a2.clusters.size() == 5);
  CHECK(a2.edges.size() == 5);
  for (int n = 1; n <= 4; ++n) {
    const auto a = CartanMatrix::of_type('A', n);
    const auto g = enumerate_exchange_graph(exchange_matrix_for_cartan(a));
    CHECK(g.complete);
    CHECK(g.variables.size() == static_cast<std::size_t>(n * (n + 3) / 2));
    CHECK(g.variables.size() == n + positive_roots(a).size());
    CHECK(g.clusters.size() == oracle::catalan(n + 1));
    CHECK(g.clusters.size() == triangulations(n + 3).size());
    CHECK(g.edges.size() == g.clusters.size() * n / 2);
  }
  const auto b2 = enumerate_exchange_graph(exchange_matrix_for_cartan(CartanMatrix::of_type('B', 2)));
  CHECK(b2.variables.size() == 6);
  CHECK(b2.clusters.size() == 6);
  const auto d4 = enumerate_exchange_graph(exchange_matrix_for_cartan(CartanMatrix::of_type('D', 4)));
  CHECK(d4.variables.size() == 16);
  CHECK(d4.clusters.size() == 50);
}

TEST_CASE("exchange graph caps") {
  ExplorationCaps caps;
  caps.max_seeds = 10;
  const auto g = enumerate_exchange_graph(ExchangeMatrix({{0, 2}, {-2, 0}}), caps);
  CHECK_FALSE(g.complete);
  CHECK(g.clusters.size() <= 10);
}

TEST_CASE("finite-type classification") {
  const auto a2 = is_finite_type(ExchangeMatrix({{0, 1}, {-1, 0}}));
  CHECK(a2.verdict == FiniteVerdict::Finite);
  REQUIRE(a2.witness.has_value());
  CHECK(is_finite_type(ExchangeMatrix({{0, 2}, {-2, 0}})).verdict == FiniteVerdict::Infinite);
  CHECK(is_finite_type(ExchangeMatrix({{0, 1}, {-4, 0}})).verdict == FiniteVerdict::Infinite);
  CHECK(is_finite_type(ExchangeMatrix({{0, 1}, {-3, 0}})).verdict == FiniteVerdict::Finite);
  CHECK(is_finite_type(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}, {1, 1, 1}})).verdict ==
        FiniteVerdict::Finite);
  // Oriented 3-cycle with double arrows: the Markov quiver.
  const auto markov = is_finite_type(ExchangeMatrix({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
  CHECK(markov.verdict == FiniteVerdict::Infinite);
  // Affine A2 (acyclic triangle) is infinite.
  CHECK(is_finite_type(ExchangeMatrix({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}})).verdict == FiniteVerdict::Infinite);
  const auto capped = is_finite_type(ExchangeMatrix({{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}), 1);
  CHECK(capped.verdict != FiniteVerdict::Finite);
  CHECK(to_string(FiniteVerdict::Inconclusive) == "inconclusive");
}

TEST_CASE("property: finite types stay finite under random mutations") {
  std::mt19937_64 rng(51);
  for (const char* name : {"A2", "A3", "A4", "D4"}) {
    const IntMatrix b = quiver_for(name);
    CHECK(is_finite_type(ExchangeMatrix(b)).verdict == FiniteVerdict::Finite);
    for (int trial = 0; trial < 10; ++trial) {
      const auto r = is_finite_type(ExchangeMatrix(random_mutations(b, 5, rng)));
      CHECK(r.verdict == FiniteVerdict::Finite);
      REQUIRE(r.witness.has_value());
      CHECK(is_finite_type_cartan(cartan_companion(*r.witness)));
    }
  }
}

TEST_CASE("property: verdicts are mutation invariant") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const IntMatrix b = random_exchange(rng, n, 0);
    const auto v = is_finite_type(ExchangeMatrix(b)).verdict;
    const int k = static_cast<int>(rng() % n) + 1;
    CHECK(is_finite_type(ExchangeMatrix(mutate_matrix(b, k))).verdict == v);
  }
}

TEST_CASE("canonical form") {
  const IntMatrix b{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  const IntMatrix c{{0, 0, -1}, {0, 0, 1}, {1, -1, 0}};
  CHECK(canonical_form(b) == canonical_form(c));
  IntMatrix neg = b;
  for (auto& row : neg) {
    for (auto& v : row) v = -v;
  }
  CHECK(canonical_form(neg) == canonical_form(b));
  CHECK_THROWS_AS(canonical_form(IntMatrix(10, std::vector<int>(10, 0))), ResourceError);
}

}  // TEST_SUITE
