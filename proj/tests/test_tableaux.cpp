#include <doctest.h>

#include "lrc/tableaux.hpp"
#include "oracles.hpp"

#include <random>

using namespace lrc;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

std::vector<Partition> all_partitions_up_to(int size, int parts) {
  std::vector<Partition> out;
  for (int s = 0; s <= size; ++s) {
    for (auto& p : partitions_of(s, parts, s)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST_SUITE("tableaux") {

TEST_CASE("partitions") {
  CHECK(P({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK(P({3, 2}).contains(P({2, 2})));
  CHECK_FALSE(P({3, 1}).contains(P({2, 2})));
  CHECK(partitions_of(4, 4, 4).size() == 5);
  CHECK(partitions_of(6, 2, 4).size() == 2);
  CHECK(to_string(P({2, 1})) == "(2,1)");
}

TEST_CASE("LR coefficients") {
  CHECK(lr_coefficient(P({1}), P({1}), P({2})) == 1);
  CHECK(lr_coefficient(P({1}), P({1}), P({1, 1})) == 1);
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({3, 2, 1})) == 2);
  CHECK(lr_coefficient(P({2, 1}), P({2, 1}), P({5, 1})) == 0);
  CHECK(lr_coefficient(P({}), P({2, 1}), P({2, 1})) == 1);
  CHECK(lr_coefficient(P({3}), P({1}), P({2, 2})) == 0);
}

TEST_CASE("LR coefficients against brute-force fillings") {
  for (const auto& lambda : all_partitions_up_to(3, 3)) {
    for (const auto& nu : all_partitions_up_to(3, 3)) {
      for (const auto& mu : partitions_of(lambda.size() + nu.size(), 4, lambda.size() + nu.size())) {
        CAPTURE(to_string(lambda));
        CAPTURE(to_string(nu));
        CAPTURE(to_string(mu));
        CHECK(lr_coefficient(lambda, nu, mu) == oracle::brute_force_lr(lambda.parts(), nu.parts(), mu.parts()));
      }
    }
  }
}

TEST_CASE("Schur product expansion") {
  auto e = schur_product_expansion(P({1}), P({1}), 2);
  CHECK(e == std::map<Partition, std::uint64_t>{{P({2}), 1}, {P({1, 1}), 1}});
  auto f = schur_product_expansion(P({2, 1}), P({2, 1}), 3);
  CHECK(f.size() == 5);
  std::uint64_t with_multiplicity = 0;
  for (const auto& [mu, c] : f) with_multiplicity += c;
  CHECK(with_multiplicity == 6);
  CHECK(f[P({3, 2, 1})] == 2);
  CHECK(f[P({4, 2})] == 1);
  auto g = schur_product_expansion(P({2, 1}), P({2, 1}), 2);
  for (const auto& [mu, c] : g) CHECK(mu.length() <= 2);
  CHECK(g.count(P({3, 3})) == 1);
}

TEST_CASE("property: symmetry on random partitions") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(0, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const int a = size(rng), b = size(rng);
    auto pa = partitions_of(a, a, a);
    auto pb = partitions_of(b, b, b);
    const auto lambda = pa[rng() % pa.size()];
    const auto nu = pb[rng() % pb.size()];
    const int n = lambda.length() + nu.length();
    const auto ex = schur_product_expansion(lambda, nu, n);
    CHECK(ex == schur_product_expansion(nu, lambda, n));
    for (const auto& [mu, c] : ex) CHECK(lr_coefficient(nu, lambda, mu) == c);
  }
}

TEST_CASE("property: alternant cross-check") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& lambda : all_partitions_up_to(5, static_cast<int>(n))) {
      for (const auto& nu : all_partitions_up_to(5 - lambda.size(), static_cast<int>(n))) {
        const auto poly = oracle::alternant_expansion(lambda.parts(), nu.parts(), n);
        const auto ours = schur_product_expansion(lambda, nu, static_cast<int>(n));
        REQUIRE(poly.size() == ours.size());
        for (const auto& [mu, c] : ours) CHECK(poly.at(mu.parts()) == c);
      }
    }
  }
}

TEST_CASE("property: dimension count") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& lambda : all_partitions_up_to(4, n)) {
      for (const auto& nu : all_partitions_up_to(3, n)) {
        Integer total = 0;
        for (const auto& [mu, c] : schur_product_expansion(lambda, nu, n)) {
          total += Integer(static_cast<unsigned long>(c)) * schur_dimension(mu, n);
        }
        CHECK(total == schur_dimension(lambda, n) * schur_dimension(nu, n));
      }
    }
  }
}

TEST_CASE("weight dictionary") {
  CHECK(partition_from_weight({{1, 1}}) == P({2, 1}));
  CHECK(partition_from_weight({{1, 0, 1}}) == P({2, 1, 1}));
  CHECK(weight_from_partition(P({3, 2, 1}), 2).coords == std::vector<int>{1, 1});
  CHECK(weight_from_partition(P({2, 1}), 3).coords == std::vector<int>{1, 1, 0});
  CHECK(lr_coefficient_for_weights({{1, 1}}, {{1, 1}}, {{1, 1}}) == 2);
  CHECK(lr_coefficient_for_weights({{1, 1}}, {{1, 1}}, {{2, 2}}) == 1);
  CHECK(lr_coefficient_for_weights({{1, 0, 1}}, {{1, 0, 1}}, {{1, 0, 1}}) ==
        lr_coefficient(P({2, 1, 1}), P({2, 1, 1}), P({3, 2, 2, 1})));
  CHECK(lr_coefficient_for_weights({{1, 0}}, {{1, 0}}, {{1, 1}}) == 0);
}

}  // TEST_SUITE
