#include <doctest.h>

#include "lrc/json_io.hpp"

using namespace lrc;
using namespace lrc::json_io;

TEST_SUITE("json") {

TEST_CASE("rationals") {
  CHECK(to_json(Rational(3, 2)) == "3/2");
  CHECK(to_json(Rational(-4)) == "-4");
  CHECK(rational_from_json(json("6/4")) == Rational(3, 2));
  CHECK(rational_from_json(json(7)) == 7);
  CHECK_THROWS(rational_from_json(json("1/0")));
  CHECK_THROWS_AS(rational_from_json(json(true)), ParseError);
}

TEST_CASE("tuples round trip") {
  const ParamTuple t = TropicalParams{{{1, 2, 1}}, {1, 2, 3}};
  const json j = to_json(t);
  CHECK(j.dump() == R"({"mode":"tropical","values":[1,2,3],"word":[1,2,1]})");
  CHECK(tuple_from_json(j) == t);
  const ParamTuple g = GeometricParams{{{2, 1, 2}}, {Rational(3, 2), 4, Rational(1, 2)}};
  CHECK(tuple_from_json(json::parse(to_json(g).dump())) == g);
  CHECK_THROWS_AS(tuple_from_json(json::parse(R"({"word":[1],"values":["1/2"],"mode":"tropical"})")), ParseError);
  CHECK_THROWS_AS(tuple_from_json(json::parse(R"({"word":[1],"values":[1],"mode":"other"})")), ParseError);
  CHECK_THROWS_AS(tuple_from_json(json::parse(R"({"values":[1]})")), ParseError);
}

TEST_CASE("matrices round trip") {
  const auto x = group_element_from_word({1, 2, 1}, {Rational(1, 3), 2, 3}, 3);
  CHECK(matrix_from_json(to_json(x)) == x);
  CHECK(matrix_from_json(json::parse(R"({"matrix":[[1,"1/2"],[0,1]]})")) ==
        ExactMatrix({{1, Rational(1, 2)}, {0, 1}}));
  CHECK(int_matrix_from_json(json::parse(R"({"entries":[[0,1],[-1,0]]})")) == IntMatrix{{0, 1}, {-1, 0}});
  CHECK_THROWS_AS(int_matrix_from_json(json::parse(R"([[0,"a"]])")), ParseError);
}

TEST_CASE("seeds round trip after mutation") {
  Seed s = Seed::initial(ExchangeMatrix({{0, 1}, {-1, 0}, {1, 0}}), {"a", "b", "c"});
  s = mutate_seed(mutate_seed(s, 1), 2);
  const json j = to_json(s);
  const Seed back = seed_from_json(json::parse(j.dump()));
  CHECK(back == s);
  CHECK(back.names == s.names);
  CHECK(to_json(back) == j);
  CHECK(mutate_seed(mutate_seed(back, 2), 2) == s);
  const Seed fresh = seed_from_json(json::parse(R"({"entries":[[0,1],[-1,0]]})"));
  CHECK(fresh == Seed::initial(ExchangeMatrix({{0, 1}, {-1, 0}})));
  CHECK_THROWS_AS(seed_from_json(json::parse(R"({"entries":[[0,1],[-1,0]],"n":3})")), ParseError);
  CHECK_THROWS_AS(seed_from_json(json::parse(R"({"entries":[[0,1],[-1,0]],"cluster_names":["a"]})")),
                  ParseError);
  CHECK_THROWS_AS(seed_from_json(json::parse(R"({"entries":[[0,1],[1,0]]})")), DomainError);
}

TEST_CASE("reports") {
  const auto g = enumerate_exchange_graph(ExchangeMatrix({{0, 1}, {-1, 0}}));
  const json j = to_json(g, {"x1", "x2"}, true);
  CHECK(j.at("variables") == 5);
  CHECK(j.at("clusters") == 5);
  CHECK(j.at("variable_list").size() == 5);
  const json f = to_json(is_finite_type(ExchangeMatrix({{0, 2}, {-2, 0}})));
  CHECK(f.at("verdict") == "infinite");
  CHECK(f.at("finite") == false);
  const json s = to_json(sweep_identity(MinorIdentity::Plucker, 3, 2));
  CHECK(s.at("pass") == true);
  CHECK(to_json(check_grassmannian(2)).at("pass") == true);
  const auto l = laurent_check(ExchangeMatrix({{0, 1}, {-1, 0}}), 3);
  CHECK(to_json(l, {"x1", "x2"}).at("variable_count") == 5);
}

TEST_CASE("deterministic output") {
  const auto a = to_json(enumerate_exchange_graph(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})),
                         {"x1", "x2", "x3"}, true)
                     .dump();
  const auto b = to_json(enumerate_exchange_graph(ExchangeMatrix({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})),
                         {"x1", "x2", "x3"}, true)
                     .dump();
  CHECK(a == b);
}

}  // TEST_SUITE
