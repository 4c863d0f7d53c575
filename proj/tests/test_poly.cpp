#include <catch_amalgamated.hpp>

#include "wcit/poly.hpp"

using namespace wcit;

namespace {

RingPtr<RationalField> ring_xyz() { return make_ring(RationalField{}, VariableTable({"x0", "x1", "x2"})); }

} // namespace

TEST_CASE("parse and print") {
  auto R = ring_xyz();
  auto p = parse_polynomial("x0^4 + x1^4", R);
  CHECK(p.size() == 2);
  CHECK(p.to_string() == "x0^4 + x1^4");
  auto q = parse_polynomial("1/2*x0*x1 - x2^2", R);
  CHECK(q.size() == 2);
  CHECK(q.coefficient(Monomial({1, 1, 0})) == RationalField{}.from_fraction("1", "2"));
  CHECK(q.coefficient(Monomial({0, 0, 2})) == RationalField{}.from_int(-1));
  CHECK(q.to_string() == "1/2*x0*x1 - x2^2");
  CHECK(parse_polynomial("x0^4 - x0^4", R).is_zero());
  CHECK(parse_polynomial("x0^4 - x0^4", R).to_string() == "0");
  CHECK(parse_polynomial("-3", R).to_string() == "-3");
  CHECK(parse_polynomial("  2 * x0 ^ 2*x0 ", R) == parse_polynomial("2*x0^3", R));
}

TEST_CASE("printing round-trips") {
  auto R = ring_xyz();
  for (const char* s : {"x0^4 + x1^4", "1/2*x0*x1 - x2^2", "-x0 + 7/3", "x0*x1*x2 - 2*x1^2*x2 + 5"}) {
    auto p = parse_polynomial(s, R);
    CHECK(parse_polynomial(p.to_string(), R) == p);
  }
}

TEST_CASE("parse errors carry a column") {
  auto R = ring_xyz();
  CHECK_THROWS_AS(parse_polynomial("", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("   ", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 + w", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^-1", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0^1.5", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x0 x1", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0*x0", R), ParseError);
  try {
    parse_polynomial("x0 + w", R);
  } catch (const ParseError& e) {
    CHECK(e.column() == 6);
    CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
  }
}

TEST_CASE("ring arithmetic") {
  auto R = ring_xyz();
  auto a = parse_polynomial("x0 + x1", R), b = parse_polynomial("x0 - x1", R);
  CHECK(a * b == parse_polynomial("x0^2 - x1^2", R));
  CHECK(a + Polynomial<RationalField>(R) == a);

  PrimeField F7(7);
  auto S = make_ring(F7, VariableTable({"x"}));
  auto c = parse_polynomial("x + 3", S) * parse_polynomial("x + 4", S);
  CHECK(c == parse_polynomial("x^2 + 5", S));

  auto other = make_ring(RationalField{}, VariableTable({"x0", "x1"}));
  CHECK_THROWS_AS(a + parse_polynomial("x0", other), FieldMismatch);
  CHECK_THROWS_AS(a * parse_polynomial("x0", other), FieldMismatch);
}

TEST_CASE("bidegrees") {
  VariableTable vars({"x0", "x1", "x2", "x3", "x4", "z", "y2", "y4"},
                     {VarRole::geometric, VarRole::geometric, VarRole::geometric, VarRole::geometric,
                      VarRole::geometric, VarRole::geometric, VarRole::auxiliary, VarRole::auxiliary});
  WeightSystem W({1, 1, 1, 1, 1, 2});
  std::vector<int> d{2, 4};
  CHECK(bidegree_of(Monomial({4, 0, 0, 0, 0, 0, 0, 1}), vars, W, d) == BiDegree{1, 0});
  CHECK(bidegree_of(Monomial(std::vector<int>(8, 0)), vars, W, d) == BiDegree{0, 0});
  CHECK(bidegree_of(Monomial({0, 0, 0, 0, 0, 1, 1, 0}), vars, W, d) == BiDegree{1, 0});
}

TEST_CASE("weighted homogeneity") {
  auto R = make_ring(RationalField{}, VariableTable({"x0", "x1", "x2", "x3", "x4", "z"}));
  WeightSystem W({1, 1, 1, 1, 1, 2});
  auto d = is_weighted_homogeneous(parse_polynomial("z^2 - x0^4", R), W);
  REQUIRE(d);
  CHECK(std::get<long>(*d) == 4);
  CHECK_FALSE(is_weighted_homogeneous(parse_polynomial("x0 + x0^2", R), W));
  auto z = is_weighted_homogeneous(Polynomial<RationalField>(R), W);
  REQUIRE(z);
  CHECK(std::holds_alternative<AnyDegree>(*z));
}

TEST_CASE("partial derivatives") {
  auto R = make_ring(RationalField{},
                     VariableTable({"x0", "x1", "x2", "x3", "x4", "z", "y2", "y4"},
                                   {VarRole::geometric, VarRole::geometric, VarRole::geometric,
                                    VarRole::geometric, VarRole::geometric, VarRole::geometric,
                                    VarRole::auxiliary, VarRole::auxiliary}));
  CHECK(partial_derivative(parse_polynomial("x0^4", R), 0) == parse_polynomial("4*x0^3", R));
  CHECK(partial_derivative(parse_polynomial("y4*z^2", R), 5) == parse_polynomial("2*y4*z", R));
  auto g = parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 + x4^2", R);
  auto f = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4 + x4^4", R);
  auto y2 = Polynomial<RationalField>::variable(R, 6), y4 = Polynomial<RationalField>::variable(R, 7);
  auto z = Polynomial<RationalField>::variable(R, 5);
  auto F = y2 * g + y4 * (z * z - f);
  CHECK(partial_derivative(F, 6) == g);
  CHECK(partial_derivative(F, 5) == parse_polynomial("2*y4*z", R));
  CHECK(partial_derivative(F, 0) == parse_polynomial("2*x0*y2 - 4*x0^3*y4", R));
  CHECK(partial_derivative(f, 5).is_zero());
}
