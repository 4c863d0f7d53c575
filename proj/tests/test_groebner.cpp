#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "wcit/groebner.hpp"
#include "wcit/jacobi.hpp"

using namespace wcit;
using Q = RationalField;

namespace {

RingPtr<Q> ring_xy() { return make_ring(Q{}, VariableTable({"x", "y"})); }

std::vector<Polynomial<Q>> polys(const RingPtr<Q>& R, std::initializer_list<const char*> texts) {
  std::vector<Polynomial<Q>> out;
  for (auto t : texts) out.push_back(parse_polynomial(t, R));
  return out;
}

std::vector<std::string> printed(const std::vector<Polynomial<Q>>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST_CASE("normal forms") {
  auto R = ring_xy();
  auto G = buchberger(polys(R, {"x^2 - y", "y^2"}), R);
  CHECK(normal_form(parse_polynomial("x^4", R), G).is_zero());
  auto zero = buchberger(std::vector<Polynomial<Q>>{Polynomial<Q>(R)}, R);
  auto p = parse_polynomial("x^3 - 2*x*y + 1/5", R);
  CHECK(normal_form(p, zero) == p);
  auto X2 = buchberger(polys(R, {"x^2"}), R);
  auto r = parse_polynomial("x*y + y^3", R);
  auto q = parse_polynomial("7*x*y^2 - y + 3", R);
  CHECK(normal_form(parse_polynomial("x^2", R) * q + r, X2) == normal_form(r, X2));
  CHECK_THROWS_AS(normal_form(parse_polynomial("x", make_ring(Q{}, VariableTable({"x", "z"}))), G), FieldMismatch);
}

TEST_CASE("small Groebner bases") {
  auto R = ring_xy();
  auto G1 = buchberger(polys(R, {"x^2", "x*y"}), R);
  CHECK(printed(G1.generators()) == printed(polys(R, {"x^2", "x*y"})));
  auto G2 = buchberger(polys(R, {"x^2 - y", "y^2"}), R);
  CHECK(printed(G2.generators()) == printed(polys(R, {"x^2 - y", "y^2"})));
  auto G3 = buchberger(polys(R, {"x", "x + 1"}), R);
  CHECK(G3.is_unit());
  CHECK(G3.generators() == polys(R, {"1"}));
}

TEST_CASE("reduced basis does not depend on generator order") {
  auto R = make_ring(Q{}, VariableTable({"a", "b", "c"}));
  auto gens = polys(R, {"a^2 + b*c", "a*b - c^2 + a", "b^3 - a*c"});
  auto G = buchberger(gens, R);
  std::reverse(gens.begin(), gens.end());
  CHECK(buchberger(gens, R).generators() == G.generators());
  for (const auto& g : G.generators()) CHECK(g.lead_coeff().is_one());
}

TEST_CASE("cone_is_origin_only") {
  auto R = ring_xy();
  CHECK(cone_is_origin_only(buchberger(polys(R, {"x^2", "y^3"}), R)));
  CHECK_FALSE(cone_is_origin_only(buchberger(polys(R, {"x*y"}), R)));
  auto X = fixture::fermat_quartic(Q{});
  std::vector<Polynomial<Q>> partials;
  for (std::size_t i = 0; i < 5; ++i) partials.push_back(partial_derivative(X.equations()[0], i));
  CHECK(cone_is_origin_only(buchberger(partials, X.ring())));
}

TEST_CASE("graded pieces of the Fermat quartic Jacobi ring") {
  auto X = fixture::fermat_quartic(Q{});
  auto J = build_jacobi(X);
  const auto& G = J.ideal_basis();
  WeightSystem W({1, 1, 1, 1, 1});
  auto series = oracle::truncated_geometric_power(3, 5);
  CHECK(graded_piece_dim(G, {1, -1}, W, {4}) == std::size_t(series[3]));
  CHECK(graded_piece_dim(G, {2, -1}, W, {4}) == std::size_t(series[7]));
  CHECK(graded_piece_dim(G, {1, 0}, W, {4}) == std::size_t(series[4]));
  CHECK(graded_piece_dim(G, {1, -1}, W, {4}) == 30);
  auto one = graded_piece_basis(G, {0, 0}, W, {4});
  REQUIRE(one.size() == 1);
  CHECK(one[0].is_one());
  CHECK_THROWS_AS(graded_piece_basis(G, {-1, 0}, W, {4}), DomainError);

  auto unit = buchberger(polys(X.ring(), {"1"}), X.ring());
  CHECK(graded_piece_dim(unit, {0, 3}, X.grading()) == 0);
  CHECK(graded_piece_dim(unit, {0, 0}, X.grading()) == 0);
}

TEST_CASE("monomial ideal Hilbert series") {
  VariableTable vars(fixture::names("x", 5));
  WeightSystem W({1, 1, 1, 1, 1});
  auto free = monomial_ideal_hilbert_series({}, vars, W);
  CHECK(free.coefficient(4) == 70);
  std::vector<Monomial> cubes;
  for (std::size_t i = 0; i < 5; ++i) cubes.push_back(Monomial::variable(5, i, 3));
  auto hs = monomial_ideal_hilbert_series(cubes, vars, W);
  auto expected = oracle::truncated_geometric_power(3, 5);
  for (long k = 0; k < 14; ++k)
    CHECK(hs.coefficient(k) == (k < long(expected.size()) ? expected[std::size_t(k)] : 0));
  CHECK(hs.coefficient(4) == 45);

  VariableTable one({"x"});
  auto s = monomial_ideal_hilbert_series({Monomial::variable(1, 0)}, one, WeightSystem({1}));
  CHECK(s.coefficient(0) == 1);
  for (long k = 1; k < 6; ++k) CHECK(s.coefficient(k) == 0);
}

TEST_CASE("weighted Hilbert series match a direct count") {
  auto R = make_ring(Q{}, VariableTable({"a", "b", "c"}));
  WeightSystem W({1, 2, 3});
  auto G = buchberger(polys(R, {"a^2*b - c", "b^3 - a^2*c", "a*c^2"}), R);
  auto hs = hilbert_series(G, W);
  Grading grading(R->vars, W, {});
  for (long k = 0; k <= 16; ++k)
    CHECK(hs.coefficient(k) == std::int64_t(graded_piece_dim(G, {0, k}, grading)));
}

TEST_CASE("truncated completion agrees below the bound") {
  auto X = fixture::fermat_quartic(Q{});
  auto full = build_jacobi(X);
  JacobiOptions opts;
  opts.max_d2 = 0;
  opts.max_d1 = 2;
  auto cut = build_jacobi(X, opts);
  CHECK(cut.ideal_basis().truncated() == true);
  for (BiDegree bd : {BiDegree{1, -1}, BiDegree{1, 0}, BiDegree{2, -1}, BiDegree{0, 0}})
    CHECK(cut.component(bd).dim() == full.component(bd).dim());
  CHECK_THROWS_AS(cut.component({3, 0}), DomainError);
}
