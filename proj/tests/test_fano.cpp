#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "wcit/fano.hpp"

using namespace wcit;
using Q = RationalField;

TEST_CASE("building the double quadric") {
  auto F = fixture::fermat_fano(Q{});
  CHECK(F.variety.nu() == 1);
  CHECK(F.certification.is_quasi_smooth);
  CHECK(F.g == standard_quadric(F.ring));
  CHECK(F.h[0] == parse_polynomial("2*x0^3", F.ring));

  auto ring = fano_ring(Q{});
  CHECK_THROWS_AS(build_fano(parse_polynomial("x0^4", ring)), DomainError);
  CHECK_THROWS_AS(build_fano(Polynomial<Q>(ring)), DomainError);
  CHECK_THROWS_AS(build_fano(parse_polynomial("x0^3*x1 + x2^3", ring)), DomainError);
  CHECK_THROWS_AS(build_fano(parse_polynomial("x0^5", ring)), DomainError);
  CHECK_THROWS_AS(build_fano(parse_polynomial("z*x0^2", ring)), DomainError);
  // (x1^2 + x4^2)^2 makes the branch surface singular at (0:1:0:0:i)
  CHECK_THROWS_AS(build_fano(parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4 + x4^4 + 2*x1^2*x4^2", ring)),
                  DomainError);
}

TEST_CASE("a quadric given in other coordinates is normalised") {
  auto ring = fano_ring(Q{});
  auto f = parse_polynomial("x0^4 + x1^4 + x2^4 + x3^4 + x4^4", ring);
  // x0*x1 + ... is congruent to a sum of squares over Q
  auto g = parse_polynomial("x0^2 + 2*x0*x1 + 2*x1^2 + x2^2 + 4*x3^2 + x4^2", ring);
  auto F = build_fano(f, g);
  CHECK(F.g == standard_quadric(ring));
  CHECK(F.certification.is_quasi_smooth);
  auto R = build_jacobi(F.variety);
  CHECK(displayed_presentation_check(F, R));
  // -1 is not a square over Q
  CHECK_THROWS_AS(build_fano(f, parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2 - x4^2", ring)), DomainError);
  CHECK_THROWS_AS(build_fano(f, parse_polynomial("x0^2 + x1^2 + x2^2 + x3^2", ring)), DomainError);
}

TEST_CASE("the displayed presentation of the Jacobi ring") {
  auto F = fixture::fermat_fano(Q{});
  auto R = build_jacobi(F.variety);
  CHECK(displayed_presentation_check(F, R));
  auto rel = displayed_relations(F, R);
  auto y2 = R.parse("y2"), y4 = R.parse("y4"), x0 = R.parse("x0");
  rel[2] = y2 * x0 - (y4 * R.lift(F.h[0])).scaled(Rational(2));
  CHECK_FALSE(presentation_matches(R, rel));
  // dF/dz is 2*y4*z, a unit multiple of y4*z
  CHECK(R.reduce(R.parse("y4*z")).is_zero());
  CHECK(partial_derivative(R.potential(), R.variable("z")) == R.parse("2*y4*z"));
}

TEST_CASE("involution eigenspaces") {
  auto F = fixture::fermat_fano(Q{});
  auto R = build_jacobi(F.variety);
  auto rep = involution_report(R);
  REQUIRE(rep.components.size() == 3);
  const auto& r10 = rep.components[0];
  CHECK(r10.degree == BiDegree{1, 0});
  CHECK(r10.anti_invariant == 1);
  CHECK(r10.invariant == 44);
  REQUIRE(r10.anti_invariant_elements.size() == 1);
  CHECK(r10.anti_invariant_elements[0] == R.parse("y2*z"));
  CHECK(rep.components[1].invariant == 30);
  CHECK(rep.components[1].anti_invariant == 0);
  for (const auto& s : rep.components) CHECK(s.squares_to_identity);
}

TEST_CASE("involution eigenspaces against the parity-split oracle") {
  // generators are eigenvectors of z -> -z, so the quotient splits by z-parity
  auto gens = fixture::fermat_fano_partials<mpq_class>();
  auto grades = fixture::fermat_fano_grades();
  auto even = [](const oracle::Exps& e) { return e[5] % 2 == 0; };
  auto odd = [](const oracle::Exps& e) { return e[5] % 2 == 1; };
  auto R = build_jacobi(fixture::fermat_fano(Q{}).variety);
  auto rep = involution_report(R);
  CHECK(rep.components[0].invariant == oracle::quotient_dim(gens, grades, {1, 0}, even));
  CHECK(rep.components[0].anti_invariant == oracle::quotient_dim(gens, grades, {1, 0}, odd));
  CHECK(rep.components[1].invariant == oracle::quotient_dim(gens, grades, {1, -1}, even));
  CHECK(rep.components[1].anti_invariant == oracle::quotient_dim(gens, grades, {1, -1}, odd));
}

TEST_CASE("invariant Torelli and the Macaulay check") {
  auto F = fixture::fermat_fano(Q{});
  auto R = build_jacobi(F.variety);
  auto res = invariant_torelli_check(F, R);
  CHECK(res.full_kernel_dim == 1);
  REQUIRE(res.kernel_basis.size() == 1);
  CHECK(res.kernel_basis[0] == R.parse("y2*z"));
  CHECK(res.kernel_iota_stable);
  CHECK(res.kernel_anti_invariant);
  CHECK(res.invariant_restriction_injective);
  CHECK(res.invariant_rank == res.invariant_dim);

  auto mc = b_ring_macaulay_check(F);
  auto series = oracle::ci_series({2, 4}, {1, 1, 1, 1, 1}, 8);
  CHECK(mc.dim_b3 == std::size_t(series[3]));
  CHECK(mc.dim_b4 == std::size_t(series[4]));
  CHECK(mc.dim_b7 == std::size_t(series[7]));
  CHECK(mc.dim_b3 == 30);
  CHECK(mc.dim_b4 == 54);
  CHECK(mc.dim_b7 == 174);
  CHECK(mc.rank == 54);
  CHECK(mc.injective);
  CHECK(mc.injective == res.invariant_restriction_injective);
}

TEST_CASE("a non-Fermat branch quartic") {
  auto ring = fano_ring(Q{});
  auto F = build_fano(parse_polynomial(
      "x0^4 + x1^4 + x2^4 + x3^4 + x4^4 + x0*x1*x2*x3 - x0^3*x4", ring));
  auto R = build_jacobi(F.variety);
  CHECK(displayed_presentation_check(F, R));
  auto res = invariant_torelli_check(F, R);
  CHECK(res.kernel_anti_invariant);
  CHECK(res.invariant_restriction_injective == b_ring_macaulay_check(F).injective);
}
