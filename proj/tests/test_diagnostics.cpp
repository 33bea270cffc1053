#include <doctest.h>

#include "secmat/diagnostics.hpp"
#include "secmat/errors.hpp"
#include "secmat/gin.hpp"
#include "secmat/groebner.hpp"
#include "secmat/growth.hpp"
#include "secmat/parser.hpp"
#include "secmat/sectional_matrix.hpp"
#include "support.hpp"

using namespace secmat;
using secmat::test::load_fixture;
using secmat::test::monomials;

TEST_CASE("dimension and degree of an ideal") {
  CHECK(dim_deg_of_ideal(load_fixture("ex_first").ideal()) == DimDeg{1, 12});
  CHECK(dim_deg_of_ideal(load_fixture("ex_before_reg").ideal()) == DimDeg{3, 1});
  const RingPtr r = secmat::test::standard_ring(3);
  CHECK(dim_deg_of_ideal(IdealPresentation(r, {})) == DimDeg{3, 1});
  CHECK(dim_deg_of_ideal(IdealPresentation(r, {parse_polynomial("x^2 - y*z", r)})) == DimDeg{2, 2});
}

TEST_CASE("dimension and degree of truncations") {
  const auto dd = load_fixture("ex_dim_deg").ideal();
  const auto t = truncation_dim_deg(dd, 3, 42);
  CHECK(t.dim == 3);
  CHECK(t.deg == 1);
  CHECK(t.i == 2);
  CHECK(t.also_next);
  CHECK(dim_deg_of_ideal(truncation_ideal(dd, 3)) == DimDeg{3, 1});
  CHECK(dim_deg_of_ideal(truncation_ideal(dd, 4)) == DimDeg{3, 1});

  const auto first = load_fixture("ex_first").ideal();
  const auto f = truncation_dim_deg(first, 6, 42);
  CHECK(f.dim == 1);
  CHECK(f.deg == 12);
  CHECK(DimDeg{f.dim, f.deg} == dim_deg(sectional_matrix(first, 42), 6));
  // I_2 = 0.
  CHECK_THROWS_AS(truncation_dim_deg(first, 2, 42), PreconditionError);
}

TEST_CASE("regularity of truncations") {
  CHECK(truncation_regularity_check(load_fixture("ex_before_reg").ideal(), 4, 42));
  CHECK(regularity(truncation_ideal(load_fixture("ex_before_reg").ideal(), 4), 42) == 4);
  CHECK(truncation_regularity_check(load_fixture("ex_first").ideal(), 6, 42));
  const auto dd = load_fixture("ex_dim_deg").ideal();
  const auto m = sectional_matrix(dd, 42, 3);
  int first_n_max = -1;
  for (int d = 0; d < m.max_degree(); ++d) {
    if (maximal_growth(m, m.arity(), d)) {
      first_n_max = d;
      break;
    }
  }
  REQUIRE(first_n_max >= 0);
  CHECK(truncation_regularity_check(dd, m, first_n_max, 42));
  CHECK_THROWS_AS(truncation_regularity_check(load_fixture("ex_first").ideal(), 4, 42),
                  PreconditionError);
}

TEST_CASE("potential GCD degree") {
  const auto m = sectional_matrix(load_fixture("ex_gcd").ideal(), 42);
  CHECK(potential_gcd_degree(m, 3) == 1);
  CHECK(potential_gcd_degree(m, 4) == 1);
  const RingPtr r = secmat::test::standard_ring(3);
  const IdealPresentation principal(r, {parse_polynomial("x^3 + y*z^2 - 2*z^3", r)});
  const auto mp = sectional_matrix(principal, 42, 2);
  CHECK(potential_gcd_degree(mp, 3) == 3);
  CHECK_THROWS_AS(potential_gcd_degree(mp, 2), PreconditionError);
}

TEST_CASE("GCD of truncations") {
  const auto g = load_fixture("ex_gcd");
  CHECK(gcd_of_truncation(g.ideal(), 3, 42) == parse_polynomial("x + y", g.ring));
  const auto five = load_fixture("ex_saturated_five");
  CHECK(gcd_of_truncation(five.ideal(), 5, 42) == parse_polynomial("x", five.ring));
  CHECK(gcd_of_truncation(five.ideal(), 6, 42) == parse_polynomial("x", five.ring));
  const RingPtr r = secmat::test::standard_ring(3);
  const IdealPresentation principal(r, {parse_polynomial("-2*x^2 + 4*y*z", r)});
  CHECK(gcd_of_truncation(principal, 2, 42) == parse_polynomial("x^2 - 2*y*z", r));
  // M(2,2) = 2 != 1 = M(2,3) on the GCD example.
  CHECK_THROWS_AS(gcd_of_truncation(g.ideal(), 2, 42), PreconditionError);
}

TEST_CASE("reduction numbers") {
  const auto first = load_fixture("ex_first").ideal();
  CHECK(reduction_number(first, 2, 42) == 2);
  CHECK(reduction_number(first, 1, 42) == 5);
  CHECK_THROWS_AS(reduction_number(first, 0, 42), InfiniteReductionNumber);
  const auto conca = load_fixture("ex_conca");
  const auto lt = leading_term_ideal(buchberger(first, TermOrder::DegRevLex));
  CHECK(lt == monomials(conca.ring, "x*y^2, x^4, x^3*y*z^2, y^5*z^2"));
  // r_1(P/LT(I)) is read from the second row of the sectional matrix of LT(I).
  const auto mlt = sectional_matrix(conca.ideal(), 42);
  int last = -1;
  for (int d = 0; d <= mlt.max_degree(); ++d) {
    if (mlt(2, d) != 0) last = d;
  }
  CHECK(last == 6);
  CHECK(reduction_number(conca.ideal(), 1, 42) == 6);
  const RingPtr r = secmat::test::standard_ring(2);
  CHECK(reduction_number(monomials(r, "x^2, y^2"), 0) == 2);
  try {
    reduction_number(first, 0, 42);
  } catch (const InfiniteReductionNumber& e) {
    CHECK(e.row() == 3);
  }
}

TEST_CASE("saturated ideals") {
  const auto rob = load_fixture("ex_robbiano").ideal();
  const auto m = sectional_matrix(rob, 42);
  for (int d = 0; d < m.max_degree(); ++d) CHECK(saturated_growth_equivalence(m, d));
  for (int d = 0; d <= 3; ++d) CHECK(saturated_growth_equivalence(rob, d, 42));
  const auto five = sectional_matrix(load_fixture("ex_saturated_five").ideal(), 42);
  for (int d = 0; d < five.max_degree(); ++d) CHECK(saturated_growth_equivalence(five, d));
  CHECK_THROWS_AS(saturated_growth_equivalence(load_fixture("ex_before_reg").ideal(), 2, 42),
                  PreconditionError);
}

TEST_CASE("saturation of truncations") {
  const auto rob = load_fixture("ex_robbiano").ideal();
  CHECK_FALSE(truncation_saturation(rob, 3, 42));
  CHECK(truncation_saturation(rob, rob.max_generator_degree(), 42));
  const auto five = load_fixture("ex_saturated_five").ideal();
  CHECK(truncation_saturation(five, 5, 42));
  CHECK(truncation_saturation(five, 6, 42));
}

TEST_CASE("dimension discrepancy for saturated truncations") {
  const auto five = load_fixture("ex_saturated_five").ideal();
  const auto m = sectional_matrix(five, 42);
  const auto disc = saturated_dimension_discrepancy(five, m);
  REQUIRE(disc.has_value());
  CHECK(disc->delta == 5);
  CHECK(disc->i == 2);
  CHECK(disc->n_minus_i == 3);
  CHECK(disc->n_minus_i_plus_1 == 4);
  CHECK(disc->computed == 4);
  CHECK(dim_deg_of_ideal(truncation_ideal(five, 5)).dim == 4);
  CHECK_FALSE(saturated_dimension_discrepancy(load_fixture("ex_before_reg").ideal(),
                                              sectional_matrix(load_fixture("ex_before_reg").ideal(), 42))
                  .has_value());
}
