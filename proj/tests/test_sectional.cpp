#include <doctest.h>

#include <random>

#include "secmat/errors.hpp"
#include "secmat/gin.hpp"
#include "secmat/groebner.hpp"
#include "secmat/oracle.hpp"
#include "secmat/parser.hpp"
#include "secmat/sectional_matrix.hpp"
#include "golden.hpp"
#include "support.hpp"

using namespace secmat;
using secmat::test::load_fixture;
using secmat::test::prefix;
using secmat::test::Rows;

namespace {

Rows computed_rows(const secmat::test::GoldenMatrix& g) {
  auto ideal = load_fixture(g.fixture).ideal();
  if (g.truncate >= 0) ideal = truncation_ideal(ideal, g.truncate);
  const auto gin = rgin(ideal, 42);
  const int columns = static_cast<int>(g.rows.front().size());
  const int extent = std::max(regularity(gin.rgin) + 1, columns - 1);
  return prefix(sectional_matrix(ideal, gin, extent).rows(), static_cast<std::size_t>(columns));
}

}  // namespace

TEST_CASE("sectional matrices printed in the literature") {
  for (const auto& g : secmat::test::golden_matrices()) {
    CAPTURE(g.fixture);
    CAPTURE(g.truncate);
    CHECK(computed_rows(g) == g.rows);
  }
}

TEST_CASE("matrix extent and accessors") {
  const auto doc = load_fixture("ex_first");
  const auto m = sectional_matrix(doc.ideal(), 42);
  CHECK(m.arity() == 3);
  CHECK(m.reg() == 6);
  CHECK(m.max_degree() == 7);
  CHECK(m.generator_degree() == 4);
  CHECK(m(3, 5) == 12);
  CHECK(m(2, 3) == 3);
  CHECK_THROWS_AS((void)m(0, 1), SemanticError);
  CHECK_THROWS_AS((void)m(4, 1), SemanticError);
  CHECK_THROWS_AS((void)m(1, 8), SemanticError);
  CHECK(sectional_matrix(doc.ideal(), 42, 3).max_degree() == 9);
}

TEST_CASE("zero ideal gives the full ring") {
  const RingPtr r = secmat::test::standard_ring(4);
  const IdealPresentation zero(r, {});
  const auto m = sectional_matrix(zero, rgin(zero, 1), 6);
  for (std::size_t i = 1; i <= 4; ++i) {
    for (int d = 0; d <= 6; ++d) CHECK(m(i, d) == full_ring_entry(i, d));
  }
  CHECK(full_ring_entry(3, 2) == 6);
  CHECK(m.generator_degree() == 0);
}

TEST_CASE("the whole ring is rejected") {
  const RingPtr r = secmat::test::standard_ring(2);
  const IdealPresentation unit(r, {parse_polynomial("1", r)});
  CHECK_THROWS_AS(sectional_matrix(unit, 1), SemanticError);
}

TEST_CASE("rows are monotone in i and the first row is 0 or 1") {
  for (const auto& name : secmat::test::published_fixtures()) {
    const auto m = sectional_matrix(load_fixture(name).ideal(), 42);
    for (int d = 0; d <= m.max_degree(); ++d) {
      CHECK((m(1, d) == 0 || m(1, d) == 1));
      for (std::size_t i = 1; i < m.arity(); ++i) CHECK(m(i, d) <= m(i + 1, d));
      CHECK(m(m.arity(), d) == hilbert_function_value(m.source(), d));
    }
    CHECK(m(1, 0) == 1);
  }
}

TEST_CASE("minimal generator degree") {
  CHECK(minimal_generator_degree(load_fixture("ex_first").ideal()) == 4);
  CHECK(minimal_generator_degree(load_fixture("rgin_remark").ideal()) == 5);
  const RingPtr r = secmat::test::standard_ring(2);
  CHECK(minimal_generator_degree(IdealPresentation(r, {})) == 0);
  // x^3 is redundant next to x^2.
  CHECK(minimal_generator_degree(IdealPresentation(
            r, {parse_polynomial("x^2", r), parse_polynomial("x^3 + x^2*y", r)})) == 2);
}

TEST_CASE("linear-algebra oracle agrees with the rgin route") {
  const auto doc = load_fixture("ex_first");
  const auto m = sectional_matrix(doc.ideal(), 42);
  for (std::size_t i = 1; i <= 3; ++i) {
    for (int d = 0; d <= 7; ++d) CHECK(sectional_matrix_direct_oracle(doc.ideal(), i, d, 9) == m(i, d));
  }
  // Dense quadrics in three variables.
  const RingPtr r = secmat::test::standard_ring(3);
  std::mt19937_64 gen(12);
  for (int k = 0; k < 4; ++k) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2; ++g) gens.push_back(secmat::test::random_homogeneous(gen, r, 2, 6, 20));
    const IdealPresentation ideal(r, gens);
    const auto mq = sectional_matrix(ideal, rgin(ideal, 3), 5);
    for (std::size_t i = 1; i <= 3; ++i) {
      for (int d = 0; d <= 5; ++d) CHECK(sectional_matrix_direct_oracle(ideal, i, d, 4) == mq(i, d));
    }
  }
}

TEST_CASE("oracle guard") {
  const RingPtr r = secmat::test::standard_ring(6);
  const IdealPresentation ideal(r, {parse_polynomial("x*y", r)});
  CHECK_THROWS_AS(sectional_matrix_direct_oracle(ideal, 6, 60, 1), SemanticError);
}
