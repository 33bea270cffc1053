#include <doctest.h>

#include <random>

#include "secmat/errors.hpp"
#include "secmat/parser.hpp"
#include "support.hpp"

using namespace secmat;
using secmat::test::standard_ring;

TEST_CASE("parsing examples") {
  const RingPtr r = make_ring({"x", "y", "z"});
  const auto f = parse_polynomial("x^4 - y^2*z^2", r);
  CHECK(f.size() == 2);
  CHECK(f.degree() == 4);
  CHECK(parse_polynomial("0", r).is_zero());
  CHECK(parse_polynomial("0", r).terms().empty());
  const auto g = parse_polynomial("x*y + y*x", r);
  REQUIRE(g.size() == 1);
  CHECK(g.terms()[0].coeff == 2);
  CHECK(g.terms()[0].pp == PowerProduct({1, 1, 0}));
  CHECK(parse_polynomial("(x+y)^2 # trailing comment", r) ==
        parse_polynomial("x^2 + 2*x*y + y^2", r));
  CHECK(parse_polynomial("-3/6*x", r).terms()[0].coeff == BigRational(-1, 2));
  CHECK(parse_polynomial("- -x", r) == parse_polynomial("x", r));
  CHECK(parse_polynomial("-x^2", r).terms()[0].coeff == -1);
}

TEST_CASE("parse errors carry a position") {
  const RingPtr r = make_ring({"x", "y", "z"});
  CHECK_THROWS_AS(parse_polynomial("x + w", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2 x", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x/0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("1/0", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("(x + y", r), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", r), ParseError);
  try {
    parse_polynomial("x +\n  y + $", r);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("print then parse is the identity") {
  const RingPtr r = standard_ring(3);
  std::mt19937_64 gen(31);
  for (int k = 0; k < 500; ++k) {
    auto f = secmat::test::random_polynomial(gen, r, 5, 6, 50);
    if (k % 3 == 0) f = poly_scale(f, BigRational(static_cast<long>(gen() % 13) - 6, 7));
    CHECK(parse_polynomial(f.to_string(), r) == f);
  }
}

TEST_CASE("documents") {
  const auto doc = parse_document(
      "# comment\nring x, y, z;\nideal x^4 - y^2*z^2,\n  x*y^2 - y*z^2 - z^3;\n"
      "order lex; seed 7; max-degree 9; truncate 3, 4;\n");
  CHECK(doc.ring->arity() == 3);
  CHECK(doc.generators.size() == 2);
  CHECK(doc.order == TermOrder::Lex);
  CHECK(doc.seed == 7u);
  CHECK(doc.max_degree == 9);
  CHECK(doc.truncations == std::vector<int>{3, 4});
  CHECK(doc.ideal().is_homogeneous());

  const auto bare = parse_document("ring x, y;\nideal x*y;\n");
  CHECK_FALSE(bare.order.has_value());
  CHECK_FALSE(bare.seed.has_value());
  CHECK(bare.truncations.empty());

  CHECK_THROWS_AS(parse_document("ideal x;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring x, x;\nideal x;"), Error);
  CHECK_THROWS_AS(parse_document("ring x;\nideal x\n"), ParseError);
  CHECK_THROWS_AS(parse_document("ring x;\nideal x;\nbogus 3;"), ParseError);
  CHECK_THROWS_AS(parse_document("ring x;\nideal x;\norder grevlex;"), Error);
}
