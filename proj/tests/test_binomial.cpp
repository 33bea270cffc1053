#include <doctest.h>

#include <functional>

#include "secmat/binomial.hpp"
#include "secmat/errors.hpp"

using namespace secmat;

namespace {

// Counts i-binomial representations h = C(a_i, i) + ... + C(a_j, j) with
// a_i > ... > a_j >= j >= 1 by exhaustive search.
int count_representations(std::int64_t h, std::int64_t i) {
  std::function<int(std::int64_t, std::int64_t, std::int64_t)> go =
      [&](std::int64_t rest, std::int64_t level, std::int64_t bound) -> int {
    if (rest == 0) return 1;
    if (level < 1) return 0;
    int total = 0;
    for (std::int64_t a = level; a < bound; ++a) {
      const auto c = binomial(a, level);
      if (c > rest) break;
      total += go(rest - c, level - 1, a);
    }
    return total;
  };
  return go(h, i, h + i + 2);
}

std::int64_t sum_of(const BinomialExpansion& e) {
  std::int64_t s = 0;
  for (const auto& t : e.terms) s += binomial(t.top, t.bottom);
  return s;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial_expansion(1, 4).terms == std::vector<BinomialExpansion::Entry>{{4, 4}});
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == 118264581564861424LL);
  CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("expansions from the literature") {
  const auto e = binomial_expansion(5, 3);
  CHECK(e.terms == std::vector<BinomialExpansion::Entry>{{4, 3}, {2, 2}});
  CHECK(macaulay_bound(5, 3) == 6);
  CHECK(expansion_shift(e, 1, 1) == 6);
  const auto f = binomial_expansion(11, 4);
  CHECK(f.terms == std::vector<BinomialExpansion::Entry>{{5, 4}, {4, 3}, {2, 2}, {1, 1}});
  CHECK(green_bound(11, 4) == 2);
  CHECK(expansion_shift(f, -1, 0) == 2);
  CHECK(macaulay_bound(0, 3) == 0);
  CHECK(green_bound(0, 3) == 0);
  CHECK_THROWS_AS(binomial_expansion(0, 2), SemanticError);
  CHECK_THROWS_AS(binomial_expansion(3, 0), SemanticError);
}

TEST_CASE("expansions are unique and well formed") {
  for (std::int64_t i = 1; i <= 6; ++i) {
    for (std::int64_t h = 1; h <= 150; ++h) {
      const auto e = binomial_expansion(h, i);
      CHECK(sum_of(e) == h);
      CHECK(count_representations(h, i) == 1);
      for (std::size_t k = 0; k < e.terms.size(); ++k) {
        CHECK(e.terms[k].bottom == i - static_cast<std::int64_t>(k));
        CHECK(e.terms[k].top >= e.terms[k].bottom);
        if (k > 0) CHECK(e.terms[k].top < e.terms[k - 1].top);
      }
    }
  }
}

TEST_CASE("Macaulay bound is attained by lex segments in few variables") {
  // For the full ring in n variables h = C(d+n-1, n-1), and the bound gives
  // the next full value.
  for (std::int64_t n = 1; n <= 5; ++n) {
    for (std::int64_t d = 1; d <= 8; ++d) {
      CHECK(macaulay_bound(binomial(d + n - 1, n - 1), d) == binomial(d + n, n - 1));
    }
  }
}
