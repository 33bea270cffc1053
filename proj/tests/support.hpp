#ifndef SECMAT_TESTS_SUPPORT_HPP
#define SECMAT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "secmat/monomial_ideal.hpp"
#include "secmat/parser.hpp"
#include "secmat/polynomial.hpp"

namespace secmat::test {

using Rows = std::vector<std::vector<std::int64_t>>;

std::string fixture_path(std::string_view name);
InputDocument load_fixture(std::string_view name);
bool fixture_exists(std::string_view name);

/// "x^3, x^2*y^2" -> monomial ideal over `ring`.
MonomialIdeal monomials(const RingPtr& ring, std::string_view list);

/// Columns 0..last of the given rows.
Rows prefix(const Rows& rows, std::size_t columns);

RingPtr standard_ring(std::size_t n);

Polynomial random_polynomial(std::mt19937_64& gen, const RingPtr& ring, int max_degree,
                             int max_terms, int coeff_bound);
Polynomial random_homogeneous(std::mt19937_64& gen, const RingPtr& ring, int degree,
                              int terms, int coeff_bound);

/// Seeded random homogeneous ideals: 2 <= n <= 4, 1..4 generators of
/// degree 1..5 with few terms and small coefficients.
std::vector<IdealPresentation> random_corpus(std::size_t count, std::uint64_t seed);

/// Counts monomials of degree d in the first `vars` indeterminates outside
/// J by plain enumeration of exponent vectors.
std::int64_t count_standard_monomials(const MonomialIdeal& j, std::size_t vars, int d);

/// Names of the fixtures holding published examples.
std::vector<std::string> published_fixtures();

}  // namespace secmat::test

#endif  // SECMAT_TESTS_SUPPORT_HPP
