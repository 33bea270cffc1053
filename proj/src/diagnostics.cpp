#include "secmat/diagnostics.hpp"

#include <algorithm>

#include "secmat/errors.hpp"
#include "secmat/gcd.hpp"
#include "secmat/gin.hpp"
#include "secmat/groebner.hpp"

namespace secmat {

namespace {

SectionalMatrix matrix_through(const IdealPresentation& ideal, int column,
                               std::uint64_t seed) {
  const GinResult gin = rgin(ideal, seed);
  return sectional_matrix(ideal, gin, std::max(regularity(gin.rgin) + 1, column));
}

void require_column(const SectionalMatrix& m, int column) {
  if (column < 0 || column > m.max_degree()) {
    throw SemanticError("sectional matrix has no column " + std::to_string(column));
  }
}

bool delta_piece_is_zero(const SectionalMatrix& m, int delta) {
  return m(m.arity(), delta) == full_ring_entry(m.arity(), delta);
}

}  // namespace

DimDeg dim_deg_of_ideal(const IdealPresentation& ideal) {
  require_homogeneous(ideal);
  const MonomialIdeal lt = leading_term_ideal(buchberger(ideal, TermOrder::DegRevLex));
  return dim_deg_of_series(hilbert_numerator(lt));
}

TruncationDimDeg truncation_dim_deg(const IdealPresentation& ideal, const SectionalMatrix& m,
                                    int delta, std::uint64_t) {
  require_column(m, delta + 1);
  const std::size_t n = m.arity();
  if (m(n, delta) == 0) throw PreconditionError("I_delta = P_delta");
  if (delta_piece_is_zero(m, delta)) throw PreconditionError("I_delta = 0");
  std::size_t i = 2;
  while (i <= n && m(i, delta) == 0) ++i;
  if (i > n) throw PreconditionError("no row j > 1 is nonzero at delta");
  if (m(i, delta) != m(i, delta + 1)) {
    throw PreconditionError("M(i,delta) != M(i,delta+1) for i=" + std::to_string(i));
  }
  const DimDeg expected{static_cast<int>(n - i + 1), m(i, delta)};
  for (int t : {delta, delta + 1}) {
    const DimDeg found = dim_deg_of_ideal(truncation_ideal(ideal, t));
    if (!(found == expected)) {
      throw InvariantViolation("truncation at " + std::to_string(t) + " has dim " +
                               std::to_string(found.dim) + ", deg " +
                               std::to_string(found.deg) + "; the matrix predicts dim " +
                               std::to_string(expected.dim) + ", deg " +
                               std::to_string(expected.deg));
    }
  }
  return {expected.dim, expected.deg, true, i};
}

TruncationDimDeg truncation_dim_deg(const IdealPresentation& ideal, int delta,
                                    std::uint64_t seed) {
  return truncation_dim_deg(ideal, matrix_through(ideal, delta + 1, seed), delta, seed);
}

bool truncation_regularity_check(const IdealPresentation& ideal, const SectionalMatrix& m,
                                 int delta, std::uint64_t seed) {
  if (!maximal_growth(m, m.arity(), delta)) {
    throw PreconditionError("no n-maximal growth in degree " + std::to_string(delta));
  }
  return regularity(truncation_ideal(ideal, delta), seed) <= delta;
}

bool truncation_regularity_check(const IdealPresentation& ideal, int delta,
                                 std::uint64_t seed) {
  return truncation_regularity_check(ideal, matrix_through(ideal, delta + 1, seed), delta,
                                     seed);
}

std::int64_t potential_gcd_degree(const SectionalMatrix& m, int delta) {
  require_column(m, delta);
  if (m.arity() < 2) throw PreconditionError("the GCD degree needs at least two rows");
  if (delta_piece_is_zero(m, delta)) throw PreconditionError("I_delta = 0");
  return m(2, delta);
}

Polynomial gcd_of_truncation(const IdealPresentation& ideal, const SectionalMatrix& m,
                             int delta) {
  const std::int64_t k = potential_gcd_degree(m, delta);
  require_column(m, delta + 1);
  if (m(2, delta + 1) != k) {
    throw PreconditionError("no 2-maximal growth in degree " + std::to_string(delta));
  }
  const IdealPresentation low = truncation_ideal(ideal, delta);
  const Polynomial g = multivariate_gcd(low.generators);
  if (g.degree() != k) {
    throw InvariantViolation("GCD " + g.to_string() + " of the truncation at " +
                             std::to_string(delta) + " has degree " +
                             std::to_string(g.degree()) + ", expected " + std::to_string(k));
  }
  for (const auto& f : truncation_ideal(ideal, delta + 1).generators) {
    if (!divides_exactly(g, f)) {
      throw InvariantViolation("GCD " + g.to_string() + " does not divide " + f.to_string());
    }
  }
  return g;
}

Polynomial gcd_of_truncation(const IdealPresentation& ideal, int delta, std::uint64_t seed) {
  return gcd_of_truncation(ideal, matrix_through(ideal, delta + 1, seed), delta);
}

int reduction_number(const MonomialIdeal& gin, int s) {
  const auto n = static_cast<int>(gin.arity());
  if (s < 0 || s >= n) {
    throw SemanticError("reduction number r_" + std::to_string(s) + " needs 0 <= s < " +
                        std::to_string(n));
  }
  const auto row = static_cast<std::size_t>(n - s);
  const HilbertNumerator series =
      reduce_series(hilbert_numerator(restrict_to_first_vars(gin, row)));
  if (series.denominator_exponent > 0) {
    throw InfiniteReductionNumber(s, static_cast<int>(row));
  }
  if (series.coeffs.empty()) throw SemanticError("the ideal is the whole ring");
  return static_cast<int>(series.coeffs.size()) - 1;
}

int reduction_number(const IdealPresentation& ideal, int s, std::uint64_t seed) {
  return reduction_number(rgin(ideal, seed).rgin, s);
}

bool saturated_growth_equivalence(const SectionalMatrix& m, int delta) {
  if (!is_saturated(m.source())) throw PreconditionError("the ideal is not saturated");
  const std::size_t n = m.arity();
  if (n < 2) throw PreconditionError("needs at least two indeterminates");
  return maximal_growth(m, n, delta) == maximal_growth(m, n - 1, delta);
}

bool saturated_growth_equivalence(const IdealPresentation& ideal, int delta,
                                  std::uint64_t seed) {
  return saturated_growth_equivalence(matrix_through(ideal, delta + 1, seed), delta);
}

bool truncation_saturation(const IdealPresentation& ideal, const SectionalMatrix& m,
                           int delta, std::uint64_t seed) {
  if (!is_saturated(m.source())) throw PreconditionError("the ideal is not saturated");
  const std::size_t n = m.arity();
  if (n < 2) throw PreconditionError("needs at least two indeterminates");
  const bool saturated = is_saturated(truncation_ideal(ideal, delta), seed);
  if (maximal_growth(m, n - 1, delta) && !saturated) {
    throw InvariantViolation("(n-1)-maximal growth at " + std::to_string(delta) +
                             " but the truncation is not saturated");
  }
  return saturated;
}

bool truncation_saturation(const IdealPresentation& ideal, int delta, std::uint64_t seed) {
  return truncation_saturation(ideal, matrix_through(ideal, delta + 1, seed), delta, seed);
}

std::optional<DimensionDiscrepancy> saturated_dimension_discrepancy(
    const IdealPresentation& ideal, const SectionalMatrix& m) {
  const std::size_t n = m.arity();
  if (n < 2 || !is_saturated(m.source())) return std::nullopt;
  for (int delta = 0; delta < m.max_degree(); ++delta) {
    if (m(n, delta) == 0 || delta_piece_is_zero(m, delta)) continue;
    if (!maximal_growth(m, n - 1, delta)) continue;
    std::size_t i = 2;
    while (i <= n && m(i, delta) == 0) ++i;
    if (i > n) continue;
    const int computed = dim_deg_of_ideal(truncation_ideal(ideal, delta)).dim;
    return DimensionDiscrepancy{delta, i, static_cast<int>(n - i),
                                static_cast<int>(n - i + 1), computed};
  }
  return std::nullopt;
}

}  // namespace secmat
