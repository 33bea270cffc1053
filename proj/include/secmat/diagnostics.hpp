#ifndef SECMAT_DIAGNOSTICS_HPP
#define SECMAT_DIAGNOSTICS_HPP

#include <cstdint>
#include <optional>

#include "secmat/growth.hpp"
#include "secmat/polynomial.hpp"
#include "secmat/sectional_matrix.hpp"

namespace secmat {

// Every operation taking an ideal and a seed computes rgin(I) itself; the
// overloads taking a SectionalMatrix reuse one computed by the caller from
// the same ideal. Matrices are extended as needed so that column delta+1
// exists.

/// Krull dimension and multiplicity of P/I from the Hilbert series of a
/// DegRevLex leading-term ideal.
DimDeg dim_deg_of_ideal(const IdealPresentation& ideal);

struct TruncationDimDeg {
  int dim;
  std::int64_t deg;
  /// The answer was confirmed for <I_{<=delta+1}> as well.
  bool also_next;
  std::size_t i;
};

/// (n-i+1, M(i,delta)) for <I_{<=delta}> and <I_{<=delta+1}> with
/// i = min{j > 1 | M(j,delta) != 0}, confirmed by analysing both
/// truncations directly. Needs 0 != I_delta != P_delta and
/// M(i,delta) = M(i,delta+1).
TruncationDimDeg truncation_dim_deg(const IdealPresentation& ideal, int delta,
                                    std::uint64_t seed);
TruncationDimDeg truncation_dim_deg(const IdealPresentation& ideal, const SectionalMatrix& m,
                                    int delta, std::uint64_t seed);

/// reg(<I_{<=delta}>) <= delta, given n-maximal growth at delta.
bool truncation_regularity_check(const IdealPresentation& ideal, int delta,
                                 std::uint64_t seed);
bool truncation_regularity_check(const IdealPresentation& ideal, const SectionalMatrix& m,
                                 int delta, std::uint64_t seed);

/// M(2,delta), defined when I_delta != 0.
std::int64_t potential_gcd_degree(const SectionalMatrix& m, int delta);

/// GCD of the elements of <I_{<=delta}>, checked to have degree M(2,delta)
/// and to divide every generator of <I_{<=delta+1}> (InvariantViolation
/// otherwise). Needs I_delta != 0 and M(2,delta) = M(2,delta+1).
Polynomial gcd_of_truncation(const IdealPresentation& ideal, int delta, std::uint64_t seed);
Polynomial gcd_of_truncation(const IdealPresentation& ideal, const SectionalMatrix& m,
                             int delta);

/// r_s(P/I): the last nonzero column of row n-s, for 0 <= s < n. Throws
/// InfiniteReductionNumber when that row never vanishes.
int reduction_number(const IdealPresentation& ideal, int s, std::uint64_t seed);
int reduction_number(const MonomialIdeal& gin, int s);

/// For saturated I: n-maximal growth at delta iff (n-1)-maximal growth.
/// Returns whether the two flags agree.
bool saturated_growth_equivalence(const IdealPresentation& ideal, int delta,
                                  std::uint64_t seed);
bool saturated_growth_equivalence(const SectionalMatrix& m, int delta);

/// Whether <I_{<=delta}> is saturated, for saturated I. When M has
/// (n-1)-maximal growth at delta the answer must be true; a false answer
/// then raises InvariantViolation.
bool truncation_saturation(const IdealPresentation& ideal, int delta, std::uint64_t seed);
bool truncation_saturation(const IdealPresentation& ideal, const SectionalMatrix& m,
                           int delta, std::uint64_t seed);

/// For a saturated ideal with 0 != I_delta != P_delta and (n-1)-maximal
/// growth at delta, the dimension of <I_{<=delta}> can be stated either as
/// n-i or as n-i+1 (i = min{j > 1 | M(j,delta) != 0}). Only the second
/// agrees with the dimension/degree theorem; both values are kept so the
/// report can show the disagreement.
struct DimensionDiscrepancy {
  int delta;
  std::size_t i;
  int n_minus_i;
  int n_minus_i_plus_1;
  /// Dimension of P/<I_{<=delta}> computed from its own Hilbert series.
  int computed;

  friend bool operator==(const DimensionDiscrepancy&, const DimensionDiscrepancy&) = default;
};

/// The first delta < D where the situation above arises, if any.
std::optional<DimensionDiscrepancy> saturated_dimension_discrepancy(
    const IdealPresentation& ideal, const SectionalMatrix& m);

}  // namespace secmat

#endif  // SECMAT_DIAGNOSTICS_HPP
