#ifndef SECMAT_GROWTH_HPP
#define SECMAT_GROWTH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secmat/monomial_ideal.hpp"
#include "secmat/rational.hpp"
#include "secmat/sectional_matrix.hpp"

namespace secmat {

/// A failed instance of one of the growth inequalities:
///   'a'  M(i,d+1) <= sum_{j<=i} M(j,d)
///   'b'  M(i,d+1) <= (M(i,d)_d)^+_+                        (Macaulay)
///   'c'  M(i-1,d) - M(i-2,d) <= ((M(i,d) - M(i-1,d))_{d-1})^-
///   'd'  M(i-1,d) <= (M(i,d)_d)^-                           (Green)
struct BoundViolation {
  char inequality;
  std::size_t i;
  int d;
  std::int64_t lhs;
  std::int64_t rhs;

  std::string to_string() const;
  friend bool operator==(const BoundViolation&, const BoundViolation&) = default;
};

std::vector<BoundViolation> check_bounds(const SectionalMatrix& m);

/// M(i,d+1) == sum_{j<=i} M(j,d). Needs d+1 <= D.
bool maximal_growth(const SectionalMatrix& m, std::size_t i, int d);

/// Compares the growth flag at (i,d) with "gin has no minimal generator of
/// degree d+1 in x_1..x_i". Returns whether both sides agree.
bool no_new_generators_check(const SectionalMatrix& m, const MonomialIdeal& gin,
                             std::size_t i, int d);

/// sum_{j<=i} C(i-j+d-1, i-j) M(j,delta): the value of M(i, delta+d) once
/// i-maximal growth holds at delta and I is generated in degree <= delta+1.
std::int64_t persistence_extend(const SectionalMatrix& m, int delta, std::size_t i, int d);

/// Univariate polynomial with rational coefficients, ascending powers.
struct RationalPolynomial {
  std::vector<BigRational> coeffs;

  int degree() const;
  BigRational operator()(const BigRational& x) const;
  const BigRational& leading_coefficient() const;
  std::string to_string(const std::string& var = "x") const;
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;
};

/// p_i(x) = sum_{j<=i} C(i-j+x-delta-1, i-j) M(j,delta).
RationalPolynomial hilbert_polynomial_of_section(const SectionalMatrix& m, int delta,
                                                 std::size_t i);

/// Hilbert series of the i-th section as a numerator over (1-t)^i.
HilbertNumerator hilbert_series_of_section(const SectionalMatrix& m, int delta,
                                           std::size_t i);

/// Cancels common factors (1-t) between numerator and denominator.
HilbertNumerator reduce_series(HilbertNumerator series);

struct DimDeg {
  int dim;
  std::int64_t deg;
  friend bool operator==(const DimDeg&, const DimDeg&) = default;
};

/// Krull dimension and multiplicity of a series N(t)/(1-t)^k.
DimDeg dim_deg_of_series(const HilbertNumerator& series);

/// (n-i+1, M(i,delta)) with i = min{j | M(j,delta) != 0}. Throws
/// PreconditionError ("inconclusive") unless I_delta != P_delta, I is
/// generated in degree <= delta+1 and M(i,delta) = M(i,delta+1).
DimDeg dim_deg(const SectionalMatrix& m, int delta);

struct SectionHilbertSummary {
  RationalPolynomial hilbert_polynomial;
  HilbertNumerator hilbert_series;
  int dim;
  std::int64_t deg;
};

/// Polynomial, series and their invariants for the i-th section at delta.
SectionHilbertSummary section_summary(const SectionalMatrix& m, int delta, std::size_t i);

struct GrowthReport {
  /// maximal[i-1][d]: i-maximal growth in degree d, for d < D.
  std::vector<std::vector<bool>> maximal;
  /// Least delta >= generator_degree-1 with i-maximal growth, per row.
  std::vector<std::optional<int>> first_persistent_degree;
  /// Predicted M(i, D+1), ..., M(i, D+k) for rows with a persistent degree.
  std::vector<std::vector<std::int64_t>> predicted;
};

GrowthReport growth_report(const SectionalMatrix& m, int predict_columns = 3);

}  // namespace secmat

#endif  // SECMAT_GROWTH_HPP
