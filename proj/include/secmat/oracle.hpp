#ifndef SECMAT_ORACLE_HPP
#define SECMAT_ORACLE_HPP

#include <cstdint>

#include "secmat/polynomial.hpp"

namespace secmat {

inline constexpr std::int64_t kOracleCellLimit = 50'000'000;

/// dim_K (P / (I + (L_1, ..., L_{n-i})))_d by linear algebra, independent of
/// rgin. The forms L_k = x_{i+k} - sum_{j<=i} c_kj x_j have random
/// coefficients; the degree-d multiples of the generators are reduced to
/// the first i indeterminates and their rank is taken modulo 2^31-1.
/// A non-generic draw can only make the result larger, never smaller.
/// Throws SemanticError when the coefficient matrix would exceed
/// kOracleCellLimit cells.
std::int64_t sectional_matrix_direct_oracle(const IdealPresentation& ideal, std::size_t i,
                                            int d, std::uint64_t seed);

}  // namespace secmat

#endif  // SECMAT_ORACLE_HPP
