#ifndef SECMAT_GIN_HPP
#define SECMAT_GIN_HPP

#include <cstdint>

#include "secmat/monomial_ideal.hpp"
#include "secmat/polynomial.hpp"

namespace secmat {

/// Outcome of a randomized rgin computation. `trials_used` counts the
/// coordinate changes that were carried out, `seed` is the user seed every
/// trial matrix was derived from.
struct GinResult {
  MonomialIdeal rgin{0};
  int trials_used = 0;
  std::uint64_t seed = 0;
  bool agreed = false;
};

inline constexpr int kMaxTrialPairs = 5;
inline constexpr int kMatrixEntryBound = 1000;

/// Seed of trial number `trial` for a user seed.
std::uint64_t trial_seed(std::uint64_t seed, int trial);

/// n x n integer matrix with entries uniform in [-1000, 1000], resampled
/// until the determinant is nonzero. Deterministic in `stream_seed`.
IntMatrix random_invertible_matrix(std::size_t n, std::uint64_t stream_seed);

/// LT_{DegRevLex}(g(I)) for the change of coordinates g.
MonomialIdeal leading_ideal_after_change(const IdealPresentation& ideal,
                                         const IntMatrix& g);

/// Generic initial ideal for DegRevLex. Trials run in pairs (concurrently);
/// a pair is accepted when both leading ideals coincide. Throws
/// GenericityError after kMaxTrialPairs disagreeing pairs and
/// InvariantViolation if the accepted ideal is not strongly stable.
GinResult rgin(const IdealPresentation& ideal, std::uint64_t seed);

/// Top degree of a minimal generator of rgin(I); 0 for the zero ideal.
int regularity(const IdealPresentation& ideal, std::uint64_t seed);
int regularity(const MonomialIdeal& gin);

/// No minimal generator of rgin(I) is divisible by the last variable.
bool is_saturated(const IdealPresentation& ideal, std::uint64_t seed);
bool is_saturated(const MonomialIdeal& gin);

}  // namespace secmat

#endif  // SECMAT_GIN_HPP
