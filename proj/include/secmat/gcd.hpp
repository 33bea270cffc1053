#ifndef SECMAT_GCD_HPP
#define SECMAT_GCD_HPP

#include <span>

#include "secmat/polynomial.hpp"

namespace secmat {

/// Greatest common divisor over Q, normalized to integer content 1 and a
/// positive DegRevLex leading coefficient. gcd(f, 0) is f normalized and
/// gcd(0, 0) is 0.
///
/// Recursive content / primitive-part scheme: the polynomials are viewed in
/// K[x_1..x_{k-1}][x_k] for their last occurring variable x_k and reduced
/// by a primitive pseudo-remainder sequence.
Polynomial multivariate_gcd(const Polynomial& f, const Polynomial& g);

/// Iterated gcd of a non-empty list.
Polynomial multivariate_gcd(std::span<const Polynomial> polys);

}  // namespace secmat

#endif  // SECMAT_GCD_HPP
