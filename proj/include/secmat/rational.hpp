#ifndef SECMAT_RATIONAL_HPP
#define SECMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace secmat {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept canonical (reduced, positive
/// denominator, zero as 0/1) by GMP.
using BigRational = mpq_class;

inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace secmat

#endif  // SECMAT_RATIONAL_HPP
