#ifndef SECMAT_KERNELS_HPP
#define SECMAT_KERNELS_HPP

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64 builds, an AVX2 version; the implementation is chosen once at
// runtime from the CPU features and can be pinned with the environment
// variable SECMAT_KERNELS=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "secmat/power_product.hpp"

namespace secmat::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Mersenne prime 2^31 - 1 used by the modular linear-algebra oracle.
inline constexpr std::uint32_t kPrime = 0x7fffffffu;

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  /// Index of the first candidate that divides t, or npos.
  std::size_t (*find_divisor)(const PowerProduct* candidates,
                              std::size_t count, const PowerProduct& t);
  /// Index of the first candidate divisible by t, or npos.
  std::size_t (*find_multiple)(const PowerProduct* candidates,
                               std::size_t count, const PowerProduct& t);
  /// row[k] <- (row[k] + factor * pivot[k]) mod kPrime. All inputs < kPrime.
  void (*axpy_mod)(std::uint32_t* row, const std::uint32_t* pivot,
                   std::uint32_t factor, std::size_t len);
};

const KernelTable& scalar_table();
/// nullptr when the build has no AVX2 variant or the CPU lacks AVX2.
const KernelTable* avx2_table();
/// The table used by the library.
const KernelTable& active();
/// Overrides the runtime choice; falls back to scalar when unavailable.
void select(Isa isa);
std::string_view isa_name(Isa isa);

inline std::size_t find_divisor(std::span<const PowerProduct> candidates,
                                const PowerProduct& t) {
  return active().find_divisor(candidates.data(), candidates.size(), t);
}

inline std::size_t find_multiple(std::span<const PowerProduct> candidates,
                                 const PowerProduct& t) {
  return active().find_multiple(candidates.data(), candidates.size(), t);
}

inline void axpy_mod(std::span<std::uint32_t> row,
                     std::span<const std::uint32_t> pivot,
                     std::uint32_t factor) {
  active().axpy_mod(row.data(), pivot.data(), factor, row.size());
}

/// Scalar helpers shared by the kernel variants and the oracle.
inline std::uint32_t reduce_mod(std::uint64_t x) {
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return x >= kPrime ? static_cast<std::uint32_t>(x - kPrime)
                     : static_cast<std::uint32_t>(x);
}

inline std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) {
  return reduce_mod(static_cast<std::uint64_t>(a) * b);
}

std::uint32_t inv_mod(std::uint32_t a);

}  // namespace secmat::kernels

#endif  // SECMAT_KERNELS_HPP
