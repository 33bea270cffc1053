#include <immintrin.h>

#include "kernels_internal.hpp"

namespace secmat::kernels {
namespace {

// Exponents are below 2^15, so signed 16-bit comparisons order them
// correctly.

std::size_t find_divisor_avx2(const PowerProduct* candidates,
                              std::size_t count, const PowerProduct& t) {
  const __m256i target =
      _mm256_load_si256(reinterpret_cast<const __m256i*>(t.lanes().data()));
  for (std::size_t c = 0; c < count; ++c) {
    const __m256i lanes = _mm256_load_si256(
        reinterpret_cast<const __m256i*>(candidates[c].lanes().data()));
    const __m256i too_big = _mm256_cmpgt_epi16(lanes, target);
    if (_mm256_testz_si256(too_big, too_big)) return c;
  }
  return npos;
}

std::size_t find_multiple_avx2(const PowerProduct* candidates,
                               std::size_t count, const PowerProduct& t) {
  const __m256i source =
      _mm256_load_si256(reinterpret_cast<const __m256i*>(t.lanes().data()));
  for (std::size_t c = 0; c < count; ++c) {
    const __m256i lanes = _mm256_load_si256(
        reinterpret_cast<const __m256i*>(candidates[c].lanes().data()));
    const __m256i too_big = _mm256_cmpgt_epi16(source, lanes);
    if (_mm256_testz_si256(too_big, too_big)) return c;
  }
  return npos;
}

// Reduces four 64-bit lanes (each < 2^63) modulo 2^31 - 1.
inline __m256i reduce_lanes(__m256i x) {
  const __m256i p = _mm256_set1_epi64x(kPrime);
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  x = _mm256_add_epi64(_mm256_and_si256(x, p), _mm256_srli_epi64(x, 31));
  const __m256i ge = _mm256_cmpgt_epi64(x, _mm256_set1_epi64x(kPrime - 1));
  return _mm256_sub_epi64(x, _mm256_and_si256(ge, p));
}

void axpy_mod_avx2(std::uint32_t* row, const std::uint32_t* pivot,
                   std::uint32_t factor, std::size_t len) {
  const __m256i f = _mm256_set1_epi64x(factor);
  const __m256i low_mask = _mm256_set1_epi64x(0xffffffffLL);
  std::size_t k = 0;
  for (; k + 8 <= len; k += 8) {
    const __m256i r = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + k));
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pivot + k));
    const __m256i prod_even = _mm256_mul_epu32(v, f);
    const __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), f);
    const __m256i sum_even =
        _mm256_add_epi64(prod_even, _mm256_and_si256(r, low_mask));
    const __m256i sum_odd = _mm256_add_epi64(prod_odd, _mm256_srli_epi64(r, 32));
    const __m256i even = reduce_lanes(sum_even);
    const __m256i odd = reduce_lanes(sum_odd);
    const __m256i packed = _mm256_or_si256(even, _mm256_slli_epi64(odd, 32));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + k), packed);
  }
  for (; k < len; ++k) {
    row[k] = reduce_mod(static_cast<std::uint64_t>(factor) * pivot[k] + row[k]);
  }
}

}  // namespace

namespace detail {
const KernelTable kAvx2Table{Isa::Avx2, &find_divisor_avx2, &find_multiple_avx2,
                             &axpy_mod_avx2};
}  // namespace detail

}  // namespace secmat::kernels
