#include "kernels_internal.hpp"

namespace secmat::kernels {
namespace {

std::size_t find_divisor_scalar(const PowerProduct* candidates,
                                std::size_t count, const PowerProduct& t) {
  const auto& target = t.lanes();
  for (std::size_t c = 0; c < count; ++c) {
    const auto& lanes = candidates[c].lanes();
    bool divides = true;
    for (std::size_t k = 0; k < kMaxArity; ++k) {
      if (lanes[k] > target[k]) {
        divides = false;
        break;
      }
    }
    if (divides) return c;
  }
  return npos;
}

std::size_t find_multiple_scalar(const PowerProduct* candidates,
                                 std::size_t count, const PowerProduct& t) {
  const auto& source = t.lanes();
  for (std::size_t c = 0; c < count; ++c) {
    const auto& lanes = candidates[c].lanes();
    bool multiple = true;
    for (std::size_t k = 0; k < kMaxArity; ++k) {
      if (source[k] > lanes[k]) {
        multiple = false;
        break;
      }
    }
    if (multiple) return c;
  }
  return npos;
}

void axpy_mod_scalar(std::uint32_t* row, const std::uint32_t* pivot,
                     std::uint32_t factor, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) {
    row[k] = reduce_mod(static_cast<std::uint64_t>(factor) * pivot[k] + row[k]);
  }
}

}  // namespace

std::uint32_t inv_mod(std::uint32_t a) {
  // Fermat: a^(p-2).
  std::uint32_t result = 1;
  std::uint32_t base = a;
  std::uint32_t e = kPrime - 2;
  while (e != 0) {
    if (e & 1u) result = mul_mod(result, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return result;
}

namespace detail {
const KernelTable kScalarTable{Isa::Scalar, &find_divisor_scalar,
                               &find_multiple_scalar, &axpy_mod_scalar};
}  // namespace detail

}  // namespace secmat::kernels
