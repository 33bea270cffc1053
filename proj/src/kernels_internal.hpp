#ifndef SECMAT_KERNELS_INTERNAL_HPP
#define SECMAT_KERNELS_INTERNAL_HPP

#include "secmat/kernels.hpp"

namespace secmat::kernels::detail {

extern const KernelTable kScalarTable;
#if defined(SECMAT_BUILD_AVX2)
extern const KernelTable kAvx2Table;
#endif

}  // namespace secmat::kernels::detail

#endif
