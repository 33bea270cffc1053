#include <atomic>
#include <cstdlib>
#include <string>

#include "kernels_internal.hpp"

namespace secmat::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(SECMAT_BUILD_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* initial_choice() {
  const char* env = std::getenv("SECMAT_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return &scalar_table();
  if (const KernelTable* simd = avx2_table()) return simd;
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_choice()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return detail::kScalarTable; }

const KernelTable* avx2_table() {
#if defined(SECMAT_BUILD_AVX2)
  static const bool available = cpu_has_avx2();
  return available ? &detail::kAvx2Table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

void select(Isa isa) {
  const KernelTable* table = &scalar_table();
  if (isa == Isa::Avx2 && avx2_table() != nullptr) table = avx2_table();
  current().store(table, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace secmat::kernels
