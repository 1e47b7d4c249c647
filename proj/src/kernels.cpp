#include "wreathgap/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace wreathgap::kernels {

#if defined(WREATHGAP_HAVE_AVX2)
const KernelTable& avx2_table_impl();
#endif

const KernelTable* avx2_table() {
#if defined(WREATHGAP_HAVE_AVX2)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return supported ? &avx2_table_impl() : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("WREATHGAP_KERNELS");
  const std::string_view want = env ? env : "auto";
  if (want == "scalar") return scalar_table();
  if (const KernelTable* simd = avx2_table()) return *simd;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace wreathgap::kernels
