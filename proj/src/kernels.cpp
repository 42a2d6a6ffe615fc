#include "kernels_impl.hpp"

namespace pentparity::kernels {

const KernelSet* x86_clmul() {
#if defined(__x86_64__) && defined(__GNUC__)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("pclmul") && __builtin_cpu_supports("avx2");
  }();
  return supported ? x86_clmul_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet& best() {
  static const KernelSet& chosen = []() -> const KernelSet& {
    if (const KernelSet* k = x86_clmul()) return *k;
    return scalar();
  }();
  return chosen;
}

}  // namespace pentparity::kernels
