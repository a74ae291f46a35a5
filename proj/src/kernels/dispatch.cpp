#include "f4v/kernels/kernels.hpp"

namespace f4v {

std::string kernel_name(KernelKind k) { return k == KernelKind::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(F4V_HAVE_AVX2_KERNEL)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

KernelKind select_kernel(const Program& prog) {
  return avx2_available() && prog.modulus < (1u << 16) ? KernelKind::Avx2 : KernelKind::Scalar;
}

void eval_batch(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out, KernelKind kind) {
#if defined(F4V_HAVE_AVX2_KERNEL)
  if (kind == KernelKind::Avx2) {
    if (!avx2_available() || prog.modulus >= (1u << 16)) throw std::invalid_argument("avx2 kernel unavailable for this program");
    eval_avx2(prog, in, count, out);
    return;
  }
#else
  if (kind == KernelKind::Avx2) throw std::invalid_argument("avx2 kernel not compiled in");
#endif
  eval_scalar(prog, in, count, out);
}

}  // namespace f4v
