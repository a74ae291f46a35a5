#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "f4v/kernels/program.hpp"

namespace f4v {

enum class KernelKind { Scalar, Avx2 };

std::string kernel_name(KernelKind k);
bool avx2_available();
/// Best kernel usable for this program on this CPU.
KernelKind select_kernel(const Program& prog);

/// Evaluates the numerator for `count` vectors stored label-major per vector:
/// in[v * prog.inputs + i], residues < prog.modulus. Writes residues mod M.
void eval_scalar(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out);
#if defined(F4V_HAVE_AVX2_KERNEL)
void eval_avx2(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out);
#endif

void eval_batch(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out, KernelKind kind);

}  // namespace f4v
