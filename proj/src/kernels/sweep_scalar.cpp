#include <vector>

#include "f4v/kernels/kernels.hpp"

namespace f4v {

void eval_scalar(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out) {
  const std::uint64_t M = prog.modulus;
  std::vector<std::uint32_t> reg(prog.registers);
  for (std::size_t v = 0; v < count; ++v) {
    const std::uint32_t* x = in + v * prog.inputs;
    for (std::uint32_t i = 0; i < prog.inputs; ++i) reg[i] = x[i];
    for (const Instr& ins : prog.code) {
      switch (ins.op) {
        case Op::Const: reg[ins.dst] = ins.a; break;
        case Op::Add: reg[ins.dst] = static_cast<std::uint32_t>((std::uint64_t{reg[ins.a]} + reg[ins.b]) % M); break;
        case Op::Sub: reg[ins.dst] = static_cast<std::uint32_t>((std::uint64_t{reg[ins.a]} + M - reg[ins.b]) % M); break;
        case Op::Mul: reg[ins.dst] = static_cast<std::uint32_t>((std::uint64_t{reg[ins.a]} * reg[ins.b]) % M); break;
      }
    }
    out[v] = reg[prog.output];
  }
}

}  // namespace f4v
