#pragma once

#include <cstdint>
#include <vector>

#include "f4v/exactalg/integer.hpp"
#include "f4v/invariants/catalog.hpp"

namespace f4v {

enum class Op : std::uint8_t { Const, Add, Sub, Mul };

struct Instr {
  Op op;
  std::uint32_t dst;
  std::uint32_t a;  // operand register, or the constant for Const
  std::uint32_t b;
};

/// Straight-line evaluation of the Δ_m numerator modulo M = p^(e+1), where
/// p^e exactly divides the denominator. Registers 0..inputs-1 hold the labels.
struct Program {
  int m = 0;
  std::uint32_t p = 0;
  std::uint32_t modulus = 0;  // M
  unsigned e = 0;             // p-adic valuation of the denominator
  std::uint32_t unit_inv = 0;  // inverse mod p of denominator / p^e
  std::uint32_t inputs = 0;
  std::uint32_t registers = 0;
  std::uint32_t output = 0;
  std::vector<Instr> code;

  /// Δ mod p from the numerator residue mod M.
  std::uint32_t finish(std::uint32_t numer) const;
};

Program compile_delta(int m, std::uint32_t p, const FormulaCatalog& cat = default_catalog());

}  // namespace f4v
