#pragma once

#include <cstdint>
#include <vector>

// Dense univariate polynomials over F_p (p < 2^31), low-to-high coefficients,
// no trailing zeros. Used to validate moduli and to find field generators.
namespace f4v::fp_poly {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
Poly mod(Poly a, const Poly& m, std::uint32_t p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);

/// Ben-Or: f irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p);

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace f4v::fp_poly
