#pragma once

#include <cstdint>
#include <vector>

#include "f4v/exactalg/field.hpp"

namespace f4v {

/// The Galois ring (Z/p^N)[x]/(M), M the integer lift of a field modulus.
/// Reducing mod p recovers the field. Used to evaluate integer polynomials
/// whose values are later divided by a power of p.
class GaloisRing {
 public:
  GaloisRing(const FieldCtx& field, unsigned N);

  const FieldCtx& field() const { return *field_; }
  std::uint64_t modulus_int() const { return M_; }  // p^N
  unsigned precision() const { return N_; }
  unsigned degree() const { return k_; }

 private:
  friend class GrElem;
  const FieldCtx* field_;
  unsigned N_;
  unsigned k_;
  std::uint64_t M_;
  std::vector<std::uint64_t> modulus_;  // lifted, monic, low-to-high
};

class GrElem {
 public:
  GrElem() = default;
  static GrElem zero(const GaloisRing& r);
  static GrElem from_integer(const GaloisRing& r, const Integer& z);
  /// Digitwise lift of a field element.
  static GrElem lift(const GaloisRing& r, const FieldElem& a);

  GrElem operator+(const GrElem& o) const;
  GrElem operator-(const GrElem& o) const;
  GrElem operator*(const GrElem& o) const;
  GrElem operator-() const;

  /// Divides by p^e (every coefficient must be divisible), reduces mod p and
  /// multiplies by the inverse of `unit` (an integer prime to p).
  FieldElem divide_reduce(unsigned e, const Integer& unit) const;

  const std::vector<std::uint64_t>& coeffs() const { return c_; }

 private:
  const GaloisRing* ring_ = nullptr;
  std::vector<std::uint64_t> c_;
};

/// Splits d = p^e * u with p not dividing u.
std::pair<unsigned, Integer> split_prime_power(const Integer& d, std::uint32_t p);

}  // namespace f4v
