#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "f4v/exactalg/integer.hpp"

namespace f4v {

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest field order for which extension-field tables are built.
inline constexpr std::uint64_t kMaxExtensionOrder = std::uint64_t{1} << 20;

/// A finite field F_p or F_p[x]/(modulus).
///
/// Contexts are interned for the lifetime of the process: `prime(p)` and
/// `extension(p, k)` always hand back the same object for the same
/// arguments, so elements can refer to their field by pointer and two
/// elements share a field iff their context pointers are equal.
/// Construction is serialized; a constructed context is immutable.
///
/// Elements are encoded as a single integer: a residue for prime fields,
/// and sum(c_i p^i) for the polynomial c_0 + c_1 x + ... in extensions.
class FieldCtx {
 public:
  static const FieldCtx& prime(std::uint32_t p);
  /// Extension of degree k with the shipped modulus (Conway polynomial where
  /// tabulated, else the lexicographically first irreducible).
  static const FieldCtx& extension(std::uint32_t p, std::uint32_t k);
  /// Extension with an explicit monic modulus, low-to-high coefficients.
  static const FieldCtx& with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  bool is_prime_field() const { return k_ == 1; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// "F5", "F2^4"
  std::string name() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t from_integer(const Integer& z) const;
  std::uint32_t from_digits(std::span<const std::uint32_t> digits) const;
  std::vector<std::uint32_t> digits(std::uint32_t a) const;

  /// Raw code of the class of x (the adjoined root). Prime fields have none.
  std::uint32_t generator() const;

 private:
  FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus);
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, i < q-1
  std::vector<std::uint32_t> log_;  // log_[a] for a != 0
};

class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx& f, std::uint32_t raw);
  static FieldElem zero(const FieldCtx& f) { return {f, 0}; }
  static FieldElem one(const FieldCtx& f) { return {f, 1}; }
  static FieldElem from_integer(const FieldCtx& f, const Integer& z) { return {f, f.from_integer(z)}; }
  static FieldElem from_int(const FieldCtx& f, long z) { return from_integer(f, Integer(z)); }
  static FieldElem generator(const FieldCtx& f) { return {f, f.generator()}; }

  const FieldCtx& field() const { return *ctx_; }
  const FieldCtx* field_ptr() const { return ctx_; }
  std::uint32_t raw() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem inverse() const;
  FieldElem pow(std::uint64_t e) const;
  FieldElem pow(std::int64_t e) const;

  bool operator==(const FieldElem& o) const { return ctx_ == o.ctx_ && v_ == o.v_; }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  /// Residue for prime fields; polynomial in x otherwise ("x^2+2*x+1").
  std::string to_string() const;

 private:
  void check_same(const FieldElem& o) const;
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

inline bool is_zero(const FieldElem& a) { return a.is_zero(); }
inline void fma_into(FieldElem& acc, const FieldElem& x, const FieldElem& y) { acc += x * y; }
inline std::string to_string(const FieldElem& a) { return a.to_string(); }

/// Square root in characteristic 2: x^(2^(k-1)), where 2^k is the field order.
FieldElem field_sqrt_char2(const FieldElem& x);

/// Field embedding F_{p^k} -> F_{p^n}, k | n. The image of the base generator
/// is the compatible (norm-power) root for Conway moduli, else the first root.
class FieldEmbedding {
 public:
  FieldEmbedding(const FieldCtx& from, const FieldCtx& to);
  FieldElem operator()(const FieldElem& a) const;
  const FieldCtx& source() const { return *from_; }
  const FieldCtx& target() const { return *to_; }

 private:
  const FieldCtx* from_;
  const FieldCtx* to_;
  std::vector<FieldElem> basis_images_;  // image of x^i
};

bool is_prime(std::uint64_t n);

/// Shipped Conway polynomial for (p, k), low-to-high, or empty.
std::vector<std::uint32_t> conway_polynomial(std::uint32_t p, std::uint32_t k);

}  // namespace f4v
