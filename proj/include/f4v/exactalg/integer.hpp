#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace f4v {

using Integer = mpz_class;

/// Thrown when two operands live in different coefficient rings or variable frames.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an exact division leaves a remainder.
class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline Integer integer_pow(Integer base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// acc += x * y without a temporary
inline void fma_into(Integer& acc, const Integer& x, const Integer& y) {
  mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
}

inline bool is_zero(const Integer& z) { return sgn(z) == 0; }

}  // namespace f4v
