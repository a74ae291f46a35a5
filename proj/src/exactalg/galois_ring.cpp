#include "f4v/exactalg/galois_ring.hpp"

namespace f4v {

GaloisRing::GaloisRing(const FieldCtx& field, unsigned N) : field_(&field), N_(N), k_(field.degree()) {
  if (N == 0) throw std::invalid_argument("Galois ring precision must be >= 1");
  M_ = 1;
  for (unsigned i = 0; i < N; ++i) {
    M_ *= field.characteristic();
    if (M_ >= (std::uint64_t{1} << 31)) throw std::invalid_argument("Galois ring modulus too large");
  }
  modulus_.assign(field.modulus().begin(), field.modulus().end());
}

GrElem GrElem::zero(const GaloisRing& r) {
  GrElem z;
  z.ring_ = &r;
  z.c_.assign(r.k_, 0);
  return z;
}

GrElem GrElem::from_integer(const GaloisRing& r, const Integer& z) {
  GrElem out = zero(r);
  Integer m = z % Integer(static_cast<unsigned long>(r.M_));
  if (m < 0) m += static_cast<unsigned long>(r.M_);
  out.c_[0] = m.get_ui();
  return out;
}

GrElem GrElem::lift(const GaloisRing& r, const FieldElem& a) {
  if (a.field_ptr() != r.field_) throw RingMismatch("lift from a different field");
  GrElem out = zero(r);
  auto d = r.field_->digits(a.raw());
  for (unsigned i = 0; i < r.k_; ++i) out.c_[i] = d[i];
  return out;
}

GrElem GrElem::operator+(const GrElem& o) const {
  GrElem r = *this;
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + o.c_[i]) % ring_->M_;
  return r;
}

GrElem GrElem::operator-(const GrElem& o) const {
  GrElem r = *this;
  for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = (c_[i] + ring_->M_ - o.c_[i]) % ring_->M_;
  return r;
}

GrElem GrElem::operator-() const { return zero(*ring_) - *this; }

GrElem GrElem::operator*(const GrElem& o) const {
  const auto M = ring_->M_;
  const unsigned k = ring_->k_;
  if (k == 1) {
    GrElem r = *this;
    r.c_[0] = c_[0] * o.c_[0] % M;
    return r;
  }
  std::vector<std::uint64_t> prod(2 * k - 1, 0);
  for (unsigned i = 0; i < k; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % M;
  }
  const auto& mod = ring_->modulus_;
  for (unsigned d = 2 * k - 2; d >= k; --d) {
    std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = -sum mod[i] x^(d-k+i)
    for (unsigned i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + (M - c) * (mod[i] % M)) % M;
  }
  GrElem r = *this;
  for (unsigned i = 0; i < k; ++i) r.c_[i] = prod[i];
  return r;
}

FieldElem GrElem::divide_reduce(unsigned e, const Integer& unit) const {
  const auto& f = *ring_->field_;
  const std::uint32_t p = f.characteristic();
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  if (e >= ring_->N_) throw std::logic_error("Galois ring precision too small for the division");
  std::vector<std::uint32_t> digits(ring_->k_);
  for (unsigned i = 0; i < ring_->k_; ++i) {
    if (c_[i] % pe != 0) throw NotDivisible("Galois ring value not divisible by p^" + std::to_string(e));
    digits[i] = static_cast<std::uint32_t>((c_[i] / pe) % p);
  }
  FieldElem v(f, f.from_digits(digits));
  return v * FieldElem::from_integer(f, unit).inverse();
}

std::pair<unsigned, Integer> split_prime_power(const Integer& d, std::uint32_t p) {
  Integer u = d;
  unsigned e = 0;
  while (sgn(u) != 0 && mpz_divisible_ui_p(u.get_mpz_t(), p)) {
    u /= p;
    ++e;
  }
  return {e, u};
}

}  // namespace f4v
