#include "f4v/exactalg/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "f4v/exactalg/fp_poly.hpp"

namespace f4v {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::unique_ptr<FieldCtx>> fields;
  std::map<std::pair<std::uint32_t, std::uint32_t>, const FieldCtx*> defaults;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::vector<std::uint32_t> first_irreducible(std::uint32_t p, std::uint32_t k) {
  // Monic polynomials of degree k in lexicographic order of (c_{k-1}, ..., c_0).
  std::vector<std::uint32_t> f(k + 1, 0);
  f[k] = 1;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    if (f[0] != 0 && fp_poly::is_irreducible(f, p)) return f;
  }
  throw FieldError("no irreducible polynomial found");
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<std::uint32_t>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < k_; ++i) q_ *= p_;
  if (k_ > 1) build_tables();
}

const FieldCtx& FieldCtx::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw FieldError("not a prime below 2^31: " + std::to_string(p));
  return with_modulus(p, {0, 1});
}

const FieldCtx& FieldCtx::extension(std::uint32_t p, std::uint32_t k) {
  if (k == 0) throw FieldError("extension degree must be >= 1");
  if (k == 1) return prime(p);
  if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
  {
    auto& reg = registry();
    std::lock_guard<std::mutex> lock(reg.mu);
    auto it = reg.defaults.find({p, k});
    if (it != reg.defaults.end()) return *it->second;
  }
  auto mod = conway_polynomial(p, k);
  if (mod.empty()) mod = first_irreducible(p, k);
  const FieldCtx& f = with_modulus(p, mod);
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  reg.defaults.emplace(std::make_pair(p, k), &f);
  return f;
}

const FieldCtx& FieldCtx::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (p >= (1u << 31) || !is_prime(p)) throw FieldError("not a prime below 2^31: " + std::to_string(p));
  fp_poly::trim(modulus);
  if (modulus.size() < 2 || modulus.back() != 1) throw FieldError("modulus must be monic of degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw FieldError("modulus coefficient out of range");
  }
  const auto k = static_cast<std::uint32_t>(modulus.size() - 1);
  if (k == 1) {
    modulus = {0, 1};  // the prime field itself, whatever linear modulus was given
  } else {
    double approx = 1;
    for (std::uint32_t i = 0; i < k; ++i) approx *= p;
    if (approx > static_cast<double>(kMaxExtensionOrder)) {
      throw FieldError("extension field too large for table arithmetic");
    }
    if (!fp_poly::is_irreducible(modulus, p)) throw FieldError("modulus is reducible");
  }
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_pair(p, modulus);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return *it->second;
  auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, modulus));
  const FieldCtx& ref = *ctx;
  reg.fields.emplace(std::move(key), std::move(ctx));
  return ref;
}

std::string FieldCtx::name() const {
  if (k_ == 1) return "F" + std::to_string(p_);
  return "F" + std::to_string(p_) + "^" + std::to_string(k_);
}

std::vector<std::uint32_t> FieldCtx::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(k_, 0);
  if (k_ == 1) {
    d[0] = a;
    return d;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t FieldCtx::from_digits(std::span<const std::uint32_t> digits) const {
  if (k_ == 1) return digits.empty() ? 0 : digits[0] % p_;
  std::uint64_t v = 0;
  for (std::size_t i = std::min<std::size_t>(digits.size(), k_); i-- > 0;) v = v * p_ + digits[i] % p_;
  return static_cast<std::uint32_t>(v);
}

std::uint32_t FieldCtx::from_integer(const Integer& z) const {
  Integer r = z % p_;
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t FieldCtx::generator() const {
  if (k_ == 1) throw FieldError("prime field has no adjoined generator");
  return p_;  // digits (0, 1, 0, ...)
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    out += s * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    std::uint32_t d = a % p_;
    a /= p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
  }
  return out;
}

std::uint32_t FieldCtx::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FieldCtx::mul(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = std::uint64_t{log_[a]} + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

std::uint32_t FieldCtx::mul_slow(std::uint32_t a, std::uint32_t b) const {
  auto pa = digits(a), pb = digits(b);
  fp_poly::trim(pa);
  fp_poly::trim(pb);
  auto r = fp_poly::mulmod(pa, pb, modulus_, p_);
  return from_digits(r);
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + name());
  if (k_ == 1) return fp_poly::inv_mod(a, p_);
  std::uint64_t e = log_[a] == 0 ? 0 : (q_ - 1) - log_[a];
  return exp_[e];
}

std::uint32_t FieldCtx::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

void FieldCtx::build_tables() {
  const std::uint64_t n = q_ - 1;
  const auto factors = prime_factors(n);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t g = 0;
  for (std::uint64_t cand = p_; cand < q_; ++cand) {  // start at x
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(static_cast<std::uint32_t>(cand), n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = static_cast<std::uint32_t>(cand);
      break;
    }
  }
  if (g == 0) throw FieldError("no primitive element found");
  exp_.assign(n, 0);
  log_.assign(q_, 0);
  std::uint32_t cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = cur;
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_slow(cur, g);
  }
}

// ---------------------------------------------------------------------------

FieldElem::FieldElem(const FieldCtx& f, std::uint32_t raw) : ctx_(&f), v_(raw) {
  if (raw >= f.order()) throw FieldError("raw field code out of range");
}

void FieldElem::check_same(const FieldElem& o) const {
  if (ctx_ != o.ctx_) {
    throw RingMismatch("field mismatch: " + (ctx_ ? ctx_->name() : std::string("?")) + " vs " +
                       (o.ctx_ ? o.ctx_->name() : std::string("?")));
  }
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(o);
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->add(v_, o.v_);
  return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(o);
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->sub(v_, o.v_);
  return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(o);
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->mul(v_, o.v_);
  return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::operator-() const {
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->neg(v_);
  return r;
}

FieldElem FieldElem::inverse() const {
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->inv(v_);
  return r;
}

FieldElem FieldElem::pow(std::uint64_t e) const {
  FieldElem r;
  r.ctx_ = ctx_;
  r.v_ = ctx_->pow(v_, e);
  return r;
}

FieldElem FieldElem::pow(std::int64_t e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inverse().pow(static_cast<std::uint64_t>(-e));
}

std::string FieldElem::to_string() const {
  if (ctx_ == nullptr) return "?";
  if (ctx_->is_prime_field()) return std::to_string(v_);
  auto d = ctx_->digits(v_);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i] << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

FieldElem field_sqrt_char2(const FieldElem& x) {
  const auto& f = x.field();
  if (f.characteristic() != 2) throw FieldError("field_sqrt_char2 needs characteristic 2, got " + f.name());
  // Frobenius has order k, so x^(2^(k-1)) squares to x.
  FieldElem r = x;
  for (std::uint32_t i = 1; i < f.degree(); ++i) r = r * r;
  return r;
}

// ---------------------------------------------------------------------------

FieldEmbedding::FieldEmbedding(const FieldCtx& from, const FieldCtx& to) : from_(&from), to_(&to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0) {
    throw FieldError("no embedding " + from.name() + " -> " + to.name());
  }
  const std::uint32_t k = from.degree();
  basis_images_.reserve(k);
  if (k == 1) {
    basis_images_.push_back(FieldElem::one(to));
    return;
  }
  const auto& mod = from.modulus();
  auto is_root = [&](const FieldElem& z) {
    FieldElem acc = FieldElem::zero(to);
    for (std::size_t i = mod.size(); i-- > 0;) acc = acc * z + FieldElem::from_int(to, mod[i]);
    return acc.is_zero();
  };
  FieldElem image;
  bool found = false;
  if (&from == &to) {
    image = FieldElem::generator(to);
    found = true;
  }
  if (!found && to.degree() > 1) {
    // Conway compatibility: norm power of the target generator.
    std::uint64_t qf = from.order(), qt = to.order();
    FieldElem cand = FieldElem::generator(to).pow((qt - 1) / (qf - 1));
    if (is_root(cand)) {
      image = cand;
      found = true;
    }
  }
  for (std::uint64_t raw = 0; !found && raw < to.order(); ++raw) {
    FieldElem z(to, static_cast<std::uint32_t>(raw));
    if (is_root(z)) {
      image = z;
      found = true;
    }
  }
  if (!found) throw FieldError("embedding root not found");
  FieldElem cur = FieldElem::one(to);
  for (std::uint32_t i = 0; i < k; ++i) {
    basis_images_.push_back(cur);
    cur = cur * image;
  }
}

FieldElem FieldEmbedding::operator()(const FieldElem& a) const {
  if (a.field_ptr() != from_) throw RingMismatch("embedding source mismatch");
  auto d = from_->digits(a.raw());
  FieldElem acc = FieldElem::zero(*to_);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i]) acc += FieldElem::from_int(*to_, d[i]) * basis_images_[i];
  }
  return acc;
}

}  // namespace f4v
