#include "f4v/exactalg/univariate.hpp"

#include "f4v/exactalg/fp_poly.hpp"

namespace f4v {

namespace fp_poly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t x = i < a.size() ? a[i] : 0;
    std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Poly mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i]) % p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) { return mod(mul(a, b, p), m, p); }

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly r{1};
  base = mod(base, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  if (f.size() < 2) return false;
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  Poly x{0, 1};
  Poly xp = x;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    xp = powmod(xp, p, f, p);
    Poly g = gcd(f, sub(xp, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace fp_poly

FieldElem horner(const std::vector<FieldElem>& coeffs, const FieldElem& x) {
  FieldElem acc = FieldElem::zero(x.field());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

std::vector<FieldRoot> univariate_roots(const FieldPoly& f, const FieldCtx& base, unsigned max_ext_degree) {
  if (f.nvars() != 1) throw std::invalid_argument("univariate_roots needs a one-variable polynomial");
  if (f.is_zero()) throw std::invalid_argument("univariate_roots of the zero polynomial");
  if (f.unit().field_ptr() != &base) throw RingMismatch("polynomial is not over the given base field");
  std::vector<FieldRoot> out;
  const std::uint32_t k = base.degree();
  for (unsigned e = 1; e <= max_ext_degree; ++e) {
    double approx = 1;
    for (unsigned i = 0; i < k * e; ++i) approx *= base.characteristic();
    if (approx > static_cast<double>(kMaxExtensionOrder)) break;
    const FieldCtx& ext = e == 1 ? base : FieldCtx::extension(base.characteristic(), k * e);
    FieldEmbedding emb(base, ext);
    std::vector<FieldElem> coeffs(f.total_degree() + 1, FieldElem::zero(ext));
    for (const auto& [m, c] : f.terms()) coeffs[m.e[0]] = emb(c);
    const std::uint64_t qb = base.order();
    for (std::uint64_t raw = 0; raw < ext.order(); ++raw) {
      FieldElem z(ext, static_cast<std::uint32_t>(raw));
      // Skip elements already found in a proper subfield F_{qb^d}, d | e.
      bool smaller = false;
      for (unsigned d = 1; d < e && !smaller; ++d) {
        if (e % d != 0) continue;
        std::uint64_t qd = 1;
        for (unsigned i = 0; i < d; ++i) qd *= qb;
        smaller = z.pow(qd) == z;
      }
      if (smaller) continue;
      if (horner(coeffs, z).is_zero()) out.push_back({z, &ext});
    }
  }
  return out;
}

}  // namespace f4v
