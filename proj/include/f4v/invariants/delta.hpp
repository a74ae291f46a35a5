#pragma once

#include <span>
#include <vector>

#include "f4v/exactalg/galois_ring.hpp"
#include "f4v/exactalg/sparse_poly.hpp"
#include "f4v/invariants/catalog.hpp"
#include "f4v/reps/basis.hpp"

namespace f4v {

/// Δ_m = numerator / denominator with an integer-coefficient numerator:
/// 1728 for m=3, 16 for m=6, 1 otherwise.
Integer delta_denominator(int m);

/// Total degree of Δ_m in the labels.
unsigned delta_degree(int m);

namespace detail {

template <class T, class Lift>
std::vector<T> eval_all(std::span<const IntPoly> polys, std::span<const T> xs, const T& zero, Lift lift) {
  std::vector<T> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.template eval<T>(xs, zero, lift));
  return out;
}

template <class T>
T quartic_from_product(const FormulaCatalog& cat, const std::vector<T>& b, const T& zero, auto lift) {
  std::vector<T> q = {
      b[0] * b[4],
      b[0] * b[5] + b[1] * b[4],
      b[1] * b[5] + b[2] * b[4],
      b[2] * b[5] + b[3] * b[4],
      b[3] * b[5],
  };
  return cat.disc4.template eval<T>(std::span<const T>(q), zero, lift);
}

}  // namespace detail

/// Numerator of Δ_m over any commutative ring T; `lift` maps integers into T.
template <class T, class Lift>
T delta_numerator(int m, std::span<const T> v, const T& zero, Lift lift, const FormulaCatalog& cat = default_catalog()) {
  if (v.size() != dim(m)) throw std::invalid_argument("vector length does not match dim V_m");
  switch (m) {
    case 3: {
      auto cubic = detail::eval_all<T>(cat.coeffs3, v, zero, lift);
      T s = cat.S.template eval<T>(std::span<const T>(cubic), zero, lift);
      T t = cat.T.template eval<T>(std::span<const T>(cubic), zero, lift);
      return s * s * s - t * t;
    }
    case 4: {
      auto q = detail::eval_all<T>(cat.coeffs4, v, zero, lift);
      return cat.disc4.template eval<T>(std::span<const T>(q), zero, lift);
    }
    case 6: {
      auto b = detail::eval_all<T>(cat.beta, v, zero, lift);
      return detail::quartic_from_product<T>(cat, b, zero, lift);
    }
    case 8: {
      T d1 = cat.disc_f1.template eval<T>(v, zero, lift);
      T r = cat.res_f1f2.template eval<T>(v, zero, lift);
      T u = v[5] * v[5] * v[6] * d1 * r;
      return u * u;
    }
    case 12: {
      T acc = lift(Integer(1));
      for (const auto& x : v) acc = acc * x;
      return acc;
    }
    default:
      throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
}

/// Divides a value known to lie in the image of an integer computation.
/// Over F_p with p | d this needs the Galois-ring lift, done by `field_divided`.
template <class Numer>
FieldElem field_divided(std::span<const FieldElem> xs, const FieldCtx& f, const Integer& d, Numer numer) {
  const std::uint32_t p = f.characteristic();
  auto [e, u] = split_prime_power(d, p);
  if (e == 0) {
    auto lift = [&](const Integer& z) { return FieldElem::from_integer(f, z); };
    FieldElem n = numer(xs, FieldElem::zero(f), lift);
    return n * FieldElem::from_integer(f, d).inverse();
  }
  GaloisRing ring(f, e + 1);
  std::vector<GrElem> lifted;
  lifted.reserve(xs.size());
  for (const auto& x : xs) lifted.push_back(GrElem::lift(ring, x));
  auto lift = [&](const Integer& z) { return GrElem::from_integer(ring, z); };
  GrElem n = numer(std::span<const GrElem>(lifted), GrElem::zero(ring), lift);
  return n.divide_reduce(e, u);
}

Integer delta(const IntVector& v, const FormulaCatalog& cat = default_catalog());
IntPoly delta(const SymVector& v, const FormulaCatalog& cat = default_catalog());
FieldElem delta(const FieldVector& v, const FormulaCatalog& cat = default_catalog());
/// Over F_p[vars]; requires p prime to the denominator.
FieldPoly delta(const VmVector<FieldPoly>& v, const FormulaCatalog& cat = default_catalog());

// Classical discriminants, coefficient order as in the catalog.
Integer disc2_ternary(std::span<const Integer> q, const FormulaCatalog& cat = default_catalog());
IntPoly disc2_ternary(std::span<const IntPoly> q, const FormulaCatalog& cat = default_catalog());
FieldElem disc2_ternary(std::span<const FieldElem> q, const FormulaCatalog& cat = default_catalog());
Integer disc4_binary(std::span<const Integer> q, const FormulaCatalog& cat = default_catalog());
IntPoly disc4_binary(std::span<const IntPoly> q, const FormulaCatalog& cat = default_catalog());
FieldElem disc4_binary(std::span<const FieldElem> q, const FormulaCatalog& cat = default_catalog());
/// (S^3 - T^2)/1728, divided exactly over Z before any reduction.
Integer disc3_ternary(std::span<const Integer> c, const FormulaCatalog& cat = default_catalog());
IntPoly disc3_ternary(std::span<const IntPoly> c, const FormulaCatalog& cat = default_catalog());
FieldElem disc3_ternary(std::span<const FieldElem> c, const FormulaCatalog& cat = default_catalog());

/// disc2 coefficients-of-linear-forms helper: the cubic A..J of Δ3's first stage.
std::vector<IntPoly> delta3_cubic(const SymVector& v, const FormulaCatalog& cat = default_catalog());

}  // namespace f4v
