#include "f4v/invariants/delta.hpp"

namespace f4v {

Integer delta_denominator(int m) {
  switch (m) {
    case 3: return Integer(1728);
    case 6: return Integer(16);
    case 4:
    case 8:
    case 12: return Integer(1);
    default: throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
}

unsigned delta_degree(int m) {
  switch (m) {
    case 3: return 36;
    case 4: return 24;
    case 6: return 36;
    case 8: return 16;
    case 12: return 5;
    default: throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
}

namespace {

Integer exact_quotient(const Integer& n, const Integer& d) {
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
    throw NotDivisible(n.get_str() + " is not divisible by " + d.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

auto int_lift = [](const Integer& z) { return z; };

auto poly_lift(const IntPoly& proto) {
  return [vars = proto.vars()](const Integer& z) { return int_poly_const(vars, z); };
}

auto field_poly_lift(const FieldPoly& proto) {
  return [vars = proto.vars(), unit = proto.unit()](const Integer& z) {
    return FieldPoly::constant(vars, unit, FieldElem::from_integer(unit.field(), z));
  };
}

template <class T>
const FieldCtx& field_of(std::span<const T> xs) {
  if (xs.empty()) throw std::invalid_argument("empty coefficient list");
  const FieldCtx* f = xs[0].field_ptr();
  for (const auto& x : xs) {
    if (x.field_ptr() != f) throw RingMismatch("entries over different fields");
  }
  return *f;
}

template <class T, class Lift>
T cubic_numer(const FormulaCatalog& cat, std::span<const T> c, const T& zero, Lift lift) {
  T s = cat.S.template eval<T>(c, zero, lift);
  T t = cat.T.template eval<T>(c, zero, lift);
  return s * s * s - t * t;
}

}  // namespace

Integer delta(const IntVector& v, const FormulaCatalog& cat) {
  Integer n = delta_numerator<Integer>(v.m, std::span<const Integer>(v.entries), Integer(0), int_lift, cat);
  return exact_quotient(n, delta_denominator(v.m));
}

IntPoly delta(const SymVector& v, const FormulaCatalog& cat) {
  if (v.entries.empty()) throw std::invalid_argument("empty vector");
  const auto& proto = v.entries.front();
  IntPoly zero = int_poly_zero(proto.vars());
  IntPoly n = delta_numerator<IntPoly>(v.m, std::span<const IntPoly>(v.entries), zero, poly_lift(proto), cat);
  return exact_div_int(n, delta_denominator(v.m));
}

FieldElem delta(const FieldVector& v, const FormulaCatalog& cat) {
  const FieldCtx& f = field_of(std::span<const FieldElem>(v.entries));
  return field_divided(std::span<const FieldElem>(v.entries), f, delta_denominator(v.m),
                       [&](auto xs, const auto& zero, auto lift) {
                         using T = std::decay_t<decltype(zero)>;
                         return delta_numerator<T>(v.m, xs, zero, lift, cat);
                       });
}

FieldPoly delta(const VmVector<FieldPoly>& v, const FormulaCatalog& cat) {
  const auto& proto = v.entries.front();
  const FieldCtx& f = proto.unit().field();
  Integer d = delta_denominator(v.m);
  if (mpz_divisible_ui_p(d.get_mpz_t(), f.characteristic())) {
    throw std::domain_error("polynomial Δ over this characteristic needs the integer route");
  }
  FieldPoly zero(proto.vars(), proto.unit());
  FieldPoly n = delta_numerator<FieldPoly>(v.m, std::span<const FieldPoly>(v.entries), zero, field_poly_lift(proto), cat);
  return n.scale(FieldElem::from_integer(f, d).inverse());
}

Integer disc2_ternary(std::span<const Integer> q, const FormulaCatalog& cat) { return cat.disc2.eval(q); }
IntPoly disc2_ternary(std::span<const IntPoly> q, const FormulaCatalog& cat) {
  return cat.disc2.eval<IntPoly>(q, int_poly_zero(q[0].vars()), poly_lift(q[0]));
}
FieldElem disc2_ternary(std::span<const FieldElem> q, const FormulaCatalog& cat) {
  const FieldCtx& f = field_of(q);
  return cat.disc2.eval<FieldElem>(q, FieldElem::zero(f), [&](const Integer& z) { return FieldElem::from_integer(f, z); });
}

Integer disc4_binary(std::span<const Integer> q, const FormulaCatalog& cat) { return cat.disc4.eval(q); }
IntPoly disc4_binary(std::span<const IntPoly> q, const FormulaCatalog& cat) {
  return cat.disc4.eval<IntPoly>(q, int_poly_zero(q[0].vars()), poly_lift(q[0]));
}
FieldElem disc4_binary(std::span<const FieldElem> q, const FormulaCatalog& cat) {
  const FieldCtx& f = field_of(q);
  return cat.disc4.eval<FieldElem>(q, FieldElem::zero(f), [&](const Integer& z) { return FieldElem::from_integer(f, z); });
}

Integer disc3_ternary(std::span<const Integer> c, const FormulaCatalog& cat) {
  return exact_quotient(cubic_numer<Integer>(cat, c, Integer(0), int_lift), Integer(1728));
}
IntPoly disc3_ternary(std::span<const IntPoly> c, const FormulaCatalog& cat) {
  return exact_div_int(cubic_numer<IntPoly>(cat, c, int_poly_zero(c[0].vars()), poly_lift(c[0])), Integer(1728));
}
FieldElem disc3_ternary(std::span<const FieldElem> c, const FormulaCatalog& cat) {
  const FieldCtx& f = field_of(c);
  return field_divided(c, f, Integer(1728), [&](auto xs, const auto& zero, auto lift) {
    using T = std::decay_t<decltype(zero)>;
    return cubic_numer<T>(cat, xs, zero, lift);
  });
}

std::vector<IntPoly> delta3_cubic(const SymVector& v, const FormulaCatalog& cat) {
  const auto& proto = v.entries.front();
  return detail::eval_all<IntPoly>(cat.coeffs3, std::span<const IntPoly>(v.entries), int_poly_zero(proto.vars()),
                                   poly_lift(proto));
}

}  // namespace f4v
