#include <doctest.h>

#include <random>

#include "f4v/exactalg/parse.hpp"
#include "f4v/invariants/delta.hpp"
#include "f4v/reps/vector_io.hpp"

using namespace f4v;

namespace {

const Vars& xyz() {
  static const Vars v = make_vars({"X", "Y", "Z"});
  return v;
}

Monomial mono(int x, int y, int z) {
  Monomial m;
  m.e[0] = static_cast<std::uint8_t>(x);
  m.e[1] = static_cast<std::uint8_t>(y);
  m.e[2] = static_cast<std::uint8_t>(z);
  return m;
}

std::vector<Integer> coeffs(const IntPoly& f, const std::vector<Monomial>& order) {
  std::vector<Integer> out;
  for (const auto& m : order) out.push_back(f.coeff(m));
  return out;
}

const std::vector<Monomial> kQuadratic = {mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2),
                                          mono(1, 1, 0), mono(1, 0, 1), mono(0, 1, 1)};
const std::vector<Monomial> kCubic = {mono(3, 0, 0), mono(2, 1, 0), mono(2, 0, 1), mono(1, 2, 0), mono(1, 1, 1),
                                      mono(1, 0, 2), mono(0, 3, 0), mono(0, 2, 1), mono(0, 1, 2), mono(0, 0, 3)};
const std::vector<Monomial> kQuartic = {mono(4, 0, 0), mono(3, 1, 0), mono(2, 2, 0), mono(1, 3, 0), mono(0, 4, 0)};

IntPoly form(const char* text) { return parse_poly(text, xyz()); }

std::vector<FieldElem> reduce_all(const std::vector<Integer>& xs, const FieldCtx& f) {
  std::vector<FieldElem> out;
  for (const auto& x : xs) out.push_back(FieldElem::from_integer(f, x));
  return out;
}

struct Rng {
  std::mt19937_64 gen{17};
  long small() { return static_cast<long>(gen() % 21) - 10; }
  IntPoly linear(bool binary) {
    const IntPoly z = binary ? int_poly_zero(xyz()) : int_poly_const(xyz(), Integer(small())) * int_poly_var(xyz(), "Z");
    return int_poly_const(xyz(), Integer(small())) * int_poly_var(xyz(), "X") +
           int_poly_const(xyz(), Integer(small())) * int_poly_var(xyz(), "Y") + z;
  }
};

// Determinant of the coefficient rows of three linear forms, mod p.
long det3(const std::array<IntPoly, 3>& l, long p) {
  Integer m[3][3];
  for (int i = 0; i < 3; ++i) {
    m[i][0] = l[i].coeff(mono(1, 0, 0));
    m[i][1] = l[i].coeff(mono(0, 1, 0));
    m[i][2] = l[i].coeff(mono(0, 0, 1));
  }
  Integer d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
              m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  Integer r = d % p;
  return r.get_si();
}

long det2(const IntPoly& a, const IntPoly& b, long p) {
  Integer d = a.coeff(mono(1, 0, 0)) * b.coeff(mono(0, 1, 0)) - a.coeff(mono(0, 1, 0)) * b.coeff(mono(1, 0, 0));
  Integer r = d % p;
  return r.get_si();
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("ternary quadratic discriminant") {
    CHECK(disc2_ternary(coeffs(form("X^2"), kQuadratic)) == 0);
    CHECK(disc2_ternary(coeffs(form("X^2 + Y^2 + Z^2"), kQuadratic)) == 4);
    const auto& cat = default_catalog();
    std::vector<IntPoly> generic;
    for (std::size_t i = 0; i < 6; ++i) generic.push_back(IntPoly::variable(cat.quadratic_vars, Integer(1), i));
    CHECK(disc2_ternary(std::span<const IntPoly>(generic)) ==
          parse_poly("4*A*B*C + D*E*F - A*F^2 - B*E^2 - C*D^2", cat.quadratic_vars));
  }

  TEST_CASE("ternary cubic discriminant") {
    const auto& cat = default_catalog();
    auto st = [&](const IntPoly& f) {
      auto c = coeffs(f, kCubic);
      std::span<const Integer> s(c);
      return std::pair{cat.S.eval(s), cat.T.eval(s)};
    };
    CHECK(st(form("X*Y*Z")) == std::pair<Integer, Integer>{1, -1});
    CHECK(disc3_ternary(coeffs(form("X*Y*Z"), kCubic)) == 0);
    CHECK(st(form("X^3 + Y^3 + Z^3")) == std::pair<Integer, Integer>{0, 5832});
    CHECK(disc3_ternary(coeffs(form("X^3 + Y^3 + Z^3"), kCubic)) == -19683);
  }

  TEST_CASE("binary quartic discriminant") {
    CHECK(disc4_binary(coeffs(form("X^4"), kQuartic)) == 0);
    CHECK(disc4_binary(coeffs(form("X^3*Y"), kQuartic)) == 0);
    CHECK(disc4_binary(coeffs(form("X^3*Y - X*Y^3"), kQuartic)) == 4);
  }

  TEST_CASE("discriminants against root multiplicity") {
    Rng rng;
    const FieldCtx& F = FieldCtx::prime(101);
    const long p = 101;
    int repeated = 0, distinct = 0;
    while (repeated < 50 || distinct < 50) {
      // binary quartics
      IntPoly l1 = rng.linear(true), l2 = rng.linear(true), l3 = rng.linear(true), l4 = rng.linear(true);
      if (det2(l1, l2, p) == 0) continue;
      IntPoly rep = l1 * l1 * l2 * l3;
      if (!rep.is_zero()) {
        CHECK(disc4_binary(coeffs(rep, kQuartic)) == 0);
        CHECK(disc4_binary(reduce_all(coeffs(rep, kQuartic), F)).is_zero());
        ++repeated;
      }
      const IntPoly ls[4] = {l1, l2, l3, l4};
      bool apart = true;
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) apart = apart && det2(ls[i], ls[j], p) != 0;
      if (apart) {
        IntPoly q = l1 * l2 * l3 * l4;
        CHECK(disc4_binary(coeffs(q, kQuartic)) != 0);
        CHECK(!disc4_binary(reduce_all(coeffs(q, kQuartic), F)).is_zero());
        ++distinct;
      }
    }

    int checked = 0;
    while (checked < 50) {
      std::array<IntPoly, 3> l = {rng.linear(false), rng.linear(false), rng.linear(false)};
      if (det3(l, p) == 0) continue;
      ++checked;
      // ternary quadratics: reducible vs. nondegenerate
      IntPoly reducible = l[0] * l[1];
      CHECK(disc2_ternary(coeffs(reducible, kQuadratic)) == 0);
      IntPoly smooth2 = l[0] * l[0] + l[1] * l[1] + l[2] * l[2];
      CHECK(!disc2_ternary(reduce_all(coeffs(smooth2, kQuadratic), F)).is_zero());
      // ternary cubics: reducible (singular) vs. Fermat-type (smooth for p > 3)
      IntPoly singular = l[0] * (l[1] * l[1] + l[2] * l[0]);
      CHECK(disc3_ternary(coeffs(singular, kCubic)) == 0);
      CHECK(disc3_ternary(reduce_all(coeffs(singular, kCubic), F)).is_zero());
      IntPoly smooth3 = l[0] * l[0] * l[0] + l[1] * l[1] * l[1] + l[2] * l[2] * l[2];
      CHECK(disc3_ternary(coeffs(smooth3, kCubic)) != 0);
      CHECK(!disc3_ternary(reduce_all(coeffs(smooth3, kCubic), F)).is_zero());
    }
  }

  TEST_CASE("composite invariants on explicit vectors") {
    for (int m : {3, 4, 6, 8, 12}) CHECK(delta(zero_vector(m, Integer(0))) == 0);
    CHECK(delta(parse_int_vector("a=1,c=1,d=1,f=1,i=1,k=1,l=1,m=1,o=1,q=1", 3)) == 225);
    CHECK(delta(parse_int_vector("a=1,d=1,e=1,f=1,h=1,k=1,l=1,m=1", 4)) == 125);
    CHECK(delta(parse_int_vector("b=1,d=1,e=1,f=1,g=1", 8)) == 1);
    CHECK(delta(parse_int_vector("b=1,d=1,e=1,g=1", 8)) == 0);
    CHECK(delta(parse_int_vector("a=1,d=1,e=1,f=1,g=1", 8)) == 0);
    CHECK(delta(parse_int_vector("c1=1,c2=1,c3=1,c4=1,c5=1", 12)) == 1);
    CHECK(delta(parse_int_vector("c1=1,c2=2,c3=3,c4=4,c5=5", 12)) == 120);
    CHECK(delta(parse_int_vector("c1=1,c2=2,c3=0,c4=4,c5=5", 12)) == 0);
  }

  TEST_CASE("symbolic invariants") {
    auto dual = [](int m) {
      std::array<IntPoly, 5> c;
      for (int i = 0; i < 5; ++i) c[i] = int_poly_var(label_vars(m), dual_cyclic_labels(m)[i]);
      return dual_cyclic<IntPoly>(m, c);
    };
    CHECK(delta(dual(3)).to_string() == "4096*a^6*e^3*h^9*l^12*p^6");
    CHECK(delta(dual(4)) == parse_poly("-27 a^2 d^4 k^4 j^8 m^6", label_vars(4)));
    CHECK(delta(dual(6)).to_string() == "16*b^9*e^3*g^6*j^6*r^12");
    CHECK(delta(parse_sym_vector("a=a,d=d,h=h,j=j,k=k,r=r", 6)) ==
          parse_poly("16a^9d^3h^6k^6r^12 - 8a^8d^2h^6j^2k^6r^12 + a^7dh^6j^4k^6r^12", label_vars(6)));
    IntPoly d8 = delta(generic_vector(8));
    CHECK(d8.total_degree() == 16);
    CHECK(d8.is_homogeneous());
    CHECK(delta_degree(8) == 16);
    CHECK(delta_degree(6) == 36);
    CHECK(delta_degree(3) == 36);
    CHECK(delta_degree(4) == 24);
  }

  TEST_CASE("finite field values are reductions of integer values") {
    std::mt19937_64 rng(23);
    for (int m : {3, 4, 6, 8, 12}) {
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const FieldCtx& f = FieldCtx::prime(p);
        for (int trial = 0; trial < 20; ++trial) {
          IntVector v{m, {}};
          for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(Integer(static_cast<long>(rng() % 13) - 6));
          CHECK(delta(reduce_vector(v, f)) == FieldElem::from_integer(f, delta(v)));
        }
      }
    }
  }

  TEST_CASE("extension fields agree with their prime subfield") {
    std::mt19937_64 rng(29);
    for (auto [p, k] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {2, 4}}) {
      const FieldCtx& base = FieldCtx::prime(p);
      FieldEmbedding e(base, FieldCtx::extension(p, k));
      for (int m : {3, 4, 6, 8}) {
        for (int trial = 0; trial < 10; ++trial) {
          FieldVector v{m, {}};
          for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(FieldElem(base, static_cast<std::uint32_t>(rng() % p)));
          CHECK(delta(embed_vector(v, e)) == e(delta(v)));
        }
      }
    }
  }

  TEST_CASE("catalog overrides") {
    FormulaCatalog c = build_catalog({{"disc4", "0"}});
    CHECK(c.disc4.is_zero());
    CHECK(delta(parse_int_vector("a=1,d=1,e=1,f=1,h=1,k=1,l=1,m=1", 4), c) == 0);
    CHECK(default_catalog().sources.size() == c.sources.size());
  }
}
