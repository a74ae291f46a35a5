#include <doctest.h>

#include <bit>
#include <random>

#include "f4v/reps/basis.hpp"
#include "f4v/reps/vector_io.hpp"
#include "f4v/exactalg/parse.hpp"

using namespace f4v;

namespace {

FieldVector random_vector(int m, const FieldCtx& f, std::mt19937_64& rng) {
  FieldVector v{m, {}};
  for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(FieldElem(f, static_cast<std::uint32_t>(rng() % f.order())));
  return v;
}

FieldElem random_unit(const FieldCtx& f, std::mt19937_64& rng) {
  return FieldElem(f, 1 + static_cast<std::uint32_t>(rng() % (f.order() - 1)));
}

std::string names(int m) {
  std::string s;
  for (const auto& b : basis(m)) s += b.name + " ";
  return s;
}

}  // namespace

TEST_SUITE("reps") {
  TEST_CASE("bases") {
    CHECK(names(8) == "a b c d e f g ");
    CHECK(names(3) == "a b c d e f g h i j k l m n o p q r ");
    CHECK(names(4) == "a b c d e f g h i j k l m n ");
    CHECK(names(6) == "a b d e g h j k o r ");
    CHECK(dim(12) == 5);
    CHECK(basis(3)[0].monomial == "X*T^2");
  }

  TEST_CASE("dual cyclic vectors") {
    auto v3 = dual_cyclic<Integer>(3, {1, 1, 1, 1, 1});
    CHECK(format_vector(v3) ==
          "a=1, b=0, c=0, d=0, e=1, f=0, g=0, h=1, i=0, j=0, k=0, l=1, m=0, n=0, o=0, p=1, q=0, r=0");
    auto v4 = dual_cyclic<Integer>(4, {1, 1, 1, 1, 1});
    for (const char* l : {"a", "d", "j", "k", "m"}) CHECK(v4.at(l) == 1);
    CHECK(support_mask(v4) == ((1u << 0) | (1u << 3) | (1u << 9) | (1u << 10) | (1u << 12)));
    auto v12 = dual_cyclic<Integer>(12, {1, 2, 3, 4, 5});
    CHECK(v12.entries == std::vector<Integer>{1, 2, 3, 4, 5});
    for (int m : {3, 4, 6, 12}) {
      auto v = dual_cyclic<Integer>(m, {2, 3, 5, 7, 11});
      CHECK(std::popcount(support_mask(v)) == 5);
    }
    CHECK_THROWS(dual_cyclic<Integer>(8, {1, 1, 1, 1, 1}));
  }

  TEST_CASE("identity word and torus scaling") {
    std::mt19937_64 rng(1);
    const FieldCtx& f = FieldCtx::prime(101);
    FieldVector v = random_vector(4, f, rng);
    CHECK(act(FieldWord{}, v) == v);

    const FieldElem t = FieldElem::from_int(f, 3);
    FieldVector s = apply_torus(v, {Frame::Omega, {0, 1, 0, 0}}, t);
    for (const char* l : {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"}) CHECK(s.at(l) == v.at(l) * t.pow(std::int64_t{-1}));
    CHECK(s.at("m") == v.at("m") * t.pow(std::uint64_t{3}));
    CHECK(s.at("n") == v.at("n") * t.pow(std::uint64_t{3}));
  }

  TEST_CASE("torus action matches the weight tables") {
    std::mt19937_64 rng(2);
    const FieldCtx& f = FieldCtx::prime(101);
    for (int m : {3, 4, 6, 8}) {
      FieldVector v = random_vector(m, f, rng);
      for (int i = 0; i < 4; ++i) {
        Cocharacter lam{frame_for(m), {}};
        lam.s[i] = 1;
        const FieldElem t = FieldElem::from_int(f, 2);
        FieldVector s = apply_torus(v, lam, t);
        const auto w = cochar_weights(m, lam);
        for (std::size_t k = 0; k < dim(m); ++k) CHECK(s[k] == v[k] * t.pow(std::int64_t{w[k]}));
      }
    }
  }

  TEST_CASE("generators invert") {
    std::mt19937_64 rng(3);
    for (const FieldCtx* f : {&FieldCtx::prime(7), &FieldCtx::extension(2, 3)}) {
      for (int m : {3, 4, 6, 8, 12}) {
        for (int trial = 0; trial < 20; ++trial) {
          FieldVector v = random_vector(m, *f, rng);
          FieldWord g;
          for (const auto& blk : sl_blocks(m)) {
            const int a = blk[rng() % blk.size()];
            int b = blk[rng() % blk.size()];
            if (a == b) b = blk[(std::find(blk.begin(), blk.end(), a) - blk.begin() + 1) % blk.size()];
            g.gens.push_back(Unipotent<FieldElem>{a, b, FieldElem(*f, static_cast<std::uint32_t>(rng() % f->order()))});
            g.gens.push_back(WeylSwap{b, a});
          }
          Cocharacter lam{frame_for(m), {}};
          for (auto& s : lam.s) s = static_cast<int>(rng() % 5) - 2;
          g.gens.push_back(TorusScale<FieldElem>{lam, random_unit(*f, rng)});
          CHECK(act(g, act(g.inverse(), v)) == v);
          CHECK(act(g.inverse(), act(g, v)) == v);
        }
      }
    }
  }

  TEST_CASE("weyl swap has order four") {
    std::mt19937_64 rng(4);
    const FieldCtx& f = FieldCtx::prime(11);
    FieldVector v = random_vector(3, f, rng);
    FieldVector w = v;
    for (int i = 0; i < 2; ++i) w = apply_weyl(w, 0, 1);
    CHECK(w != v);  // the swap squares to -1 on odd-degree parts
    for (int i = 0; i < 2; ++i) w = apply_weyl(w, 0, 1);
    CHECK(w == v);
  }

  TEST_CASE("vector text format") {
    const FieldCtx& F9 = FieldCtx::extension(3, 2);
    FieldVector v = parse_field_vector("m=8; a=x+1, c = 2, g=x^2", 8, F9);
    CHECK(v.at("a").to_string() == "x+1");
    CHECK(v.at("b").is_zero());
    CHECK(parse_field_vector(format_vector(v), 8, F9) == v);

    IntVector z = parse_int_vector("a=-3,r=12", 3);
    CHECK(z.at("a") == -3);
    CHECK(z.at("r") == 12);
    CHECK(parse_int_vector("m=3; a=1", 0).m == 3);

    try {
      parse_int_vector("a=1, s=2", 3);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK_THROWS_AS(parse_int_vector("m=4; a=1", 3), ParseError);
    CHECK_THROWS_AS(parse_int_vector("a", 3), ParseError);
    CHECK_THROWS_AS(parse_field_vector("a=x", 8, FieldCtx::prime(3)), ParseError);

    SymVector s = parse_sym_vector("a=2b, c=d^2", 8);
    CHECK(s.at("a").to_string() == "2*b");
  }
}
