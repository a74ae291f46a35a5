#include <doctest.h>

#include <fstream>
#include <random>

#include "f4v/kernels/sweep.hpp"
#include "f4v/reps/vector_io.hpp"
#include "f4v/stability/stability.hpp"
#include "f4v/stability/witness_io.hpp"

using namespace f4v;

namespace {

FieldVector vec(int m, const char* text, std::uint32_t p) { return parse_field_vector(text, m, FieldCtx::prime(p)); }

FieldVector ones_dual_cyclic(int m, std::uint32_t p) {
  const FieldElem one = FieldElem::one(FieldCtx::prime(p));
  return dual_cyclic<FieldElem>(m, {one, one, one, one, one});
}

nlohmann::json read_golden(const std::string& name) {
  std::ifstream in(std::string(F4V_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

}  // namespace

TEST_SUITE("stability") {
  TEST_CASE("delta criterion") {
    CHECK(is_stable(ones_dual_cyclic(3, 3)).stable);
    CHECK(!is_stable(ones_dual_cyclic(3, 2)).stable);
    CHECK(!is_stable(ones_dual_cyclic(4, 3)).stable);
    CHECK(is_stable(ones_dual_cyclic(6, 5)).stable);
    const auto v = is_stable(vec(8, "b=1,d=1,e=1,f=1,g=1", 5));
    CHECK(v.stable);
    CHECK(v.delta_value.raw() == 1);
    CHECK(!v.witness);
  }

  TEST_CASE("negative weights") {
    std::mt19937_64 rng(43);
    const FieldCtx& f = FieldCtx::prime(7);
    for (int trial = 0; trial < 20; ++trial) {
      FieldVector v{6, {}};
      for (std::size_t i = 0; i < dim(6); ++i) v.entries.push_back(FieldElem(f, static_cast<std::uint32_t>(rng() % 7)));
      for (const char* l : {"b", "e", "k"}) v.at(l) = FieldElem::zero(f);
      CHECK(no_negative_weights(v, {Frame::Omega, {1, 0, 0, 0}}));
      CHECK(no_negative_weights(v, {Frame::Omega, {0, 0, 0, 0}}));
    }
    CHECK(!no_negative_weights(ones_dual_cyclic(6, 7), {Frame::Omega, {1, 0, 0, 0}}));
  }

  TEST_CASE("bounded cocharacter search") {
    const FieldVector v8 = vec(8, "c=1,d=1,f=1,g=1", 3);
    auto lam = hm_search(v8, 2);
    REQUIRE(lam);
    CHECK(!lam->trivial());
    CHECK(no_negative_weights(v8, *lam));
    CHECK(no_negative_weights(v8, {Frame::Omega, {0, 2, -1, 0}}));

    CHECK(!hm_search(vec(8, "b=1,d=1,e=1,f=1,g=1", 3), 4));

    auto first = hm_search(zero_vector(4, FieldElem::one(FieldCtx::prime(3))), 1);
    REQUIRE(first);
    CHECK(first->s == std::array<int, 4>{-1, -1, -1, -1});
  }

  TEST_CASE("destabilize the m=8 double root example") {
    const FieldVector v = vec(8, "a=1,d=1,f=1,g=1", 3);
    const Witness w = destabilize(v);
    CHECK(!w.word.empty());
    CHECK(w.lambda.s == std::array<int, 4>{0, 2, -1, 0});
    CHECK(w.ext_degree == 1);
    CHECK(verify_witness(v, w));
  }

  TEST_CASE("destabilize with o = r = 0 needs no moves") {
    std::mt19937_64 rng(47);
    const FieldCtx& f = FieldCtx::prime(5);
    for (int trial = 0; trial < 10; ++trial) {
      FieldVector v{6, {}};
      for (std::size_t i = 0; i < dim(6); ++i) v.entries.push_back(FieldElem(f, 1 + static_cast<std::uint32_t>(rng() % 4)));
      v.at("o") = v.at("r") = FieldElem::zero(f);
      REQUIRE(delta(v).is_zero());
      const Witness w = destabilize(v);
      CHECK(w.word.empty());
      CHECK(w.lambda.s == std::array<int, 4>{0, 0, 0, 1});
      CHECK(verify_witness(v, w));
    }
  }

  TEST_CASE("every unstable vector of small sweeps has a witness") {
    for (auto [m, p] : std::vector<std::pair<int, std::uint32_t>>{{12, 2}, {12, 3}, {8, 2}, {6, 2}}) {
      const FieldCtx& f = FieldCtx::prime(p);
      for (std::uint64_t idx = 0; idx < sweep_size(m, p); ++idx) {
        FieldVector v{m, {}};
        for (auto x : sweep_vector(m, p, idx)) v.entries.push_back(FieldElem(f, x));
        if (!delta(v).is_zero()) {
          CHECK_THROWS_AS(destabilize(v), PreconditionError);
          continue;
        }
        const Witness w = destabilize(v);
        REQUIRE(verify_witness(v, w));
        CHECK(w.ext_degree <= kDefaultMaxExt);
      }
    }
  }

  TEST_CASE("char 2 vectors of V6 over F2") {
    std::mt19937_64 rng(53);
    const FieldCtx& f = FieldCtx::prime(2);
    int found = 0;
    while (found < 100) {
      FieldVector v{6, {}};
      for (std::size_t i = 0; i < dim(6); ++i) v.entries.push_back(FieldElem(f, static_cast<std::uint32_t>(rng() % 2)));
      if (!delta(v).is_zero()) continue;
      ++found;
      const Witness w = destabilize(v);
      CHECK(w.ext_degree <= 4);
      CHECK(verify_witness(v, w));
    }
  }

  TEST_CASE("witness verification") {
    const FieldVector stable = vec(8, "b=1,d=1,e=1,f=1,g=1", 3);
    Witness w;
    w.m = 8;
    w.field = &FieldCtx::prime(3);
    for (int a = -4; a <= 4; ++a)
      for (int b = -4; b <= 4; ++b)
        for (int c = -4; c <= 4; ++c)
          for (int d = -4; d <= 4; ++d) {
            w.lambda = {Frame::Omega, {a, b, c, d}};
            REQUIRE(!verify_witness(stable, w));
          }
    const FieldVector zero = zero_vector(8, FieldElem::one(FieldCtx::prime(3)));
    w.lambda = {Frame::Omega, {0, 0, 0, 0}};
    CHECK(!verify_witness(zero, w));
    CHECK_THROWS_AS(destabilize(stable), PreconditionError);
  }

  TEST_CASE("witnesses transport along the group action") {
    std::mt19937_64 rng(59);
    const FieldCtx& f = FieldCtx::prime(3);
    for (int m : {3, 4, 6, 8}) {
      int done = 0;
      while (done < 10) {
        FieldVector v{m, {}};
        for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(FieldElem(f, static_cast<std::uint32_t>(rng() % 3)));
        for (std::size_t i = 0; i < dim(m); ++i)
          if (rng() % 2) v.entries[i] = FieldElem::zero(f);
        if (!delta(v).is_zero()) continue;
        ++done;
        const Witness w = destabilize(v);
        FieldWord g;
        const auto& blk = sl_blocks(m)[rng() % sl_blocks(m).size()];
        g.gens.push_back(Unipotent<FieldElem>{blk[0], blk[1], FieldElem(f, 1 + static_cast<std::uint32_t>(rng() % 2))});
        g.gens.push_back(WeylSwap{blk[1], blk[0]});
        const FieldVector moved = act(g, v);
        const FieldCtx& K = *w.field;
        Witness conj = w;
        conj.word = embed_word(g.inverse(), FieldEmbedding(f, K));
        conj.word.gens.insert(conj.word.gens.end(), w.word.gens.begin(), w.word.gens.end());
        CHECK(verify_witness(moved, conj));
      }
    }
  }

  TEST_CASE("delta12 matches coordinate nonvanishing") {
    const FieldCtx& f = FieldCtx::prime(5);
    for (unsigned mask = 0; mask < 32; ++mask) {
      FieldVector v{12, {}};
      for (unsigned i = 0; i < 5; ++i) v.entries.push_back((mask >> i) & 1 ? FieldElem::from_int(f, i % 4 + 1) : FieldElem::zero(f));
      CHECK(is_stable(v).stable == (mask == 31));
    }
  }

  TEST_CASE("conjecture table") {
    CHECK(check_conjecture(3, 2));
    CHECK(check_conjecture(4, 3));
    CHECK(check_conjecture(6, 5));
    for (int m : {3, 4, 6})
      for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) CHECK(check_conjecture(m, p));
  }

  TEST_CASE("witness serialization") {
    const FieldVector v = vec(8, "a=1,d=1,f=1,g=1", 3);
    const Witness w = destabilize(v);
    const nlohmann::json j = witness_to_json(w);
    CHECK(j == read_golden("witness_m8_F3.json"));
    const Witness back = witness_from_json(j);
    CHECK(witness_to_json(back) == j);
    CHECK(verify_witness(v, back));

    const FieldCtx& F4 = FieldCtx::extension(2, 2);
    const FieldVector v6 = parse_field_vector("a=1,d=x,h=1,k=1,r=1", 6, F4);
    REQUIRE(delta(v6).is_zero());
    const Witness w6 = destabilize(v6);
    CHECK(w6.ext_degree <= 2);
    CHECK(verify_witness(v6, witness_from_json(witness_to_json(w6))));
  }
}
