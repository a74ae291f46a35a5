#include <doctest.h>

#include <random>

#include "f4v/invariants/delta.hpp"
#include "f4v/kernels/sweep.hpp"

using namespace f4v;

namespace {

std::vector<std::uint32_t> random_inputs(const Program& prog, std::size_t count, std::uint32_t bound, std::mt19937_64& rng) {
  std::vector<std::uint32_t> in(count * prog.inputs);
  for (auto& x : in) x = static_cast<std::uint32_t>(rng() % bound);
  return in;
}

FieldVector as_vector(int m, const FieldCtx& f, const std::uint32_t* xs) {
  FieldVector v{m, {}};
  for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(FieldElem(f, xs[i]));
  return v;
}

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13, 97, 251};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("program moduli") {
    Program p3 = compile_delta(3, 2);
    CHECK(p3.e == 6);
    CHECK(p3.modulus == 128);
    CHECK(compile_delta(3, 3).modulus == 81);
    CHECK(compile_delta(6, 2).modulus == 32);
    CHECK(compile_delta(8, 2).modulus == 2);
    CHECK(compile_delta(4, 5).modulus == 5);
  }

  TEST_CASE("scalar kernel matches the reference evaluator") {
    std::mt19937_64 rng(31);
    for (int m : {3, 4, 6, 8, 12}) {
      for (std::uint32_t p : kPrimes) {
        const Program prog = compile_delta(m, p);
        const FieldCtx& f = FieldCtx::prime(p);
        const std::size_t count = 40;
        auto in = random_inputs(prog, count, p, rng);
        std::vector<std::uint32_t> out(count);
        eval_scalar(prog, in.data(), count, out.data());
        for (std::size_t v = 0; v < count; ++v) {
          REQUIRE(prog.finish(out[v]) == delta(as_vector(m, f, in.data() + v * prog.inputs)).raw());
        }
      }
    }
  }

  TEST_CASE("AVX2 kernel is bit-identical to the scalar kernel") {
    if (!avx2_available()) {
      MESSAGE("AVX2 not available on this CPU; skipping");
      return;
    }
#if defined(F4V_HAVE_AVX2_KERNEL)
    std::mt19937_64 rng(37);
    for (int m : {3, 4, 6, 8, 12}) {
      for (std::uint32_t p : kPrimes) {
        const Program prog = compile_delta(m, p);
        REQUIRE(select_kernel(prog) == KernelKind::Avx2);
        for (std::size_t count : {1u, 7u, 8u, 9u, 64u, 203u}) {
          // inputs are full residues mod M, not just digits
          auto in = random_inputs(prog, count, prog.modulus, rng);
          std::vector<std::uint32_t> a(count), b(count);
          eval_scalar(prog, in.data(), count, a.data());
          eval_avx2(prog, in.data(), count, b.data());
          REQUIRE(a == b);
        }
      }
    }
#endif
  }

  TEST_CASE("large moduli fall back to the scalar kernel") {
    const Program prog = compile_delta(8, 65537);
    CHECK(select_kernel(prog) == KernelKind::Scalar);
    std::mt19937_64 rng(41);
    auto in = random_inputs(prog, 10, 65537, rng);
    std::vector<std::uint32_t> out(10);
    eval_batch(prog, in.data(), 10, out.data(), KernelKind::Scalar);
    const FieldCtx& f = FieldCtx::prime(65537);
    for (std::size_t v = 0; v < 10; ++v) CHECK(prog.finish(out[v]) == delta(as_vector(8, f, in.data() + v * prog.inputs)).raw());
  }

  TEST_CASE("sweep indexing") {
    CHECK(sweep_size(8, 3) == 2187);
    CHECK(sweep_vector(8, 3, 5) == std::vector<std::uint32_t>{2, 1, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(sweep(3, 3), std::length_error);
  }

  TEST_CASE("sweeps agree with reference evaluation") {
    for (auto [m, p] : std::vector<std::pair<int, std::uint32_t>>{{8, 2}, {8, 3}, {6, 2}, {12, 3}}) {
      const FieldCtx& f = FieldCtx::prime(p);
      std::vector<std::uint32_t> values;
      SweepResult r = sweep(m, p, {}, &values);
      std::uint64_t stable = 0;
      std::optional<std::uint64_t> first;
      for (std::uint64_t idx = 0; idx < r.total; ++idx) {
        auto xs = sweep_vector(m, p, idx);
        const FieldElem d = delta(as_vector(m, f, xs.data()));
        REQUIRE(d.raw() == values[idx]);
        if (!d.is_zero()) {
          ++stable;
          if (!first) first = idx;
        }
      }
      CHECK(r.stable_count == stable);
      CHECK(r.first_stable == first);
      CHECK(r.histogram.at(0) == r.total - stable);
    }
    CHECK(sweep(8, 2).stable_count == 6);
    CHECK(sweep(8, 2).stable_count <= 127);
    CHECK(sweep(6, 2).stable_count == 36);
    CHECK(sweep(12, 3).stable_count == 32);
  }

  TEST_CASE("sweep results do not depend on threads or kernel") {
    SweepOptions one;
    one.kernel = KernelKind::Scalar;
    SweepResult base = sweep(6, 3, one);
    for (unsigned threads : {2u, 5u}) {
      SweepOptions opt;
      opt.threads = threads;
      SweepResult r = sweep(6, 3, opt);
      CHECK(r.stable_count == base.stable_count);
      CHECK(r.first_stable == base.first_stable);
      CHECK(r.histogram == base.histogram);
    }
    CHECK(base.stable_count == 9216);
  }
}
