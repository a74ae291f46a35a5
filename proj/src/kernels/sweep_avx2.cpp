#include <immintrin.h>

#include <algorithm>
#include <memory>

#include "f4v/kernels/kernels.hpp"

namespace f4v {

namespace {

// High 32 bits of the eight 32x32 products.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
  __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(even, odd, 0xAA);
}

struct Mod {
  __m256i m;
  __m256i mu;  // floor(2^32 / M)

  // x < 2M -> x mod M
  __m256i fold(__m256i x) const { return _mm256_min_epu32(x, _mm256_sub_epi32(x, m)); }
  __m256i add(__m256i a, __m256i b) const { return fold(_mm256_add_epi32(a, b)); }
  __m256i sub(__m256i a, __m256i b) const { return fold(_mm256_add_epi32(a, _mm256_sub_epi32(m, b))); }
  __m256i mul(__m256i a, __m256i b) const {
    __m256i prod = _mm256_mullo_epi32(a, b);
    __m256i q = mulhi_epu32(prod, mu);
    return fold(_mm256_sub_epi32(prod, _mm256_mullo_epi32(q, m)));
  }
};

}  // namespace

// Requires modulus < 2^16 so every product fits in 32 bits.
void eval_avx2(const Program& prog, const std::uint32_t* in, std::size_t count, std::uint32_t* out) {
  const std::uint32_t M = prog.modulus;
  Mod md{_mm256_set1_epi32(static_cast<int>(M)),
         _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>((std::uint64_t{1} << 32) / M)))};
  struct alignas(32) Lane8 {
    __m256i v;
  };
  std::unique_ptr<Lane8[]> slots(new Lane8[prog.registers]);
  alignas(32) std::uint32_t lane[8];
  const std::uint32_t n = prog.inputs;
  for (std::size_t base = 0; base < count; base += 8) {
    const std::size_t w = std::min<std::size_t>(8, count - base);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < 8; ++l) lane[l] = l < w ? in[(base + l) * n + i] : 0;
      slots[i].v = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane));
    }
    for (const Instr& ins : prog.code) {
      switch (ins.op) {
        case Op::Const: slots[ins.dst].v = _mm256_set1_epi32(static_cast<int>(ins.a)); break;
        case Op::Add: slots[ins.dst].v = md.add(slots[ins.a].v, slots[ins.b].v); break;
        case Op::Sub: slots[ins.dst].v = md.sub(slots[ins.a].v, slots[ins.b].v); break;
        case Op::Mul: slots[ins.dst].v = md.mul(slots[ins.a].v, slots[ins.b].v); break;
      }
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane), slots[prog.output].v);
    std::copy_n(lane, w, out + base);
  }
}

}  // namespace f4v
