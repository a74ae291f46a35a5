#include "f4v/kernels/program.hpp"

#include <optional>
#include <stdexcept>
#include <unordered_map>

#include "f4v/exactalg/galois_ring.hpp"
#include "f4v/invariants/delta.hpp"
#include "f4v/reps/basis.hpp"

namespace f4v {

namespace {

struct Builder {
  std::uint32_t modulus;
  std::uint32_t next = 0;
  std::vector<Instr> code;
  std::unordered_map<std::uint32_t, std::uint32_t> consts;  // value -> register
  std::unordered_map<std::uint32_t, std::uint32_t> const_of;  // register -> value
};

// A value in the program under construction.
struct Trace {
  Builder* b = nullptr;
  std::uint32_t reg = 0;

  static Trace constant(Builder* b, std::uint32_t v) {
    auto it = b->consts.find(v);
    if (it != b->consts.end()) return {b, it->second};
    std::uint32_t r = b->next++;
    b->code.push_back({Op::Const, r, v, 0});
    b->consts.emplace(v, r);
    b->const_of.emplace(r, v);
    return {b, r};
  }

  std::optional<std::uint32_t> known() const {
    auto it = b->const_of.find(reg);
    if (it == b->const_of.end()) return std::nullopt;
    return it->second;
  }

  Trace emit(Op op, const Trace& o) const {
    std::uint32_t r = b->next++;
    b->code.push_back({op, r, reg, o.reg});
    return {b, r};
  }

  Trace operator+(const Trace& o) const {
    auto x = known(), y = o.known();
    if (x && y) return constant(b, static_cast<std::uint32_t>((std::uint64_t{*x} + *y) % b->modulus));
    if (x && *x == 0) return o;
    if (y && *y == 0) return *this;
    return emit(Op::Add, o);
  }
  Trace operator-(const Trace& o) const {
    auto x = known(), y = o.known();
    if (x && y) return constant(b, static_cast<std::uint32_t>((std::uint64_t{*x} + b->modulus - *y) % b->modulus));
    if (y && *y == 0) return *this;
    return emit(Op::Sub, o);
  }
  Trace operator*(const Trace& o) const {
    auto x = known(), y = o.known();
    if (x && y) return constant(b, static_cast<std::uint32_t>((std::uint64_t{*x} * *y) % b->modulus));
    if ((x && *x == 0) || (y && *y == 0)) return constant(b, 0);
    if (x && *x == 1) return o;
    if (y && *y == 1) return *this;
    return emit(Op::Mul, o);
  }
};

std::uint32_t reduce_integer(const Integer& z, std::uint32_t M) {
  Integer r = z % M;
  if (r < 0) r += M;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

std::uint32_t Program::finish(std::uint32_t numer) const {
  std::uint32_t v = numer;
  for (unsigned i = 0; i < e; ++i) {
    if (v % p != 0) throw NotDivisible("numerator residue not divisible by the denominator");
    v /= p;
  }
  return static_cast<std::uint32_t>((std::uint64_t{v % p} * unit_inv) % p);
}

Program compile_delta(int m, std::uint32_t p, const FormulaCatalog& cat) {
  if (!is_prime(p)) throw std::invalid_argument("kernel modulus must be prime");
  Program prog;
  prog.m = m;
  prog.p = p;
  auto [e, u] = split_prime_power(delta_denominator(m), p);
  prog.e = e;
  Integer M = 1;
  for (unsigned i = 0; i <= e; ++i) M *= p;
  if (M >= Integer(std::uint64_t{1} << 32)) throw std::invalid_argument("kernel modulus exceeds 32 bits");
  prog.modulus = static_cast<std::uint32_t>(M.get_ui());
  Integer ui;
  Integer uu = u % p;
  mpz_invert(ui.get_mpz_t(), uu.get_mpz_t(), Integer(p).get_mpz_t());
  prog.unit_inv = static_cast<std::uint32_t>(ui.get_ui());

  Builder b;
  b.modulus = prog.modulus;
  prog.inputs = static_cast<std::uint32_t>(dim(m));
  std::vector<Trace> inputs;
  for (std::uint32_t i = 0; i < prog.inputs; ++i) inputs.push_back({&b, b.next++});
  auto lift = [&](const Integer& z) { return Trace::constant(&b, reduce_integer(z, prog.modulus)); };
  Trace out = delta_numerator<Trace>(m, std::span<const Trace>(inputs), Trace::constant(&b, 0), lift, cat);
  prog.output = out.reg;
  prog.registers = b.next;
  prog.code = std::move(b.code);
  return prog;
}

}  // namespace f4v
