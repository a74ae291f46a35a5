#include "f4v/harness/checks.hpp"

#include <chrono>
#include <map>
#include <random>

#include "f4v/exactalg/parse.hpp"
#include "f4v/invariants/delta.hpp"
#include "f4v/kernels/sweep.hpp"
#include "f4v/reps/vector_io.hpp"
#include "f4v/rootsys/roots.hpp"
#include "f4v/stability/stability.hpp"

namespace f4v {

namespace {

struct Ctx {
  const FormulaCatalog& cat;
  std::uint64_t seed;
  unsigned cases;
  unsigned threads;
};

struct Outcome {
  explicit Outcome(std::string src) : source(std::move(src)) {}

  std::string source;
  std::vector<std::string> expected, actual;
  bool ok = true;

  void add(const std::string& name, const std::string& exp, const std::string& act, bool pass) {
    expected.push_back(name + "=" + exp);
    actual.push_back(name + "=" + act);
    ok = ok && pass;
  }
  void eq(const std::string& name, const std::string& exp, const std::string& act) { add(name, exp, act, exp == act); }
  void count(const std::string& name, std::uint64_t good, std::uint64_t total) {
    add(name, std::to_string(total) + "/" + std::to_string(total), std::to_string(good) + "/" + std::to_string(total),
        good == total);
  }
};

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += "; ";
    s += x;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Symbolic helpers

SymVector sym_with(int m, std::initializer_list<const char*> labels) {
  SymVector v = zero_vector(m, int_poly_zero(label_vars(m)));
  for (const char* l : labels) v.at(l) = IntPoly::variable(label_vars(m), Integer(1), l);
  return v;
}

SymVector sym_dual_cyclic(int m) {
  const auto& names = dual_cyclic_labels(m);
  std::array<IntPoly, 5> c;
  for (int i = 0; i < 5; ++i) c[i] = IntPoly::variable(label_vars(m), Integer(1), names[i]);
  return dual_cyclic<IntPoly>(m, c);
}

IntVector int_vector(int m, std::string_view text) { return parse_int_vector(text, m); }

bool same_poly(const IntPoly& p, const std::string& text) { return p == parse_poly(text, p.vars()); }

template <class P>
std::vector<P> eval_polys(std::span<const IntPoly> polys, std::span<const P> xs, const P& zero, auto lift) {
  std::vector<P> out;
  for (const auto& p : polys) out.push_back(p.template eval<P>(xs, zero, lift));
  return out;
}

// Binary/ternary forms with polynomial coefficients, keyed by exponents.
using Form = std::map<std::array<int, 3>, IntPoly>;

Form substitute(const Form& f, int from, int to, const IntPoly& x) {
  Form out;
  for (const auto& [e, c] : f) {
    IntPoly xk = int_poly_const(x.vars(), Integer(1));
    Integer binom = 1;
    const int n = e[to];
    for (int k = 0; k <= n; ++k) {
      auto ne = e;
      ne[to] = n - k;
      ne[from] = e[from] + k;
      IntPoly term = c * xk * int_poly_const(x.vars(), binom);
      auto [it, fresh] = out.try_emplace(ne, term);
      if (!fresh) it->second = it->second + term;
      xk = xk * x;
      binom = binom * (n - k) / (k + 1);
    }
  }
  return out;
}

Form swap_vars(const Form& f, int i, int j) {
  Form out;
  for (const auto& [e, c] : f) {
    auto ne = e;
    std::swap(ne[i], ne[j]);
    out.emplace(ne, (e[j] % 2) ? -c : c);
  }
  return out;
}

std::vector<IntPoly> form_coeffs(const Form& f, const std::vector<std::array<int, 3>>& mons, const Vars& vars) {
  std::vector<IntPoly> out;
  for (const auto& m : mons) {
    auto it = f.find(m);
    out.push_back(it == f.end() ? int_poly_zero(vars) : it->second);
  }
  return out;
}

Form make_form(const std::vector<IntPoly>& coeffs, const std::vector<std::array<int, 3>>& mons) {
  Form f;
  for (std::size_t i = 0; i < mons.size(); ++i) f.emplace(mons[i], coeffs[i]);
  return f;
}

const std::vector<std::array<int, 3>> kCubic3 = {{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                                 {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};

std::vector<std::array<int, 3>> binary_mons(int d) {
  std::vector<std::array<int, 3>> out;
  for (int i = 0; i <= d; ++i) out.push_back({d - i, i, 0});
  return out;
}

bool all_equal(const std::vector<IntPoly>& a, const std::vector<IntPoly>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

// Vars for chain checks: the labels followed by the group parameter x.
Vars with_x(const std::vector<std::string>& names) {
  auto all = names;
  all.push_back("x");
  return make_vars(all);
}

SymVector generic_over(int m, const Vars& vars) {
  SymVector v;
  v.m = m;
  for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(IntPoly::variable(vars, Integer(1), i));
  return v;
}

auto poly_lift(const Vars& vars) {
  return [vars](const Integer& z) { return int_poly_const(vars, z); };
}

std::vector<std::pair<int, int>> block_pairs(const std::vector<int>& blk) {
  std::vector<std::pair<int, int>> out;
  for (int a : blk)
    for (int b : blk)
      if (a != b) out.emplace_back(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Criteria

Outcome delta3_dual_cyclic(const Ctx& c) {
  Outcome o{"stated"};
  const std::string exp = "4096*a^6*e^3*h^9*l^12*p^6";
  IntPoly d = delta(sym_dual_cyclic(3), c.cat);
  o.add("delta3", exp, d.to_string(), same_poly(d, exp));
  return o;
}

Outcome delta3_explicit(const Ctx& c) {
  Outcome o{"stated"};
  IntVector v = int_vector(3, "a=1,c=1,d=1,f=1,i=1,k=1,l=1,m=1,o=1,q=1");
  o.eq("delta3", "225", to_string(delta(v, c.cat)));
  FieldElem d2 = delta(reduce_vector(v, FieldCtx::prime(2)), c.cat);
  o.eq("delta3 over F2", "1", d2.to_string());
  return o;
}

Outcome delta4_values(const Ctx& c) {
  Outcome o{"stated"};
  const std::string exp = "-27*a^2*d^4*j^8*k^4*m^6";
  IntPoly d = delta(sym_dual_cyclic(4), c.cat);
  o.add("delta4 dual cyclic", exp, d.to_string(), same_poly(d, exp));
  o.eq("delta4 explicit", "125", to_string(delta(int_vector(4, "a=1,d=1,e=1,f=1,h=1,k=1,l=1,m=1"), c.cat)));
  return o;
}

Outcome delta6_values(const Ctx& c) {
  Outcome o{"stated"};
  const std::string dc = "16*b^9*e^3*g^6*j^6*r^12";
  IntPoly d = delta(sym_dual_cyclic(6), c.cat);
  o.add("delta6 dual cyclic", dc, d.to_string(), same_poly(d, dc));

  const std::string fam = "16*a^9*d^3*h^6*k^6*r^12 - 8*a^8*d^2*h^6*j^2*k^6*r^12 + a^7*d*h^6*j^4*k^6*r^12";
  IntPoly f = delta(sym_with(6, {"a", "d", "h", "j", "k", "r"}), c.cat);
  o.add("delta6 family", fam, f.to_string(), same_poly(f, fam));

  SymVector g = generic_vector(6);
  IntPoly numer = delta_numerator<IntPoly>(6, std::span<const IntPoly>(g.entries), int_poly_zero(g.entries[0].vars()),
                                           poly_lift(g.entries[0].vars()), c.cat);
  bool divisible = true;
  for (const auto& [m, k] : numer.terms()) divisible = divisible && mpz_divisible_ui_p(k.get_mpz_t(), 16);
  o.add("16 | disc4(F1F2)", "true", divisible ? "true" : "false", divisible);
  return o;
}

Outcome delta8_values(const Ctx& c) {
  Outcome o{"stated"};
  o.eq("delta8(XY,X+Y,Z,W)", "1", to_string(delta(int_vector(8, "b=1,d=1,e=1,f=1,g=1"), c.cat)));
  SymVector g = generic_vector(8);
  IntPoly d = delta(g, c.cat);
  const std::string square = "(f^2*g*(b^2 - 4*a*c)*(c*d^2 - b*d*e + a*e^2))^2";
  o.add("perfect square", "equal", same_poly(d, square) ? "equal" : "differs", same_poly(d, square));
  // f^4 g^2 disc(F1) disc(F1 F2) with the classical binary cubic discriminant.
  const auto& vars = label_vars(8);
  auto P = [&](const char* t) { return parse_poly(t, vars); };
  IntPoly A = P("a*d"), B = P("a*e + b*d"), C = P("b*e + c*d"), D = P("c*e");
  IntPoly disc_cubic = B * B * C * C - int_poly_const(vars, 4) * A * C * C * C - int_poly_const(vars, 4) * B * B * B * D -
                       int_poly_const(vars, 27) * A * A * D * D + int_poly_const(vars, 18) * A * B * C * D;
  IntPoly classic = P("f^4*g^2*(b^2 - 4*a*c)") * disc_cubic;
  o.add("f^4 g^2 disc(F1) disc(F1F2)", "equal", d == classic ? "equal" : "differs", d == classic);
  return o;
}

Outcome disc3_patterns(const Ctx& c) {
  Outcome o{"stated"};
  const Vars& vars = c.cat.cubic_vars;
  auto pattern = [&](std::initializer_list<const char*> zero) {
    std::vector<IntPoly> coeffs;
    for (std::size_t i = 0; i < vars->size(); ++i) coeffs.push_back(IntPoly::variable(vars, Integer(1), i));
    for (const char* z : zero) coeffs[var_index(vars, z)] = int_poly_zero(vars);
    return disc3_ternary(std::span<const IntPoly>(coeffs), c.cat);
  };
  o.eq("D=G=H=0", "0", pattern({"D", "G", "H"}).to_string());
  o.eq("G=H=I=J=0", "0", pattern({"G", "H", "I", "J"}).to_string());
  return o;
}

// Invariance is checked as a chain: each stage map is equivariant (polynomial
// identities over Z[labels, x]) and each final invariant is invariant on
// generic forms. An end-to-end identity in F_p[x] at random points closes it.
Outcome invariance(const Ctx& c) {
  Outcome o{"derived"};
  const auto& cat = c.cat;

  // Stage equivariance.
  struct Stage {
    int m;
    std::vector<int> form_block;  // model vars the stage form lives on
    std::vector<std::array<int, 3>> mons;
  };
  const std::vector<Stage> stages = {
      {3, {0, 1, 2}, kCubic3},
      {4, {0, 1}, binary_mons(4)},
      {6, {0, 1}, {}},
      {8, {0, 1}, {}},
  };
  for (const auto& st : stages) {
    std::vector<std::string> names;
    for (const auto& b : basis(st.m)) names.push_back(b.name);
    const Vars vars = with_x(names);
    const IntPoly x = IntPoly::variable(vars, Integer(1), "x");
    const IntPoly zero = int_poly_zero(vars);
    const SymVector v = generic_over(st.m, vars);
    auto stage_of = [&](const SymVector& w) -> std::vector<Form> {
      std::span<const IntPoly> xs(w.entries);
      auto lift = poly_lift(vars);
      switch (st.m) {
        case 3: return {make_form(eval_polys<IntPoly>(cat.coeffs3, xs, zero, lift), kCubic3)};
        case 4: return {make_form(eval_polys<IntPoly>(cat.coeffs4, xs, zero, lift), binary_mons(4))};
        case 6: {
          auto b = eval_polys<IntPoly>(cat.beta, xs, zero, lift);
          return {make_form({b[0], b[1], b[2], b[3]}, binary_mons(3)), make_form({b[4], b[5]}, binary_mons(1))};
        }
        default: {
          return {make_form({w.at("a"), w.at("b"), w.at("c")}, binary_mons(2)),
                  make_form({w.at("d"), w.at("e")}, binary_mons(1)), make_form({w.at("f")}, {{0, 0, 0}}),
                  make_form({w.at("g")}, {{0, 0, 0}})};
        }
      }
    };
    const auto base = stage_of(v);
    std::uint64_t good = 0, total = 0;
    for (const auto& blk : sl_blocks(st.m)) {
      const bool acts = blk == st.form_block;
      auto local = [&](int idx) {
        for (std::size_t i = 0; i < st.form_block.size(); ++i)
          if (st.form_block[i] == idx) return static_cast<int>(i);
        return -1;
      };
      for (auto [a, b] : block_pairs(blk)) {
        for (int kind = 0; kind < 2; ++kind) {
          SymVector moved = kind == 0 ? apply_unipotent(v, a, b, x) : apply_weyl(v, a, b);
          auto got = stage_of(moved);
          bool ok = true;
          for (std::size_t f = 0; f < base.size(); ++f) {
            Form want = base[f];
            if (acts) want = kind == 0 ? substitute(want, local(a), local(b), x) : swap_vars(want, local(a), local(b));
            std::vector<std::array<int, 3>> mons;
            for (const auto& [e, cc] : want) mons.push_back(e);
            for (const auto& [e, cc] : got[f]) mons.push_back(e);
            ok = ok && all_equal(form_coeffs(want, mons, vars), form_coeffs(got[f], mons, vars));
          }
          good += ok;
          ++total;
        }
      }
    }
    o.count("m=" + std::to_string(st.m) + " stage equivariance", good, total);
  }

  // Invariants of generic forms under SL2 / SL3 substitutions.
  {
    auto check_forms = [&](const std::string& name, const Vars& fvars, const std::vector<std::array<int, 3>>& mons,
                           int nvars, const std::vector<const IntPoly*>& invariants) {
      std::vector<std::string> names = *fvars;
      const Vars vars = with_x(names);
      const IntPoly x = IntPoly::variable(vars, Integer(1), "x");
      std::vector<IntPoly> coeffs;
      for (std::size_t i = 0; i < fvars->size(); ++i) coeffs.push_back(IntPoly::variable(vars, Integer(1), i));
      Form f = make_form(coeffs, mons);
      std::vector<int> blk;
      for (int i = 0; i < nvars; ++i) blk.push_back(i);
      std::uint64_t good = 0, total = 0;
      auto lift = poly_lift(vars);
      for (const IntPoly* inv : invariants) {
        IntPoly before = inv->eval<IntPoly>(std::span<const IntPoly>(coeffs), int_poly_zero(vars), lift);
        for (auto [a, b] : block_pairs(blk)) {
          for (int kind = 0; kind < 2; ++kind) {
            Form g = kind == 0 ? substitute(f, a, b, x) : swap_vars(f, a, b);
            auto moved = form_coeffs(g, mons, vars);
            IntPoly after = inv->eval<IntPoly>(std::span<const IntPoly>(moved), int_poly_zero(vars), lift);
            good += after == before;
            ++total;
          }
        }
      }
      o.count(name, good, total);
    };
    check_forms("S,T invariance", cat.cubic_vars, kCubic3, 3, {&cat.S, &cat.T});
    check_forms("disc4 invariance", cat.quartic_vars, binary_mons(4), 2, {&cat.disc4});
  }

  // m=8 is small enough to expand directly over Z[labels, x].
  {
    std::vector<std::string> names;
    for (const auto& b : basis(8)) names.push_back(b.name);
    const Vars vars = with_x(names);
    const IntPoly x = IntPoly::variable(vars, Integer(1), "x");
    const SymVector v = generic_over(8, vars);
    const IntPoly base = delta(v, cat);
    std::uint64_t good = 0, total = 0;
    for (const auto& blk : sl_blocks(8)) {
      for (auto [a, b] : block_pairs(blk)) {
        good += delta(apply_unipotent(v, a, b, x), cat) == base;
        good += delta(apply_weyl(v, a, b), cat) == base;
        total += 2;
      }
    }
    for (int i = 0; i < 4; ++i) {
      Cocharacter lam{Frame::Omega, {}};
      lam.s[i] = 1;
      auto w = cochar_weights(8, lam);
      int shift = 0;
      for (int wi : w) shift = std::max(shift, -wi);
      SymVector tv{8, {}};
      for (std::size_t k = 0; k < dim(8); ++k) tv.entries.push_back(v.entries[k] * x.pow(unsigned(w[k] + shift)));
      good += delta(tv, cat) == base * x.pow(unsigned(shift) * delta_degree(8));
      ++total;
    }
    o.count("m=8 symbolic identities", good, total);
  }

  // End-to-end identities in F_p[x], p = 2^31 - 1.
  {
    const FieldCtx& F = FieldCtx::prime(2147483647u);
    const Vars xv = make_vars({"x"});
    const FieldElem one = FieldElem::one(F);
    const FieldPoly x = FieldPoly::variable(xv, one, std::size_t{0});
    std::mt19937_64 rng(c.seed ^ 0x1a2b3c4dULL);
    const unsigned reps = std::max(1u, c.cases / 50);
    for (int m : {3, 4, 6, 8}) {
      std::uint64_t good = 0, total = 0;
      for (unsigned r = 0; r < reps; ++r) {
        VmVector<FieldPoly> v{m, {}};
        FieldVector vf{m, {}};
        for (std::size_t i = 0; i < dim(m); ++i) {
          FieldElem e(F, static_cast<std::uint32_t>(rng() % F.order()));
          vf.entries.push_back(e);
          v.entries.push_back(FieldPoly::constant(xv, one, e));
        }
        const FieldElem d0 = delta(vf, cat);
        const FieldPoly d0p = FieldPoly::constant(xv, one, d0);
        for (const auto& blk : sl_blocks(m)) {
          for (auto [a, b] : block_pairs(blk)) {
            good += delta(apply_unipotent(v, a, b, x), cat) == d0p;
            ++total;
          }
        }
        // Torus: scale label i by t^(w_i + s) with s clearing negative weights.
        for (int i = 0; i < 4; ++i) {
          Cocharacter lam{frame_for(m), {}};
          lam.s[i] = 1;
          auto w = cochar_weights(m, lam);
          int shift = 0;
          for (int wi : w) shift = std::max(shift, -wi);
          VmVector<FieldPoly> tv{m, {}};
          for (std::size_t k = 0; k < dim(m); ++k) tv.entries.push_back(v.entries[k] * x.pow(unsigned(w[k] + shift)));
          good += delta(tv, cat) == d0p * x.pow(unsigned(shift) * delta_degree(m));
          ++total;
        }
      }
      o.count("m=" + std::to_string(m) + " identities in F_p[x]", good, total);
    }
  }
  return o;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> ps = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= 97; ++p)
      if (is_prime(p)) out.push_back(p);
    return out;
  }();
  return ps;
}

Outcome vlambda_vanishing(const Ctx& c) {
  Outcome o{"stated"};
  std::mt19937_64 rng(c.seed ^ 0x5eed5eedULL);
  const int box = 3;
  for (int m : {3, 4, 6, 8}) {
    std::map<std::uint32_t, Program> progs;
    std::uint64_t vanished = 0, total = 0;
    const std::size_t n = dim(m);
    std::vector<std::uint32_t> in(std::size_t{c.cases} * n), out(c.cases);
    for (int s1 = -box; s1 <= box; ++s1)
      for (int s2 = -box; s2 <= box; ++s2)
        for (int s3 = -box; s3 <= box; ++s3)
          for (int s4 = -box; s4 <= box; ++s4) {
            Cocharacter lam{frame_for(m), {s1, s2, s3, s4}};
            if (lam.trivial()) continue;
            const std::uint32_t neg = negative_mask(m, lam);
            const std::uint32_t p = small_primes()[rng() % small_primes().size()];
            auto it = progs.find(p);
            if (it == progs.end()) it = progs.emplace(p, compile_delta(m, p, c.cat)).first;
            const Program& prog = it->second;
            for (unsigned k = 0; k < c.cases; ++k) {
              for (std::size_t i = 0; i < n; ++i) {
                in[k * n + i] = (neg >> i) & 1u ? 0 : static_cast<std::uint32_t>(rng() % p);
              }
            }
            eval_batch(prog, in.data(), c.cases, out.data(), select_kernel(prog));
            for (unsigned k = 0; k < c.cases; ++k) vanished += prog.finish(out[k]) == 0;
            total += c.cases;
          }
    o.count("m=" + std::to_string(m) + " vanishing", vanished, total);
  }
  return o;
}

Outcome sweeps(const Ctx& c) {
  Outcome o{"stated"};
  const std::vector<std::pair<int, std::uint32_t>> spaces = {{8, 2}, {8, 3}, {6, 2}, {6, 3}, {3, 2}};
  for (auto [m, p] : spaces) {
    SweepOptions opt;
    opt.threads = c.threads;
    SweepResult r = sweep(m, p, opt, nullptr, c.cat);
    const std::string name = "V" + std::to_string(m) + "(F" + std::to_string(p) + ")";
    o.add(name, "total " + std::to_string(sweep_size(m, p)) + ", stable>=1",
          "total " + std::to_string(r.total) + ", stable " + std::to_string(r.stable_count),
          r.total == sweep_size(m, p) && r.stable_count >= 1);
  }
  return o;
}

Outcome witnesses(const Ctx& c) {
  Outcome o{"derived"};
  const std::vector<std::pair<int, std::uint32_t>> spaces = {{8, 2}, {8, 3}, {6, 2}};
  for (auto [m, p] : spaces) {
    const FieldCtx& F = FieldCtx::prime(p);
    std::vector<std::uint32_t> values;
    SweepOptions opt;
    opt.threads = c.threads;
    sweep(m, p, opt, &values, c.cat);
    std::uint64_t agree = 0, witnessed = 0, zero = 0, clean = 0, nonzero = 0;
    for (std::uint64_t idx = 0; idx < values.size(); ++idx) {
      FieldVector v{m, {}};
      for (auto x : sweep_vector(m, p, idx)) v.entries.push_back(FieldElem(F, x));
      const FieldElem d = delta(v, c.cat);
      agree += d.raw() == values[idx];
      if (d.is_zero()) {
        ++zero;
        try {
          Witness w = destabilize(v, kDefaultMaxExt, c.cat);
          bool in_box = true;
          for (int s : w.lambda.s) in_box = in_box && std::abs(s) <= kDefaultBox;
          witnessed += in_box && w.ext_degree <= kDefaultMaxExt && verify_witness(v, w);
        } catch (const ReductionFailed&) {
        }
      } else {
        ++nonzero;
        clean += !hm_search(v, kDefaultBox).has_value();
      }
    }
    const std::string name = "V" + std::to_string(m) + "(F" + std::to_string(p) + ")";
    o.count(name + " kernel=reference", agree, values.size());
    o.count(name + " witnessed", witnessed, zero);
    o.count(name + " no box witness when stable", clean, nonzero);
  }
  return o;
}

Outcome weight_tables(const Ctx&) {
  Outcome o{"stated"};
  for (int m : {4, 6, 8}) {
    std::uint64_t good = 0, total = 0;
    for (int i = 0; i < 4; ++i) {
      Cocharacter lam{frame_for(m), {}};
      lam.s[i] = 1;
      auto derived = cochar_weights(m, lam);
      auto table = table_weights(m, lam);
      for (std::size_t k = 0; k < derived.size(); ++k) good += derived[k] == table[k];
      total += derived.size();
    }
    o.count("m=" + std::to_string(m), good, total);
  }
  return o;
}

Outcome structure(const Ctx&) {
  Outcome o{"stated"};
  for (auto [m, d] : std::vector<std::pair<int, int>>{{3, 18}, {4, 14}, {6, 10}, {8, 7}, {12, 5}}) {
    auto dims = kac_grading_dims(kac_point(m));
    const std::string name = "dim V" + std::to_string(m);
    const bool ok = static_cast<int>(grading_basis(m).size()) == d && dims[1] == d && static_cast<int>(dim(m)) == d;
    o.add(name, std::to_string(d) + "/" + std::to_string(d) + "/" + std::to_string(d),
          std::to_string(grading_basis(m).size()) + "/" + std::to_string(dims[1]) + "/" + std::to_string(dim(m)), ok);
  }
  for (int m : {3, 4, 6, 8, 12}) {
    o.eq("mark sum m=" + std::to_string(m), std::to_string(m), std::to_string(kac_mark_sum(kac_point(m))));
  }
  o.eq("|roots|", "48", std::to_string(generate_roots().size()));
  return o;
}

Outcome homogeneity(const Ctx& c) {
  Outcome o{"stated"};
  std::mt19937_64 rng(c.seed ^ 0x40e0ULL);
  const Vars tv = make_vars({"t"});
  const IntPoly t = IntPoly::variable(tv, Integer(1), std::size_t{0});
  for (int m : {3, 4, 6, 8}) {
    IntVector r;
    Integer base = 0;
    do {
      r = IntVector{m, {}};
      for (std::size_t i = 0; i < dim(m); ++i) r.entries.push_back(Integer(static_cast<long>(rng() % 11) - 5));
      base = delta(r, c.cat);
    } while (base == 0);
    SymVector scaled{m, {}};
    for (const auto& x : r.entries) scaled.entries.push_back(t * int_poly_const(tv, x));
    IntPoly d = delta(scaled, c.cat);
    const unsigned deg = delta_degree(m);
    const bool ok = d == t.pow(deg) * int_poly_const(tv, base);
    o.add("deg delta" + std::to_string(m), std::to_string(deg), ok ? std::to_string(deg) : d.to_string(), ok);
  }
  return o;
}

Outcome conjecture(const Ctx& c) {
  Outcome o{"stated"};
  for (int m : {3, 4, 6}) {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      o.eq("m=" + std::to_string(m) + ",p=" + std::to_string(p), "true", check_conjecture(m, p, c.cat) ? "true" : "false");
    }
  }
  return o;
}

using CheckFn = Outcome (*)(const Ctx&);

const std::vector<std::pair<CheckInfo, CheckFn>>& registry() {
  static const std::vector<std::pair<CheckInfo, CheckFn>> r = {
      {{1, "delta3-dual-cyclic", "symbolic delta3 of the dual cyclic vector"}, delta3_dual_cyclic},
      {{2, "delta3-explicit", "delta3 = 225 and its reduction mod 2"}, delta3_explicit},
      {{3, "delta4", "delta4 dual cyclic monomial and the value 125"}, delta4_values},
      {{4, "delta6", "delta6 dual cyclic, char-2 family and 16-divisibility"}, delta6_values},
      {{5, "delta8", "delta8 = 1 and the perfect-square form"}, delta8_values},
      {{6, "disc3-vanishing", "disc3 vanishes on both coefficient patterns"}, disc3_patterns},
      {{7, "invariance", "invariance under unipotent, Weyl and torus generators"}, invariance},
      {{8, "vlambda-vanishing", "delta vanishes on V_lambda for |s_i| <= 3"}, vlambda_vanishing},
      {{9, "sweeps", "exhaustive sweeps contain stable vectors"}, sweeps},
      {{10, "witnesses", "witness and delta deciders agree on full sweeps"}, witnesses},
      {{11, "weight-tables", "derived weights match the tabulated weights"}, weight_tables},
      {{12, "structure", "grading dimensions, Kac mark sums, root count"}, structure},
      {{13, "homogeneity", "homogeneity degrees by symbolic scaling"}, homogeneity},
      {{14, "conjecture", "dual cyclic stability table"}, conjecture},
  };
  return r;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "skipped";
  }
}

const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> list = [] {
    std::vector<CheckInfo> out;
    for (const auto& [info, fn] : registry()) out.push_back(info);
    return out;
  }();
  return list;
}

bool selected(const CheckInfo& info, const std::vector<std::string>& only) {
  if (only.empty()) return true;
  for (const auto& prefix : only) {
    if (info.id.rfind(prefix, 0) == 0 || prefix == std::to_string(info.criterion)) return true;
  }
  return false;
}

std::vector<CheckReport> run_checks(const CheckOptions& opt, const std::function<void(const CheckReport&)>& on_report) {
  Ctx ctx{opt.catalog ? *opt.catalog : default_catalog(), opt.seed, std::max(1u, opt.cases), std::max(1u, opt.threads)};
  std::vector<CheckReport> out;
  for (const auto& [info, fn] : registry()) {
    if (!selected(info, opt.only)) continue;
    CheckReport r;
    r.check_id = info.id;
    r.criterion = info.criterion;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = fn(ctx);
      r.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
      r.expected = join(o.expected);
      r.actual = join(o.actual);
      r.source = o.source;
    } catch (const std::exception& e) {
      r.status = CheckStatus::Fail;
      r.actual = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (on_report) on_report(r);
    out.push_back(std::move(r));
  }
  return out;
}

nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_id"] = r.check_id;
  j["criterion"] = r.criterion;
  j["status"] = status_name(r.status);
  j["expected"] = r.expected;
  j["source"] = r.source;
  j["actual"] = r.actual;
  j["runtime_ms"] = r.runtime_ms;
  return j;
}

}  // namespace f4v
