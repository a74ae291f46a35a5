#include <array>
#include <functional>

#include "f4v/stability/stability.hpp"

namespace f4v {

namespace {

// Homogeneous form in up to three of the model variables.
struct Form {
  int n = 0;
  std::vector<std::pair<std::array<int, 3>, FieldElem>> terms;

  void add(std::array<int, 3> e, const FieldElem& c) { terms.emplace_back(e, c); }

  FieldElem eval(const std::vector<FieldElem>& pt) const {
    FieldElem acc = FieldElem::zero(pt[0].field());
    for (const auto& [e, c] : terms) {
      FieldElem t = c;
      for (int i = 0; i < n; ++i) t *= pt[i].pow(std::uint64_t(e[i]));
      acc += t;
    }
    return acc;
  }

  FieldElem partial(int var, const std::vector<FieldElem>& pt) const {
    FieldElem acc = FieldElem::zero(pt[0].field());
    for (const auto& [e, c] : terms) {
      if (e[var] == 0) continue;
      FieldElem t = c * FieldElem::from_int(c.field(), e[var]);
      for (int i = 0; i < n; ++i) t *= pt[i].pow(std::uint64_t(i == var ? e[i] - 1 : e[i]));
      acc += t;
    }
    return acc;
  }

  bool is_zero() const {
    for (const auto& t : terms) {
      if (!t.second.is_zero()) return false;
    }
    return true;
  }

  bool singular_at(const std::vector<FieldElem>& pt) const {
    if (!eval(pt).is_zero()) return false;
    for (int i = 0; i < n; ++i) {
      if (!partial(i, pt).is_zero()) return false;
    }
    return true;
  }
};

constexpr std::uint64_t kPlaneScanLimit = std::uint64_t{1} << 24;

// Scans P^{n-1}(K): (1,0,..), (t,1,0,..), (t,u,1,..), ...
std::optional<std::vector<FieldElem>> find_point(const FieldCtx& K, int n,
                                                 const std::function<bool(const std::vector<FieldElem>&)>& pred) {
  const std::uint64_t q = K.order();
  if (n == 3 && q * q > kPlaneScanLimit) return std::nullopt;
  std::vector<FieldElem> pt(n, FieldElem::zero(K));
  for (int lead = 0; lead < n; ++lead) {
    std::fill(pt.begin(), pt.end(), FieldElem::zero(K));
    pt[lead] = FieldElem::one(K);
    std::uint64_t count = 1;
    for (int i = 0; i < lead; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t r = idx;
      for (int i = 0; i < lead; ++i) {
        pt[i] = FieldElem(K, static_cast<std::uint32_t>(r % q));
        r /= q;
      }
      if (pred(pt)) return pt;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<FieldElem>> singular_point(const FieldCtx& K, const Form& f) {
  return find_point(K, f.n, [&](const auto& pt) { return f.singular_at(pt); });
}

std::optional<std::vector<FieldElem>> zero_point(const FieldCtx& K, const Form& f) {
  return find_point(K, f.n, [&](const auto& pt) { return f.eval(pt).is_zero(); });
}

Form binary(const std::vector<FieldElem>& desc) {
  Form f;
  f.n = 2;
  const int d = static_cast<int>(desc.size()) - 1;
  for (int i = 0; i <= d; ++i) f.add({d - i, i, 0}, desc[i]);
  return f;
}

class Reducer {
 public:
  Reducer(const FieldCtx& K, FieldVector v, const FormulaCatalog& cat) : K_(K), v_(std::move(v)), cat_(cat) {}

  const FieldElem& at(std::string_view label) const { return v_.at(label); }
  const FieldVector& vec() const { return v_; }
  const FieldCtx& field() const { return K_; }
  const FormulaCatalog& catalog() const { return cat_; }

  void push(const Generator<FieldElem>& g) {
    FieldWord one;
    one.gens.push_back(g);
    v_ = act(one, v_);
    word_.gens.push_back(g);
  }

  /// Moves the projective point `pt` (coordinates over `vars`) to the first of `vars`.
  void move_point(const std::vector<int>& vars, std::vector<FieldElem> pt) {
    if (pt[0].is_zero()) {
      std::size_t k = 1;
      while (k < pt.size() && pt[k].is_zero()) ++k;
      if (k == pt.size()) throw std::logic_error("zero projective point");
      push(WeylSwap{vars[k], vars[0]});
      pt[0] = pt[k];
      pt[k] = FieldElem::zero(K_);
    }
    const FieldElem inv = pt[0].inverse();
    for (std::size_t k = 1; k < pt.size(); ++k) {
      if (!pt[k].is_zero()) push(Unipotent<FieldElem>{vars[0], vars[k], pt[k] * inv});
    }
  }

  /// Moves a point found on a form whose variables are `vars` in natural order
  /// to the variable at position `target`.
  void move_to(const std::vector<int>& vars, const std::vector<FieldElem>& pt, std::size_t target) {
    std::vector<int> order = {vars[target]};
    std::vector<FieldElem> coords = {pt[target]};
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (i == target) continue;
      order.push_back(vars[i]);
      coords.push_back(pt[i]);
    }
    move_point(order, coords);
  }

  std::optional<Witness> match(const std::vector<Cocharacter>& candidates) const {
    for (const auto& c : candidates) {
      if (!c.trivial() && no_negative_weights(v_, c)) return witness(c);
    }
    return std::nullopt;
  }

  std::optional<Witness> conclude(const std::vector<Cocharacter>& candidates) const {
    if (auto w = match(candidates)) return w;
    if (auto c = hm_search(v_, kDefaultBox)) return witness(*c);
    return std::nullopt;
  }

 private:
  Witness witness(const Cocharacter& c) const {
    Witness w;
    w.m = v_.m;
    w.word = word_;
    w.lambda = c;
    w.field = &K_;
    return w;
  }

  const FieldCtx& K_;
  FieldVector v_;
  FieldWord word_;
  const FormulaCatalog& cat_;
};

Cocharacter omega(int a, int b, int c, int d) { return {Frame::Omega, {a, b, c, d}}; }

std::vector<FieldElem> eval_catalog(std::span<const IntPoly> polys, const FieldVector& v) {
  const FieldCtx& K = v.entries.front().field();
  std::vector<FieldElem> out;
  for (const auto& p : polys) {
    out.push_back(p.eval<FieldElem>(std::span<const FieldElem>(v.entries), FieldElem::zero(K),
                                    [&](const Integer& z) { return FieldElem::from_integer(K, z); }));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::optional<Witness> reduce8(Reducer& r) {
  const auto& K = r.field();
  if (r.at("g").is_zero()) return r.conclude({omega(-1, 0, 0, 0)});
  if (r.at("f").is_zero()) return r.conclude({omega(1, 0, 0, 0)});
  const FieldElem four = FieldElem::from_int(K, 4);
  const FieldElem a = r.at("a"), b = r.at("b"), c = r.at("c");
  if ((b * b - four * a * c).is_zero()) {
    auto pt = singular_point(K, binary({a, b, c}));
    if (!pt) return std::nullopt;
    r.move_to({0, 1}, *pt, 0);
    return r.conclude({omega(0, 2, -1, 0)});
  }
  const FieldElem d = r.at("d"), e = r.at("e");
  if (d.is_zero() && e.is_zero()) return r.conclude({omega(0, 0, 0, 1)});
  r.move_to({0, 1}, {e, -d}, 0);
  return r.conclude({omega(0, 1, -1, 1), omega(0, 0, 0, 1)});
}

std::optional<Witness> reduce12(Reducer& r) {
  for (int i = 1; i <= 4; ++i) {
    if (r.at("c" + std::to_string(i)).is_zero()) {
      std::array<int, 4> s{};
      s[i - 1] = 1;
      return r.conclude({{Frame::Omega, s}});
    }
  }
  return r.conclude({omega(-1, 0, 0, 0)});
}

std::optional<Witness> reduce4(Reducer& r) {
  const auto& K = r.field();
  const auto& cat = r.catalog();
  // U=0, W=1, X=2, Y=3, Z=4
  auto G = eval_catalog(cat.coeffs4, r.vec());
  auto root = singular_point(K, binary(G));
  if (!root) return std::nullopt;
  r.move_to({0, 1}, *root, 0);

  auto f1 = [&] {
    Form f;
    f.n = 3;
    f.add({2, 0, 0}, r.at("a"));
    f.add({0, 2, 0}, r.at("c"));
    f.add({0, 0, 2}, r.at("e"));
    f.add({1, 1, 0}, r.at("g"));
    f.add({1, 0, 1}, r.at("i"));
    f.add({0, 1, 1}, r.at("k"));
    return f;
  };
  std::array<FieldElem, 6> q = {r.at("a"), r.at("c"), r.at("e"), r.at("g"), r.at("i"), r.at("k")};
  if (!disc2_ternary(std::span<const FieldElem>(q), cat).is_zero()) return r.conclude({omega(-1, 0, 0, 0)});

  auto sing = singular_point(K, f1());
  if (!sing) return std::nullopt;
  r.move_to({2, 3, 4}, *sing, 0);
  if (r.at("b").is_zero()) return r.conclude({omega(-1, 2, -1, 0)});
  if (r.at("m").is_zero()) return r.conclude({omega(-2, 2, -1, 0)});
  auto dbl = singular_point(K, binary({r.at("c"), r.at("k"), r.at("e")}));
  if (!dbl) return std::nullopt;
  r.move_to({3, 4}, *dbl, 0);
  return r.conclude({omega(-2, 2, 0, -1)});
}

std::optional<Witness> reduce3(Reducer& r) {
  const auto& K = r.field();
  const auto& cat = r.catalog();
  // X=0, Y=1, Z=2, T=3, U=4, W=5
  auto c = eval_catalog(cat.coeffs3, r.vec());
  Form cubic;
  cubic.n = 3;
  const std::array<std::array<int, 3>, 10> mons = {{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                                     {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}}};
  for (int i = 0; i < 10; ++i) cubic.add(mons[i], c[i]);
  auto sing = singular_point(K, cubic);
  if (!sing) return std::nullopt;
  r.move_to({0, 1, 2}, *sing, 0);

  c = eval_catalog(cat.coeffs3, r.vec());
  Form cone = binary({c[3], c[4], c[5]});
  if (!cone.is_zero()) {
    auto pt = zero_point(K, cone);
    if (!pt) return std::nullopt;
    r.move_to({1, 2}, *pt, 0);
  }

  Form fx;
  fx.n = 3;
  fx.add({2, 0, 0}, r.at("a"));
  fx.add({0, 2, 0}, r.at("d"));
  fx.add({0, 0, 2}, r.at("g"));
  fx.add({1, 1, 0}, r.at("j"));
  fx.add({1, 0, 1}, r.at("m"));
  fx.add({0, 1, 1}, r.at("p"));
  auto conic_pt = singular_point(K, fx);
  if (!conic_pt) return std::nullopt;
  r.move_to({3, 4, 5}, *conic_pt, 0);

  const Cocharacter first{Frame::Diag, {-2, 1, -2, 1}};
  const Cocharacter second{Frame::Diag, {-4, 2, -1, 2}};
  const FieldElem four = FieldElem::from_int(K, 4);
  const FieldElem d = r.at("d"), g = r.at("g"), p = r.at("p");
  if (!(four * d * g - p * p).is_zero()) return r.conclude({first});
  auto dbl = singular_point(K, binary({d, p, g}));
  if (!dbl) return std::nullopt;
  r.move_to({4, 5}, *dbl, 1);
  return r.conclude({second, first});
}

const std::vector<Cocharacter>& patterns6() {
  static const std::vector<Cocharacter> p = {
      omega(1, 0, 0, 0),  omega(1, -1, 1, -1), omega(2, -2, 1, -1), omega(2, -2, 1, 0),
      omega(-1, 0, 0, 0), omega(0, 0, 0, 1),   omega(0, -1, 1, 0),  omega(1, -2, 1, 0),
      omega(2, 0, -1, 0), omega(-2, 0, 1, 0),  omega(-1, 2, -1, 0),
  };
  return p;
}

std::optional<Witness> reduce6_odd(Reducer& r) {
  if (auto w = r.match(patterns6())) return w;
  const auto& K = r.field();
  const auto& cat = r.catalog();
  // X=0, Y=1, Z=2, T=3, U=4, W=5
  auto b = eval_catalog(cat.beta, r.vec());
  Form quartic = binary({b[0] * b[4], b[0] * b[5] + b[1] * b[4], b[1] * b[5] + b[2] * b[4], b[2] * b[5] + b[3] * b[4],
                         b[3] * b[5]});
  auto root = singular_point(K, quartic);
  if (!root) return std::nullopt;
  r.move_to({0, 1}, *root, 1);

  const FieldElem four = FieldElem::from_int(K, 4);
  if ((r.at("k") * r.at("k") - four * r.at("b") * r.at("e")).is_zero()) {
    auto dbl = singular_point(K, binary({r.at("b"), r.at("k"), r.at("e")}));
    if (!dbl) return std::nullopt;
    r.move_to({3, 4}, *dbl, 1);
    return r.conclude(patterns6());
  }
  b = eval_catalog(cat.beta, r.vec());
  if (!b[5].is_zero()) return r.conclude(patterns6());
  const FieldElem o = r.at("o"), rr = r.at("r");
  if (!(o.is_zero() && rr.is_zero())) r.move_to({3, 4}, {rr, -o}, 1);
  return r.conclude(patterns6());
}

std::optional<Witness> reduce6_even(Reducer& r) {
  // h = 0 via SL(X,Y), r = 0 via SL(T,U)
  if (!r.at("h").is_zero()) {
    if (r.at("g").is_zero()) {
      r.push(WeylSwap{0, 1});
    } else {
      r.push(Unipotent<FieldElem>{1, 0, -(r.at("h") / r.at("g"))});
    }
  }
  if (!r.at("r").is_zero()) {
    if (r.at("o").is_zero()) {
      r.push(WeylSwap{3, 4});
    } else {
      r.push(Unipotent<FieldElem>{4, 3, -(r.at("r") / r.at("o"))});
    }
  }
  if (auto w = r.match(patterns6())) return w;
  if (r.at("e").is_zero()) return r.conclude(patterns6());
  const FieldElem e = r.at("e"), k = r.at("k");
  if (k.is_zero()) {
    r.push(Unipotent<FieldElem>{3, 4, field_sqrt_char2(r.at("b") / e)});
    return r.conclude(patterns6());
  }
  r.push(Unipotent<FieldElem>{0, 1, r.at("j") / k});
  if (r.at("d").is_zero()) return r.conclude(patterns6());
  r.push(Unipotent<FieldElem>{3, 4, field_sqrt_char2(r.at("a") / r.at("d"))});
  return r.conclude(patterns6());
}

std::optional<Witness> reduce(Reducer& r) {
  switch (r.vec().m) {
    case 3: return reduce3(r);
    case 4: return reduce4(r);
    case 6: return r.field().characteristic() == 2 ? reduce6_even(r) : reduce6_odd(r);
    case 8: return reduce8(r);
    case 12: return reduce12(r);
    default: throw std::invalid_argument("unsupported m=" + std::to_string(r.vec().m));
  }
}

}  // namespace

Witness destabilize(const FieldVector& v, unsigned max_ext, const FormulaCatalog& cat) {
  if (!supported_m(v.m)) throw std::invalid_argument("unsupported m=" + std::to_string(v.m));
  if (!delta(v, cat).is_zero()) throw PreconditionError("Δ ≠ 0: the vector is stable");
  const FieldCtx& base = v.entries.front().field();
  if (support_mask(v) == 0) {
    Witness w;
    w.m = v.m;
    w.lambda = *hm_search(v.m, 0, kDefaultBox);
    w.field = &base;
    return w;
  }
  for (unsigned e = 1; e <= std::max(1u, max_ext); ++e) {
    std::uint64_t order = 1;
    for (unsigned i = 0; i < base.degree() * e; ++i) order *= base.characteristic();
    if (e > 1 && order > kMaxExtensionOrder) break;
    const FieldCtx& K = e == 1 ? base : FieldCtx::extension(base.characteristic(), base.degree() * e);
    FieldVector lifted = lift_to(v, K);
    Reducer r(K, lifted, cat);
    if (auto w = reduce(r)) {
      w->ext_degree = e;
      if (verify_witness(lifted, *w)) return *w;
    }
  }
  throw ReductionFailed("no destabilizing witness over extensions of degree ≤ " + std::to_string(max_ext));
}

}  // namespace f4v
