#include "f4v/reps/basis.hpp"

#include <map>
#include <stdexcept>

namespace f4v {

namespace {

struct Grading {
  std::vector<std::string> vars;
  std::vector<BasisLabel> labels;
  std::vector<std::vector<int>> blocks;
  std::map<std::array<std::uint8_t, 6>, std::size_t> by_exps;
  Vars label_vars;
};

BasisLabel make_label(int m, const std::string& name, const std::vector<std::string>& vars,
                      const std::vector<std::pair<std::string, int>>& factors) {
  BasisLabel b;
  b.m = m;
  b.name = name;
  std::string text;
  for (const auto& [v, e] : factors) {
    std::size_t idx = 0;
    while (vars[idx] != v) ++idx;
    b.exps[idx] = static_cast<std::uint8_t>(b.exps[idx] + e);
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (b.exps[i] == 0) continue;
    if (!text.empty()) text += "*";
    text += vars[i];
    if (b.exps[i] > 1) text += "^" + std::to_string(b.exps[i]);
  }
  b.monomial = text;
  return b;
}

Grading build(int m) {
  Grading g;
  using F = std::vector<std::pair<std::string, int>>;
  auto add = [&](const std::string& name, F f) { g.labels.push_back(make_label(m, name, g.vars, f)); };
  switch (m) {
    case 3: {
      g.vars = {"X", "Y", "Z", "T", "U", "W"};
      const std::vector<F> quads = {{{"T", 2}}, {{"U", 2}}, {{"W", 2}}, {{"T", 1}, {"U", 1}}, {{"T", 1}, {"W", 1}}, {{"U", 1}, {"W", 1}}};
      const std::string lins[3] = {"X", "Y", "Z"};
      char letter = 'a';
      for (const auto& q : quads) {
        for (const auto& l : lins) {
          F f = q;
          f.push_back({l, 1});
          add(std::string(1, letter++), f);
        }
      }
      g.blocks = {{0, 1, 2}, {3, 4, 5}};
      break;
    }
    case 4: {
      g.vars = {"U", "W", "X", "Y", "Z", "T"};
      const std::vector<F> quads = {{{"X", 2}}, {{"Y", 2}}, {{"Z", 2}}, {{"X", 1}, {"Y", 1}}, {{"X", 1}, {"Z", 1}}, {{"Y", 1}, {"Z", 1}}};
      char letter = 'a';
      for (const auto& q : quads) {
        for (const char* l : {"U", "W"}) {
          F f = q;
          f.push_back({l, 1});
          add(std::string(1, letter++), f);
        }
      }
      add("m", {{"U", 1}, {"T", 1}});
      add("n", {{"W", 1}, {"T", 1}});
      g.blocks = {{0, 1}, {2, 3, 4}};
      break;
    }
    case 6: {
      g.vars = {"X", "Y", "Z", "T", "U", "W"};
      add("a", {{"X", 1}, {"T", 2}});
      add("b", {{"Y", 1}, {"T", 2}});
      add("d", {{"X", 1}, {"U", 2}});
      add("e", {{"Y", 1}, {"U", 2}});
      add("g", {{"X", 1}, {"W", 2}});
      add("h", {{"Y", 1}, {"W", 2}});
      add("j", {{"X", 1}, {"T", 1}, {"U", 1}});
      add("k", {{"Y", 1}, {"T", 1}, {"U", 1}});
      add("o", {{"Z", 1}, {"T", 1}, {"W", 1}});
      add("r", {{"Z", 1}, {"U", 1}, {"W", 1}});
      g.blocks = {{0, 1}, {3, 4}};
      break;
    }
    case 8: {
      g.vars = {"X", "Y", "Z", "W"};
      add("a", {{"X", 2}});
      add("b", {{"X", 1}, {"Y", 1}});
      add("c", {{"Y", 2}});
      add("d", {{"X", 1}});
      add("e", {{"Y", 1}});
      add("f", {{"Z", 1}});
      add("g", {{"W", 1}});
      g.blocks = {{0, 1}};
      break;
    }
    case 12: {
      g.vars = {"E1", "E2", "E3", "E4", "E5"};
      for (int i = 1; i <= 5; ++i) add("c" + std::to_string(i), {{"E" + std::to_string(i), 1}});
      break;
    }
    default:
      throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    g.by_exps[g.labels[i].exps] = i;
    names.push_back(g.labels[i].name);
  }
  g.label_vars = make_vars(names);
  return g;
}

const Grading& grading(int m) {
  static const Grading g3 = build(3), g4 = build(4), g6 = build(6), g8 = build(8), g12 = build(12);
  switch (m) {
    case 3: return g3;
    case 4: return g4;
    case 6: return g6;
    case 8: return g8;
    case 12: return g12;
    default: throw std::invalid_argument("unsupported m=" + std::to_string(m));
  }
}

bool same_block(int m, int a, int b) {
  for (const auto& blk : grading(m).blocks) {
    bool ha = false, hb = false;
    for (int x : blk) {
      ha |= x == a;
      hb |= x == b;
    }
    if (ha && hb) return true;
  }
  return false;
}

template <class T>
void accumulate(std::vector<T>& out, const Grading& g, const std::array<std::uint8_t, 6>& exps, const T& value) {
  auto it = g.by_exps.find(exps);
  if (it == g.by_exps.end()) throw std::logic_error("substitution left the representation");
  out[it->second] = out[it->second] + value;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

bool supported_m(int m) { return m == 3 || m == 4 || m == 6 || m == 8 || m == 12; }
const std::vector<BasisLabel>& basis(int m) { return grading(m).labels; }
std::size_t dim(int m) { return grading(m).labels.size(); }
const std::vector<std::string>& model_vars(int m) { return grading(m).vars; }
const std::vector<std::vector<int>>& sl_blocks(int m) { return grading(m).blocks; }
const Vars& label_vars(int m) { return grading(m).label_vars; }

std::size_t label_index(int m, std::string_view name) {
  const auto& ls = grading(m).labels;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].name == name) return i;
  }
  throw std::invalid_argument("unknown label '" + std::string(name) + "' for m=" + std::to_string(m));
}

std::size_t model_var_index(int m, std::string_view name) {
  const auto& vs = grading(m).vars;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] == name) return i;
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "' for m=" + std::to_string(m));
}

SymVector generic_vector(int m) {
  SymVector v;
  v.m = m;
  for (std::size_t i = 0; i < dim(m); ++i) v.entries.push_back(IntPoly::variable(label_vars(m), Integer(1), i));
  return v;
}

const std::array<std::string, 5>& dual_cyclic_labels(int m) {
  static const std::array<std::string, 5> l3 = {"a", "e", "h", "l", "p"};
  static const std::array<std::string, 5> l4 = {"a", "d", "j", "k", "m"};
  static const std::array<std::string, 5> l6 = {"b", "j", "e", "g", "r"};
  static const std::array<std::string, 5> l12 = {"c1", "c2", "c3", "c4", "c5"};
  switch (m) {
    case 3: return l3;
    case 4: return l4;
    case 6: return l6;
    case 12: return l12;
    default: throw std::invalid_argument("no dual cyclic pattern for m=" + std::to_string(m));
  }
}

template <class T>
VmVector<T> dual_cyclic(int m, const std::array<T, 5>& c) {
  const auto& labels = dual_cyclic_labels(m);
  VmVector<T> v = zero_vector(m, c[0]);
  for (int i = 0; i < 5; ++i) v.at(labels[i]) = c[i];
  return v;
}

FieldVector reduce_vector(const IntVector& v, const FieldCtx& f) {
  FieldVector out{v.m, {}};
  for (const auto& x : v.entries) out.entries.push_back(FieldElem::from_integer(f, x));
  return out;
}

FieldVector embed_vector(const FieldVector& v, const FieldEmbedding& e) {
  FieldVector out{v.m, {}};
  for (const auto& x : v.entries) out.entries.push_back(e(x));
  return out;
}

template <class T>
VmVector<T> apply_unipotent(const VmVector<T>& v, int from, int to, const T& x) {
  if (from == to || !same_block(v.m, from, to)) throw std::invalid_argument("unipotent generator outside an SL block");
  const auto& g = grading(v.m);
  VmVector<T> out = zero_vector(v.m, x);
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (is_zero(v.entries[i])) continue;
    const auto& e = g.labels[i].exps;
    const int n = e[to];
    T xk = scalar_like(x, 1);
    for (int k = 0; k <= n; ++k) {
      auto ne = e;
      ne[to] = static_cast<std::uint8_t>(n - k);
      ne[from] = static_cast<std::uint8_t>(e[from] + k);
      accumulate(out.entries, g, ne, T(v.entries[i] * xk * scalar_like(x, binomial(n, k))));
      xk = xk * x;
    }
  }
  return out;
}

template <class T>
VmVector<T> apply_weyl(const VmVector<T>& v, int i, int j) {
  if (i == j || !same_block(v.m, i, j)) throw std::invalid_argument("Weyl generator outside an SL block");
  const auto& g = grading(v.m);
  VmVector<T> out = zero_vector(v.m, v.entries.front());
  for (std::size_t l = 0; l < v.entries.size(); ++l) {
    if (is_zero(v.entries[l])) continue;
    auto e = g.labels[l].exps;
    const int ej = e[j];
    std::swap(e[i], e[j]);
    T val = (ej % 2) ? T(-v.entries[l]) : v.entries[l];
    accumulate(out.entries, g, e, val);
  }
  return out;
}

VmVector<FieldElem> apply_torus(const VmVector<FieldElem>& v, const Cocharacter& lambda, const FieldElem& t) {
  if (t.is_zero()) throw std::invalid_argument("torus parameter must be invertible");
  auto w = cochar_weights(v.m, lambda);
  VmVector<FieldElem> out = v;
  for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i] = out.entries[i] * t.pow(std::int64_t{w[i]});
  return out;
}

template <class T>
GroupWord<T> GroupWord<T>::inverse() const {
  GroupWord<T> inv;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Unipotent<T>>) {
            inv.gens.push_back(Unipotent<T>{g.from, g.to, T(-g.x)});
          } else if constexpr (std::is_same_v<G, WeylSwap>) {
            inv.gens.push_back(WeylSwap{g.j, g.i});
          } else {
            inv.gens.push_back(TorusScale<T>{g.lambda, g.t.inverse()});
          }
        },
        *it);
  }
  return inv;
}

FieldVector act(const FieldWord& word, const FieldVector& v) {
  FieldVector cur = v;
  for (const auto& gen : word.gens) {
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Unipotent<FieldElem>>) {
            cur = apply_unipotent(cur, g.from, g.to, g.x);
          } else if constexpr (std::is_same_v<G, WeylSwap>) {
            cur = apply_weyl(cur, g.i, g.j);
          } else {
            cur = apply_torus(cur, g.lambda, g.t);
          }
        },
        gen);
  }
  return cur;
}

FieldWord embed_word(const FieldWord& word, const FieldEmbedding& e) {
  FieldWord out;
  for (const auto& gen : word.gens) {
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Unipotent<FieldElem>>) {
            out.gens.push_back(Unipotent<FieldElem>{g.from, g.to, e(g.x)});
          } else if constexpr (std::is_same_v<G, WeylSwap>) {
            out.gens.push_back(g);
          } else {
            out.gens.push_back(TorusScale<FieldElem>{g.lambda, e(g.t)});
          }
        },
        gen);
  }
  return out;
}

template VmVector<Integer> dual_cyclic(int, const std::array<Integer, 5>&);
template VmVector<FieldElem> dual_cyclic(int, const std::array<FieldElem, 5>&);
template VmVector<IntPoly> dual_cyclic(int, const std::array<IntPoly, 5>&);
template VmVector<Integer> apply_unipotent(const VmVector<Integer>&, int, int, const Integer&);
template VmVector<FieldElem> apply_unipotent(const VmVector<FieldElem>&, int, int, const FieldElem&);
template VmVector<IntPoly> apply_unipotent(const VmVector<IntPoly>&, int, int, const IntPoly&);
template VmVector<FieldPoly> apply_unipotent(const VmVector<FieldPoly>&, int, int, const FieldPoly&);
template VmVector<Integer> apply_weyl(const VmVector<Integer>&, int, int);
template VmVector<FieldElem> apply_weyl(const VmVector<FieldElem>&, int, int);
template VmVector<IntPoly> apply_weyl(const VmVector<IntPoly>&, int, int);
template struct GroupWord<FieldElem>;

}  // namespace f4v
