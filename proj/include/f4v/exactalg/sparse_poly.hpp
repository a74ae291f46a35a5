#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "f4v/exactalg/field.hpp"
#include "f4v/exactalg/integer.hpp"

namespace f4v {

inline constexpr std::size_t kMaxVars = 32;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool is_one() const { return degree() == 0; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned{a.e[i]} + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

/// Graded-lex: higher total degree first, ties by lex with variable 0 most significant.
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using Vars = std::shared_ptr<const std::vector<std::string>>;

inline Vars make_vars(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many polynomial variables");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

inline bool same_vars(const Vars& a, const Vars& b) { return a == b || (a && b && *a == *b); }

inline std::size_t var_index(const Vars& vars, std::string_view name) {
  for (std::size_t i = 0; i < vars->size(); ++i) {
    if ((*vars)[i] == name) return i;
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

// Coefficient-ring hooks. `unit` is the ring's one and carries its context.
inline Integer zero_like(const Integer&) { return Integer(0); }
inline Integer from_integer_like(const Integer&, const Integer& z) { return z; }
inline bool is_negative_coeff(const Integer& z) { return sgn(z) < 0; }
inline std::string coeff_text(const Integer& z) { return z.get_str(); }

inline FieldElem zero_like(const FieldElem& u) { return FieldElem::zero(u.field()); }
inline FieldElem from_integer_like(const FieldElem& u, const Integer& z) { return FieldElem::from_integer(u.field(), z); }
inline bool is_negative_coeff(const FieldElem&) { return false; }
inline std::string coeff_text(const FieldElem& a) {
  auto s = a.to_string();
  return a.field().is_prime_field() || s.find('+') == std::string::npos ? s : "(" + s + ")";
}

template <class C>
class SparsePoly {
 public:
  using Term = std::pair<Monomial, C>;

  SparsePoly() = default;
  SparsePoly(Vars vars, C unit) : vars_(std::move(vars)), unit_(std::move(unit)) {}

  static SparsePoly constant(Vars vars, C unit, C value) {
    SparsePoly p(std::move(vars), std::move(unit));
    if (!f4v::is_zero(value)) p.terms_.push_back({Monomial{}, std::move(value)});
    return p;
  }
  static SparsePoly variable(Vars vars, C unit, std::size_t idx) {
    if (idx >= vars->size()) throw std::out_of_range("variable index");
    SparsePoly p(std::move(vars), unit);
    Monomial m;
    m.e[idx] = 1;
    p.terms_.push_back({m, p.unit_});
    return p;
  }
  static SparsePoly variable(Vars vars, C unit, std::string_view name) {
    auto idx = var_index(vars, name);
    return variable(std::move(vars), std::move(unit), idx);
  }
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static SparsePoly from_terms(Vars vars, C unit, std::vector<Term> terms) {
    SparsePoly p(std::move(vars), std::move(unit));
    std::unordered_map<Monomial, C, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(m, std::move(c));
      } else {
        it->second += c;
      }
    }
    p.absorb(acc);
    return p;
  }

  const Vars& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const C& unit() const { return unit_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::uint32_t total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.first.degree() != total_degree()) return false;
    }
    return true;
  }

  C coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return grlex_greater(t.first, x); });
    if (it != terms_.end() && it->first == m) return it->second;
    return zero_like(unit_);
  }

  /// Constant term value, or zero.
  C constant_term() const { return coeff(Monomial{}); }

  SparsePoly operator+(const SparsePoly& o) const { return merge(o, false); }
  SparsePoly operator-(const SparsePoly& o) const { return merge(o, true); }
  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) { return *this = *this + o; }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = *this - o; }

  SparsePoly operator*(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r(vars_, unit_);
    if (is_zero() || o.is_zero()) return r;
    if (terms_.size() == 1 || o.terms_.size() == 1) {
      // Monomial times polynomial preserves term order.
      const auto& single = terms_.size() == 1 ? *this : o;
      const auto& other = terms_.size() == 1 ? o : *this;
      const auto& [sm, sc] = single.terms_.front();
      r.terms_.reserve(other.terms_.size());
      for (const auto& [m, c] : other.terms_) {
        C prod = sc * c;
        if (!f4v::is_zero(prod)) r.terms_.push_back({sm * m, std::move(prod)});
      }
      return r;
    }
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size());
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        auto m = ma * mb;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(m, ca * cb);
        } else {
          fma_into(it->second, ca, cb);
        }
      }
    }
    r.absorb(acc);
    return r;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  SparsePoly scale(const C& c) const {
    SparsePoly r(vars_, unit_);
    if (f4v::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& [m, x] : terms_) {
      C prod = x * c;
      if (!f4v::is_zero(prod)) r.terms_.push_back({m, std::move(prod)});
    }
    return r;
  }

  SparsePoly pow(unsigned e) const {
    SparsePoly r = constant(vars_, unit_, unit_);
    SparsePoly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  SparsePoly derivative(std::size_t idx) const {
    SparsePoly r(vars_, unit_);
    std::vector<Term> out;
    for (const auto& [m, c] : terms_) {
      if (m.e[idx] == 0) continue;
      Monomial d = m;
      C k = c * from_integer_like(unit_, Integer(static_cast<long>(m.e[idx])));
      d.e[idx]--;
      if (!f4v::is_zero(k)) out.push_back({d, std::move(k)});
    }
    return from_terms(vars_, unit_, std::move(out));
  }

  /// Evaluates at scalar values, embedding coefficients with `embed`.
  template <class T, class Embed>
  T eval(std::span<const T> values, const T& zero, Embed embed) const {
    if (values.size() < nvars()) throw std::invalid_argument("assignment does not cover all variables");
    std::vector<std::vector<T>> powers(nvars());
    T acc = zero;
    for (const auto& [m, c] : terms_) {
      T term = embed(c);
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(values[i]);
        while (pw.size() < m.e[i]) pw.push_back(pw.back() * values[i]);
        term = term * pw[m.e[i] - 1];
      }
      acc = acc + term;
    }
    return acc;
  }

  /// Same-ring scalar evaluation.
  C eval(std::span<const C> values) const {
    return eval<C>(values, zero_like(unit_), [](const C& c) { return c; });
  }

  /// Substitutes a polynomial (over a common target frame) for every variable.
  template <class D, class Embed>
  SparsePoly<D> substitute(std::span<const SparsePoly<D>> images, Embed embed) const {
    if (images.size() < nvars()) throw std::invalid_argument("substitution does not cover all variables");
    const auto& target = images.front();
    std::vector<std::vector<SparsePoly<D>>> powers(nvars());
    std::unordered_map<Monomial, D, MonomialHash> acc;
    for (const auto& [m, c] : terms_) {
      SparsePoly<D> term = SparsePoly<D>::constant(target.vars(), target.unit(), embed(c));
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(images[i]);
        while (pw.size() < m.e[i]) pw.push_back(pw.back() * images[i]);
        term = term * pw[m.e[i] - 1];
        if (term.is_zero()) break;
      }
      for (auto& [tm, tc] : term.terms_mut()) {
        auto it = acc.find(tm);
        if (it == acc.end()) {
          acc.emplace(tm, std::move(tc));
        } else {
          it->second += tc;
        }
      }
    }
    SparsePoly<D> r(target.vars(), target.unit());
    r.absorb(acc);
    return r;
  }

  SparsePoly substitute(std::span<const SparsePoly> images) const {
    return substitute<C>(images, [](const C& c) { return c; });
  }

  bool operator==(const SparsePoly& o) const {
    if (!same_vars(vars_, o.vars_) || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].first == o.terms_[i].first) || !(terms_[i].second == o.terms_[i].second)) return false;
    }
    return true;
  }
  bool operator!=(const SparsePoly& o) const { return !(*this == o); }

  /// Canonical text: graded-lex terms, explicit `*` and `^`, e.g. "4096*a^6*e^3".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool neg = is_negative_coeff(c);
      std::string ctext = neg ? coeff_text(C(-c)) : coeff_text(c);
      if (first) {
        if (neg) os << "-";
      } else {
        os << (neg ? " - " : " + ");
      }
      first = false;
      bool wrote = false;
      if (ctext != "1" || m.is_one()) {
        os << ctext;
        wrote = true;
      }
      for (std::size_t i = 0; i < nvars(); ++i) {
        if (m.e[i] == 0) continue;
        if (wrote) os << "*";
        os << (*vars_)[i];
        if (m.e[i] > 1) os << "^" << unsigned{m.e[i]};
        wrote = true;
      }
    }
    return os.str();
  }

  // Internal: used by substitute across coefficient types.
  std::vector<Term>& terms_mut() { return terms_; }
  void absorb(std::unordered_map<Monomial, C, MonomialHash>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!f4v::is_zero(c)) terms_.push_back({m, std::move(c)});
    }
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  }

 private:
  void check_compatible(const SparsePoly& o) const {
    if (!same_vars(vars_, o.vars_)) throw RingMismatch("polynomials over different variable lists");
    if constexpr (std::is_same_v<C, FieldElem>) {
      if (unit_.field_ptr() != o.unit_.field_ptr()) throw RingMismatch("polynomials over different fields");
    }
  }

  SparsePoly merge(const SparsePoly& o, bool subtract) const {
    check_compatible(o);
    SparsePoly r(vars_, unit_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && grlex_greater(terms_[i].first, o.terms_[j].first))) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || grlex_greater(o.terms_[j].first, terms_[i].first)) {
        r.terms_.push_back({o.terms_[j].first, subtract ? C(-o.terms_[j].second) : o.terms_[j].second});
        ++j;
      } else {
        C s = subtract ? C(terms_[i].second - o.terms_[j].second) : C(terms_[i].second + o.terms_[j].second);
        if (!f4v::is_zero(s)) r.terms_.push_back({terms_[i].first, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Vars vars_;
  C unit_{};
  std::vector<Term> terms_;  // sorted by grlex_greater, no zero coefficients
};

using IntPoly = SparsePoly<Integer>;
using FieldPoly = SparsePoly<FieldElem>;

inline IntPoly int_poly_zero(const Vars& vars) { return IntPoly(vars, Integer(1)); }
inline IntPoly int_poly_const(const Vars& vars, const Integer& c) { return IntPoly::constant(vars, Integer(1), c); }
inline IntPoly int_poly_var(const Vars& vars, std::string_view name) { return IntPoly::variable(vars, Integer(1), name); }

/// Divides every coefficient by c exactly; throws NotDivisible naming the offending term.
IntPoly exact_div_int(const IntPoly& p, const Integer& c);

/// Reduces integer coefficients into a field.
FieldPoly reduce_poly(const IntPoly& p, const FieldCtx& f);

}  // namespace f4v
