#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "f4v/exactalg/sparse_poly.hpp"
#include "f4v/rootsys/roots.hpp"

namespace f4v {

/// Basis vector of V_m: its coefficient letter and the tensor monomial it
/// multiplies in the model polynomial ring of the grading.
struct BasisLabel {
  int m = 0;
  std::string name;
  std::string monomial;                 // e.g. "X*T^2"
  std::array<std::uint8_t, 6> exps{};   // exponents over model_vars(m)
};

bool supported_m(int m);
const std::vector<BasisLabel>& basis(int m);
std::size_t dim(int m);
/// Index of a label letter, throws for unknown letters.
std::size_t label_index(int m, std::string_view name);
/// Variables of the model polynomial ring (X, Y, Z, T, U, W, ...).
const std::vector<std::string>& model_vars(int m);
std::size_t model_var_index(int m, std::string_view name);
/// Blocks of model variables acted on by the SL factors.
const std::vector<std::vector<int>>& sl_blocks(int m);
/// Shared variable list whose names are the basis letters.
const Vars& label_vars(int m);

template <class T>
struct VmVector {
  int m = 0;
  std::vector<T> entries;

  const T& operator[](std::size_t i) const { return entries[i]; }
  T& operator[](std::size_t i) { return entries[i]; }
  const T& at(std::string_view label) const { return entries[label_index(m, label)]; }
  T& at(std::string_view label) { return entries[label_index(m, label)]; }
  bool operator==(const VmVector& o) const { return m == o.m && entries == o.entries; }
};

using FieldVector = VmVector<FieldElem>;
using IntVector = VmVector<Integer>;
using SymVector = VmVector<IntPoly>;

// Scalars of the entry ring, built from a prototype entry carrying its context.
inline Integer scalar_like(const Integer&, long n) { return Integer(n); }
inline FieldElem scalar_like(const FieldElem& u, long n) { return FieldElem::from_int(u.field(), n); }
template <class C>
SparsePoly<C> scalar_like(const SparsePoly<C>& u, long n) {
  return SparsePoly<C>::constant(u.vars(), u.unit(), from_integer_like(u.unit(), Integer(n)));
}
template <class C>
bool is_zero(const SparsePoly<C>& p) {
  return p.is_zero();
}

template <class T>
VmVector<T> zero_vector(int m, const T& proto) {
  return {m, std::vector<T>(dim(m), scalar_like(proto, 0))};
}

/// Entries = the basis letters themselves, as integer polynomials.
SymVector generic_vector(int m);

/// Dual cyclic pattern with the given 5 constants (m ∈ {3,4,6,12}).
/// Labels, in constant order: m=3 a,e,h,l,p; m=4 a,d,j,k,m; m=6 b,j,e,g,r; m=12 c1..c5.
template <class T>
VmVector<T> dual_cyclic(int m, const std::array<T, 5>& c);
const std::array<std::string, 5>& dual_cyclic_labels(int m);

FieldVector reduce_vector(const IntVector& v, const FieldCtx& f);
FieldVector embed_vector(const FieldVector& v, const FieldEmbedding& e);

/// Indices of labels with nonzero entries, as a bitmask.
template <class T>
std::uint32_t support_mask(const VmVector<T>& v) {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (!is_zero(v.entries[i])) mask |= 1u << i;
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Group generators acting on the model polynomial.

/// Substitution var[to] ↦ var[to] + x·var[from], both in one SL block.
template <class T>
struct Unipotent {
  int from = 0;
  int to = 0;
  T x;
};

/// var[i] ↦ var[j], var[j] ↦ -var[i]; inverse is WeylSwap{j, i}.
struct WeylSwap {
  int i = 0;
  int j = 0;
};

/// Scales each label by t^weight(λ).
template <class T>
struct TorusScale {
  Cocharacter lambda;
  T t;
};

template <class T>
using Generator = std::variant<Unipotent<T>, WeylSwap, TorusScale<T>>;

template <class T>
struct GroupWord {
  std::vector<Generator<T>> gens;  // applied left to right
  GroupWord inverse() const;
  bool empty() const { return gens.empty(); }
};

using FieldWord = GroupWord<FieldElem>;

template <class T>
VmVector<T> apply_unipotent(const VmVector<T>& v, int from, int to, const T& x);
template <class T>
VmVector<T> apply_weyl(const VmVector<T>& v, int i, int j);
VmVector<FieldElem> apply_torus(const VmVector<FieldElem>& v, const Cocharacter& lambda, const FieldElem& t);

FieldVector act(const FieldWord& g, const FieldVector& v);
FieldWord embed_word(const FieldWord& g, const FieldEmbedding& e);

}  // namespace f4v
