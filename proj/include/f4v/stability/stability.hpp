#pragma once

#include <optional>
#include <stdexcept>

#include "f4v/invariants/delta.hpp"
#include "f4v/reps/basis.hpp"

namespace f4v {

/// Destabilization could not finish within the allowed extension degree.
class ReductionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (e.g. Δ(v) ≠ 0 for destabilize).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// g and λ such that act(g, v) has no negative weights under λ.
struct Witness {
  int m = 0;
  FieldWord word;
  Cocharacter lambda;
  unsigned ext_degree = 1;  // over the field of v
  const FieldCtx* field = nullptr;  // field of the word; v is embedded into it
};

struct StabilityVerdict {
  bool stable = false;
  FieldElem delta_value;
  std::optional<Witness> witness;
};

inline constexpr int kDefaultBox = 4;
inline constexpr unsigned kDefaultMaxExt = 4;

StabilityVerdict is_stable(const FieldVector& v, const FormulaCatalog& cat = default_catalog());

bool no_negative_weights(const FieldVector& v, const Cocharacter& lambda);

/// Labels with negative weight under λ, as a bitmask.
std::uint32_t negative_mask(int m, const Cocharacter& lambda);

/// First nontrivial λ with |s_i| ≤ box, lexicographic in (s1..s4), under
/// which the support of v has no negative weight.
std::optional<Cocharacter> hm_search(int m, std::uint32_t support, int box = kDefaultBox);
std::optional<Cocharacter> hm_search(const FieldVector& v, int box = kDefaultBox);

/// Throws PreconditionError when Δ(v) ≠ 0 and ReductionFailed when no witness
/// is found over extensions of degree ≤ max_ext.
Witness destabilize(const FieldVector& v, unsigned max_ext = kDefaultMaxExt,
                    const FormulaCatalog& cat = default_catalog());

bool verify_witness(const FieldVector& v, const Witness& w);

/// [dual cyclic all-ones stable over F_p] ⟺ [p ∤ 12/m], for m ∈ {3,4,6}.
bool check_conjecture(int m, std::uint32_t p, const FormulaCatalog& cat = default_catalog());

/// Brings v into the field of w (identity if already there).
FieldVector lift_to(const FieldVector& v, const FieldCtx& target);

}  // namespace f4v
