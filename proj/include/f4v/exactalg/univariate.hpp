#pragma once

#include <vector>

#include "f4v/exactalg/sparse_poly.hpp"

namespace f4v {

struct FieldRoot {
  FieldElem root;
  const FieldCtx* field;  // minimal field of the root among those searched
};

/// All roots of a univariate f over F_{p^k} lying in F_{p^{k e}}, e <= max_ext_degree,
/// by exhaustive evaluation. Each root appears once, in its smallest extension.
std::vector<FieldRoot> univariate_roots(const FieldPoly& f, const FieldCtx& base, unsigned max_ext_degree);

/// Evaluates a univariate polynomial given by low-to-high coefficients.
FieldElem horner(const std::vector<FieldElem>& coeffs, const FieldElem& x);

}  // namespace f4v
