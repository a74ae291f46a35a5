#pragma once

#include <string>
#include <string_view>

#include "f4v/reps/basis.hpp"

namespace f4v {

/// Vector text format:
///
///   vector     := [ "m=" int ";" ] assignment { "," assignment }
///   assignment := label "=" value
///   value      := integer | field-poly      (polynomial in x, e.g. "x+1", extension fields only)
///
/// Omitted labels are 0. Whitespace is ignored. The leading "m=" clause must
/// agree with `m` when both are given.
FieldVector parse_field_vector(std::string_view text, int m, const FieldCtx& f);
IntVector parse_int_vector(std::string_view text, int m);
/// Values are integer polynomials in the basis letters of V_m.
SymVector parse_sym_vector(std::string_view text, int m);

/// "a=1, b=0, ..." listing every label.
template <class T>
std::string format_vector(const VmVector<T>& v);

/// Field element from "3", "-1", "x^2+1".
FieldElem parse_field_value(std::string_view text, const FieldCtx& f);

}  // namespace f4v
