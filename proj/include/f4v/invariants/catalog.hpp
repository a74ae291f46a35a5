#pragma once

#include <array>
#include <string>
#include <vector>

#include "f4v/exactalg/sparse_poly.hpp"

namespace f4v {

/// Transcribed formula tables. Every entry is an integer polynomial; the
/// catalog is a value so tests can inject a corrupted copy.
struct FormulaCatalog {
  Vars cubic_vars;      // A..J of AX^3 + BX^2Y + CX^2Z + DXY^2 + EXYZ + FXZ^2 + GY^3 + HY^2Z + IYZ^2 + JZ^3
  Vars quartic_vars;    // A..E of AX^4 + BX^3Y + CX^2Y^2 + DXY^3 + EY^4
  Vars quadratic_vars;  // A..F of AX^2 + BY^2 + CZ^2 + DXY + EXZ + FYZ

  IntPoly disc2;  // ternary quadratic
  IntPoly disc4;  // binary quartic
  IntPoly S;      // degree-4 invariant of the ternary cubic
  IntPoly T;      // degree-6 invariant of the ternary cubic

  std::array<IntPoly, 10> coeffs3;  // A..J over the m=3 labels
  std::array<IntPoly, 5> coeffs4;   // A..E over the m=4 labels
  std::array<IntPoly, 6> beta;      // β1..β6 over the m=6 labels

  // m=8 factors: Δ8 = (f^2 g disc(F1) res)^2
  IntPoly disc_f1;  // b^2 - 4ac
  IntPoly res_f1f2;  // c d^2 - b d e + a e^2

  /// Source text of every entry, keyed by name, for reports.
  std::vector<std::pair<std::string, std::string>> sources;
};

/// The shipped catalog, parsed once.
const FormulaCatalog& default_catalog();

/// Parses a fresh catalog; `overrides` replaces source strings by name
/// (e.g. {"disc4", "..."}) before parsing.
FormulaCatalog build_catalog(const std::vector<std::pair<std::string, std::string>>& overrides = {});

}  // namespace f4v
