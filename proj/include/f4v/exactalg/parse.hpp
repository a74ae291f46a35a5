#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "f4v/exactalg/sparse_poly.hpp"

namespace f4v {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Parses an integer polynomial over `vars`.
///
/// Grammar: sums and differences of products; factors are integers,
/// variables, parenthesized expressions, each optionally raised to `^n`.
/// Products may be written with `*` or by juxtaposition ("4 a d g", "2gjk").
/// A variable token is one letter followed by optional digits ("c1"), so
/// "ik" reads as i*k.
IntPoly parse_poly(std::string_view text, const Vars& vars);

}  // namespace f4v
