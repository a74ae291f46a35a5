#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "f4v/exactalg/field.hpp"
#include "f4v/harness/checks.hpp"
#include "f4v/rootsys/roots.hpp"

namespace f4v {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitParse = 2, kExitPrecondition = 3 };

/// Coefficient domain named on the command line:
///   Z | sym | Fp:<p> | Fpk:<p>,<k> | F<p> | F<p>^<k>
struct FieldSpec {
  enum class Kind { Integers, Finite, Symbolic };
  Kind kind = Kind::Integers;
  const FieldCtx* field = nullptr;
};

FieldSpec parse_field_spec(std::string_view text);

/// λ as four integers, "0,1,0,0" or "(0,1,0,0)".
Cocharacter parse_lambda(std::string_view text, int m);

struct GlobalOptions {
  unsigned threads = 1;
  std::uint64_t seed = 1;
  unsigned cases = 100;
};

// Each command writes JSON to `out`, diagnostics to `err`, and returns an ExitCode.
// Vector specs are the text grammar of parse_field_vector, or the keywords
// "dual-cyclic" (constants 1, or symbols in sym mode) and "generic" (sym only).
int cmd_delta(int m, const std::string& vec, const std::string& field, std::ostream& out, std::ostream& err);
int cmd_enumerate(int m, std::uint32_t p, unsigned k, bool histogram, const GlobalOptions& g, std::ostream& out,
                  std::ostream& err);
int cmd_destabilize(int m, const std::string& vec, const std::string& field, unsigned max_ext, std::ostream& out,
                    std::ostream& err);
int cmd_weights(int m, const std::string& lambda, std::ostream& out, std::ostream& err);
/// One JSON line per check, then a summary on `err`.
int cmd_verify_paper(const std::vector<std::string>& only, const GlobalOptions& g, std::ostream& out, std::ostream& err,
                     const FormulaCatalog* catalog = nullptr);

}  // namespace f4v
