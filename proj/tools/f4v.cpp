// Command-line front end: delta, enumerate, destabilize, weights, verify-paper.
#include <CLI11.hpp>

#include <iostream>

#include "f4v/harness/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Invariants and stability for the F4 Vinberg gradings"};
  app.require_subcommand(1);

  f4v::GlobalOptions global;
  app.add_option("--threads", global.threads, "worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", global.seed, "seed for randomized suites");
  app.add_option("--cases", global.cases, "cases per randomized property")->check(CLI::PositiveNumber);

  int m = 0;
  std::string vec, field = "Z", lambda;
  auto add_m = [&](CLI::App* sub) { sub->add_option("--m", m, "grading: 3, 4, 6, 8 or 12")->required(); };

  auto* delta = app.add_subcommand("delta", "evaluate the invariant on a vector");
  add_m(delta);
  delta->add_option("--vec", vec, "label=value list, 'dual-cyclic' or 'generic'")->required();
  delta->add_option("--field", field, "Z, sym, Fp:<p>, Fpk:<p>,<k>, F<p>, F<p>^<k>");

  std::uint32_t p = 0;
  unsigned k = 1;
  bool histogram = false;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive sweep of V_m over a finite field");
  add_m(enumerate);
  enumerate->add_option("--p", p, "characteristic")->required();
  enumerate->add_option("--k", k, "extension degree");
  enumerate->add_flag("--histogram", histogram, "include counts per invariant value");

  unsigned max_ext = 4;
  auto* destab = app.add_subcommand("destabilize", "construct a Hilbert-Mumford witness");
  add_m(destab);
  destab->add_option("--vec", vec, "label=value list or 'dual-cyclic'")->required();
  destab->add_option("--field", field, "finite field spec")->required();
  destab->add_option("--max-ext", max_ext, "largest extension degree to try");

  auto* weights = app.add_subcommand("weights", "torus weights of the basis under a cocharacter");
  add_m(weights);
  weights->add_option("--lambda", lambda, "s1,s2,s3,s4")->required();

  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify-paper", "run the acceptance checks, one JSON line each");
  verify->add_option("--only", only, "check id prefixes or criterion numbers")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : f4v::kExitParse;
  }

  if (*delta) return f4v::cmd_delta(m, vec, field, std::cout, std::cerr);
  if (*enumerate) return f4v::cmd_enumerate(m, p, k, histogram, global, std::cout, std::cerr);
  if (*destab) return f4v::cmd_destabilize(m, vec, field, max_ext, std::cout, std::cerr);
  if (*weights) return f4v::cmd_weights(m, lambda, std::cout, std::cerr);
  return f4v::cmd_verify_paper(only, global, std::cout, std::cerr);
}
