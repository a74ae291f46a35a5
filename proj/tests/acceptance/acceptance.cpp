// Runs every acceptance criterion and prints one line per criterion.
#include <CLI11.hpp>

#include <iostream>

#include "f4v/harness/checks.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  f4v::CheckOptions opt;
  app.add_option("--threads", opt.threads);
  app.add_option("--seed", opt.seed);
  app.add_option("--cases", opt.cases);
  app.add_option("--only", opt.only)->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  f4v::run_checks(opt, [&](const f4v::CheckReport& r) {
    const bool pass = r.status == f4v::CheckStatus::Pass;
    failed += !pass;
    std::cout << "criterion " << r.criterion << " " << r.check_id << ": " << (pass ? "PASS" : "FAIL") << " ("
              << r.runtime_ms << " ms)";
    if (!pass) std::cout << " expected [" << r.expected << "] actual [" << r.actual << "]";
    std::cout << std::endl;
  });
  std::cout << (failed ? "FAILED: " + std::to_string(failed) + " criteria" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
