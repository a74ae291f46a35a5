#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "f4v/invariants/catalog.hpp"

namespace f4v {

enum class CheckStatus { Pass, Fail, Skipped };

std::string status_name(CheckStatus s);

/// `source` says where the expected value comes from: "stated" (a published
/// closed form), "derived" (an independent computation) or "trivial".
struct CheckReport {
  std::string check_id;
  int criterion = 0;
  CheckStatus status = CheckStatus::Skipped;
  std::string expected;
  std::string source;
  std::string actual;
  std::int64_t runtime_ms = 0;
};

struct CheckInfo {
  int criterion;
  std::string id;
  std::string title;
};

struct CheckOptions {
  std::vector<std::string> only;  // id prefixes; empty runs everything
  std::uint64_t seed = 1;
  unsigned cases = 100;
  unsigned threads = 1;
  const FormulaCatalog* catalog = nullptr;  // default_catalog() when null
};

const std::vector<CheckInfo>& check_list();

bool selected(const CheckInfo& info, const std::vector<std::string>& only);

/// Runs the selected checks in criterion order, reporting each as it finishes.
std::vector<CheckReport> run_checks(const CheckOptions& opt,
                                    const std::function<void(const CheckReport&)>& on_report = {});

nlohmann::ordered_json report_to_json(const CheckReport& r);

}  // namespace f4v
