#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "f4v/kernels/kernels.hpp"

namespace f4v {

inline constexpr std::uint64_t kSweepLimit = std::uint64_t{1} << 22;

/// Vector number `index` of V_m(F_p): label i gets digit i of index in base p.
std::vector<std::uint32_t> sweep_vector(int m, std::uint32_t p, std::uint64_t index);
std::uint64_t sweep_size(int m, std::uint32_t p);

struct SweepResult {
  std::uint64_t total = 0;
  std::uint64_t stable_count = 0;
  std::optional<std::uint64_t> first_stable;
  std::map<std::uint32_t, std::uint64_t> histogram;  // Δ mod p -> count
};

struct SweepOptions {
  unsigned threads = 1;
  std::optional<KernelKind> kernel;  // default: select_kernel
  bool keep_values = false;
};

/// Exhaustive Δ_m over V_m(F_p); throws std::length_error beyond kSweepLimit.
SweepResult sweep(int m, std::uint32_t p, const SweepOptions& opt = {}, std::vector<std::uint32_t>* values = nullptr,
                  const FormulaCatalog& cat = default_catalog());

}  // namespace f4v
