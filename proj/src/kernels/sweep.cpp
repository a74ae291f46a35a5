#include "f4v/kernels/sweep.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "f4v/reps/basis.hpp"

namespace f4v {

std::uint64_t sweep_size(int m, std::uint32_t p) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < dim(m); ++i) {
    if (n > kSweepLimit) return n;
    n *= p;
  }
  return n;
}

std::vector<std::uint32_t> sweep_vector(int m, std::uint32_t p, std::uint64_t index) {
  std::vector<std::uint32_t> v(dim(m));
  for (auto& x : v) {
    x = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return v;
}

namespace {

constexpr std::size_t kChunk = 4096;

struct Partial {
  std::uint64_t stable = 0;
  std::optional<std::uint64_t> first;
  std::map<std::uint32_t, std::uint64_t> hist;
};

void run_range(const Program& prog, KernelKind kind, std::uint64_t lo, std::uint64_t hi, Partial& part,
               std::vector<std::uint32_t>* values) {
  const std::size_t n = prog.inputs;
  std::vector<std::uint32_t> in(kChunk * n), out(kChunk);
  for (std::uint64_t start = lo; start < hi; start += kChunk) {
    const std::size_t cnt = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, hi - start));
    for (std::size_t j = 0; j < cnt; ++j) {
      std::uint64_t idx = start + j;
      for (std::size_t i = 0; i < n; ++i) {
        in[j * n + i] = static_cast<std::uint32_t>(idx % prog.p);
        idx /= prog.p;
      }
    }
    eval_batch(prog, in.data(), cnt, out.data(), kind);
    for (std::size_t j = 0; j < cnt; ++j) {
      std::uint32_t d = prog.finish(out[j]);
      ++part.hist[d];
      if (d != 0) {
        ++part.stable;
        if (!part.first) part.first = start + j;
      }
      if (values) (*values)[start + j] = d;
    }
  }
}

}  // namespace

SweepResult sweep(int m, std::uint32_t p, const SweepOptions& opt, std::vector<std::uint32_t>* values,
                  const FormulaCatalog& cat) {
  const std::uint64_t total = sweep_size(m, p);
  if (total > kSweepLimit) throw std::length_error("sweep of V_m(F_p) exceeds 2^22 vectors");
  Program prog = compile_delta(m, p, cat);
  KernelKind kind = opt.kernel.value_or(select_kernel(prog));
  if (values) values->assign(total, 0);

  unsigned threads = std::max(1u, opt.threads);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, (total + kChunk - 1) / kChunk));
  std::vector<Partial> parts(threads);
  const std::uint64_t step = (total + threads - 1) / threads;
  if (threads == 1) {
    run_range(prog, kind, 0, total, parts[0], values);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = std::min(total, t * step), hi = std::min(total, lo + step);
      pool.emplace_back(run_range, std::cref(prog), kind, lo, hi, std::ref(parts[t]), values);
    }
    for (auto& th : pool) th.join();
  }

  SweepResult res;
  res.total = total;
  for (const auto& part : parts) {
    res.stable_count += part.stable;
    if (part.first && (!res.first_stable || *part.first < *res.first_stable)) res.first_stable = part.first;
    for (const auto& [k, c] : part.hist) res.histogram[k] += c;
  }
  return res;
}

}  // namespace f4v
