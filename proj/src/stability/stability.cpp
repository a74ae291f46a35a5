#include "f4v/stability/stability.hpp"

#include <map>
#include <mutex>

namespace f4v {

namespace {

struct BoxEntry {
  Cocharacter lambda;
  std::uint32_t negmask;
};

const std::vector<BoxEntry>& box_table(int m, int box) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<BoxEntry>> cache;
  std::lock_guard lock(mu);
  auto [it, fresh] = cache.try_emplace({m, box});
  if (fresh) {
    const Frame frame = frame_for(m);
    for (int s1 = -box; s1 <= box; ++s1)
      for (int s2 = -box; s2 <= box; ++s2)
        for (int s3 = -box; s3 <= box; ++s3)
          for (int s4 = -box; s4 <= box; ++s4) {
            Cocharacter c{frame, {s1, s2, s3, s4}};
            if (c.trivial()) continue;
            it->second.push_back({c, negative_mask(m, c)});
          }
  }
  return it->second;
}

const FieldCtx& field_of(const FieldVector& v) {
  if (v.entries.empty()) throw std::invalid_argument("empty vector");
  return v.entries.front().field();
}

}  // namespace

std::uint32_t negative_mask(int m, const Cocharacter& lambda) {
  auto w = cochar_weights(m, lambda);
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) mask |= 1u << i;
  }
  return mask;
}

bool no_negative_weights(const FieldVector& v, const Cocharacter& lambda) {
  return (support_mask(v) & negative_mask(v.m, lambda)) == 0;
}

std::optional<Cocharacter> hm_search(int m, std::uint32_t support, int box) {
  if (box < 1) throw std::invalid_argument("box must be at least 1");
  for (const auto& e : box_table(m, box)) {
    if ((support & e.negmask) == 0) return e.lambda;
  }
  return std::nullopt;
}

std::optional<Cocharacter> hm_search(const FieldVector& v, int box) { return hm_search(v.m, support_mask(v), box); }

StabilityVerdict is_stable(const FieldVector& v, const FormulaCatalog& cat) {
  StabilityVerdict out;
  out.delta_value = delta(v, cat);
  out.stable = !out.delta_value.is_zero();
  return out;
}

FieldVector lift_to(const FieldVector& v, const FieldCtx& target) {
  const FieldCtx& src = field_of(v);
  if (&src == &target) return v;
  return embed_vector(v, FieldEmbedding(src, target));
}

bool verify_witness(const FieldVector& v, const Witness& w) {
  if (w.m != v.m || w.lambda.trivial()) return false;
  if (w.lambda.frame != frame_for(v.m)) return false;
  const FieldCtx& target = w.field ? *w.field : field_of(v);
  FieldVector moved = act(w.word, lift_to(v, target));
  return no_negative_weights(moved, w.lambda);
}

bool check_conjecture(int m, std::uint32_t p, const FormulaCatalog& cat) {
  if (m != 3 && m != 4 && m != 6) throw std::invalid_argument("check_conjecture covers m ∈ {3,4,6}");
  const FieldCtx& f = FieldCtx::prime(p);
  const FieldElem one = FieldElem::one(f);
  FieldVector v = dual_cyclic<FieldElem>(m, {one, one, one, one, one});
  const bool stable = is_stable(v, cat).stable;
  const bool coprime = (12 / m) % static_cast<int>(p) != 0;
  return stable == coprime;
}

}  // namespace f4v
