#include "f4v/stability/witness_io.hpp"

#include "f4v/reps/vector_io.hpp"

namespace f4v {

using nlohmann::json;

namespace {

json field_to_json(const FieldCtx& f) {
  return {{"name", f.name()}, {"p", f.characteristic()}, {"k", f.degree()}, {"modulus", f.modulus()}};
}

const FieldCtx& field_from_json(const json& j) {
  const auto p = j.at("p").get<std::uint32_t>();
  if (j.at("k").get<std::uint32_t>() == 1) return FieldCtx::prime(p);
  return FieldCtx::with_modulus(p, j.at("modulus").get<std::vector<std::uint32_t>>());
}

Cocharacter cocharacter_from_json(const json& j) {
  Cocharacter c;
  c.frame = j.at("frame").get<std::string>() == "diag" ? Frame::Diag : Frame::Omega;
  c.s = j.at("s").get<std::array<int, 4>>();
  return c;
}

}  // namespace

json cocharacter_to_json(const Cocharacter& c) {
  return {{"frame", c.frame == Frame::Diag ? "diag" : "omega"}, {"s", c.s}};
}

json witness_to_json(const Witness& w) {
  const auto& vars = model_vars(w.m);
  json word = json::array();
  for (const auto& gen : w.word.gens) {
    std::visit(
        [&](const auto& g) {
          using G = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<G, Unipotent<FieldElem>>) {
            word.push_back({{"gen", "unipotent"}, {"from", vars[g.from]}, {"to", vars[g.to]}, {"x", g.x.to_string()}});
          } else if constexpr (std::is_same_v<G, WeylSwap>) {
            word.push_back({{"gen", "weyl"}, {"i", vars[g.i]}, {"j", vars[g.j]}});
          } else {
            word.push_back({{"gen", "torus"}, {"lambda", cocharacter_to_json(g.lambda)}, {"t", g.t.to_string()}});
          }
        },
        gen);
  }
  json out = {{"m", w.m}, {"lambda", cocharacter_to_json(w.lambda)}, {"ext_degree", w.ext_degree}, {"word", word}};
  if (w.field) out["field"] = field_to_json(*w.field);
  return out;
}

Witness witness_from_json(const json& j) {
  Witness w;
  w.m = j.at("m").get<int>();
  w.lambda = cocharacter_from_json(j.at("lambda"));
  w.ext_degree = j.value("ext_degree", 1u);
  if (!j.contains("field")) {
    if (!j.at("word").empty()) throw std::invalid_argument("witness with generators needs a field");
    return w;
  }
  const FieldCtx& f = field_from_json(j.at("field"));
  w.field = &f;
  for (const auto& g : j.at("word")) {
    const auto kind = g.at("gen").get<std::string>();
    auto var = [&](const char* key) { return static_cast<int>(model_var_index(w.m, g.at(key).get<std::string>())); };
    if (kind == "unipotent") {
      w.word.gens.push_back(Unipotent<FieldElem>{var("from"), var("to"), parse_field_value(g.at("x").get<std::string>(), f)});
    } else if (kind == "weyl") {
      w.word.gens.push_back(WeylSwap{var("i"), var("j")});
    } else if (kind == "torus") {
      w.word.gens.push_back(
          TorusScale<FieldElem>{cocharacter_from_json(g.at("lambda")), parse_field_value(g.at("t").get<std::string>(), f)});
    } else {
      throw std::invalid_argument("unknown generator '" + kind + "'");
    }
  }
  return w;
}

}  // namespace f4v
