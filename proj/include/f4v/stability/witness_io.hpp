#pragma once

#include <json.hpp>

#include "f4v/stability/stability.hpp"

namespace f4v {

nlohmann::json cocharacter_to_json(const Cocharacter& c);
nlohmann::json witness_to_json(const Witness& w);
/// Inverse of witness_to_json; the field is rebuilt from its name and modulus.
Witness witness_from_json(const nlohmann::json& j);

}  // namespace f4v
