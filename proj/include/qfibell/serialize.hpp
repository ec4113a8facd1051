#pragma once

#include <json.hpp>

#include "qfibell/symmetric_state.hpp"

namespace qfibell {

// Wire format {n, kind, re[], im[]}, matrices row-major.
// kind is "pure", "mixed" or "operator".
nlohmann::json state_to_json(const SymmetricState& state);
SymmetricState state_from_json(const nlohmann::json& j);

nlohmann::json operator_to_json(const CollectiveOperator& op);
CollectiveOperator operator_from_json(const nlohmann::json& j);

}  // namespace qfibell
