#pragma once

#include <string>

#include <json.hpp>

#include "actions.hpp"
#include "isometry.hpp"
#include "lattice.hpp"
#include "verdict.hpp"

namespace cremona {

/// JSON shapes:
///   LatticeVector  {"r": int, "coords": [int,...]}
///   Isometry       {"r": int, "matrix": [[int,...],...]}
///   ActionSpec     {"r": int, "generators": [matrix,...], "sigma": matrix|null}
///   ClassInvariant {"order", "charpoly": [[d, mult],...], "charpoly_display",
///                   "trace", "eig1_multiplicity", "labels"}
/// Parsers throw std::invalid_argument on malformed input (including the
/// isometry constructor's own validation).

nlohmann::json to_json(const LatticeVector& v);
LatticeVector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Isometry& w);
Isometry isometry_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ActionSpec& spec);
ActionSpec action_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ClassInvariant& inv);

nlohmann::json to_json(const Verdict& v);

}  // namespace cremona
