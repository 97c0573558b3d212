#pragma once

#include <string>

#include "quadcoh/states/state_model.hpp"

namespace quadcoh {

// State specification documents: a JSON object with
//   "type": "gaussian" | "thermal" | "fock_vector" | "fock_matrix" | "product"
// and the family fields ("x_mean", "y_mean", "delta_x", "n_mean",
// "coefficients" as [re, im] pairs, "entries" as a matrix of [re, im] pairs,
// "factors" as nested specs). Unknown fields are rejected.
// Throws ParseError on malformed documents; family invariants are enforced
// by StateModel construction.
StateModel parse_state_spec(const std::string& json_text);

StateModel load_state_spec(const std::string& path);

}  // namespace quadcoh
