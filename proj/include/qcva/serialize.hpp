#pragma once

#include <string>

#include "json.hpp"
#include "qcva/checks.hpp"
#include "qcva/module_spec.hpp"
#include "qcva/rat_matrix.hpp"
#include "qcva/sparse.hpp"

namespace qcva {

// JSON wire formats. Rationals are strings "num/den" (den omitted when 1);
// states are arrays of {"mono": [[i,j,n],...], "top": t, "coeff": "num/den"}
// in canonical key order. All from_json functions throw std::invalid_argument
// on malformed input.

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const FockState& s);
nlohmann::json to_json(const ModuleState& s);
FockState fock_state_from_json(const nlohmann::json& j);
ModuleState module_state_from_json(const nlohmann::json& j);

/// {"kind": "adjoint"|"evaluation", "d", "l", "c", "lambda": [...], "H": [matrix...]}
nlohmann::json to_json(const ModuleSpec& spec);
ModuleSpec module_spec_from_json(const nlohmann::json& j);

/// {"identity", "params", "states_checked", "configs_checked", "configs_skipped",
///  "defect_zero", "max_abs_defect", "counterexample": {...} | null}
nlohmann::json to_json(const CheckReport& r);
CheckReport check_report_from_json(const nlohmann::json& j);

}  // namespace qcva
