#ifndef BOTT_JSON_IO_HPP
#define BOTT_JSON_IO_HPP

#include "bott/collineation.hpp"
#include "bott/verify.hpp"

#include <json.hpp>

#include <string>

namespace bott {

using json = nlohmann::json;

// Rationals travel as canonical strings ("p/q", or "p" when q = 1).
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

// {"symmetric": bool, "m": [[rational x3] x3]}
json ricci_to_json(const RicciForm& ric);
RicciForm ricci_from_json(const json& j);

// {"gamma": [[[rational x3] x3] x3]}, gamma[i][j][k]
json connection_to_json(const Connection& conn);

// {"dim": n, "basis": [[rational x3] x dim]}
json collineations_to_json(const SubspaceBasis& basis);

// {"group": "G4", "params": {"alpha": "1", ...}}
json group_spec_to_json(const GroupSpec& spec);
GroupSpec group_spec_from_json(const json& j);

/// Custom algebra file: {"c": [[[rational x3] x3] x3]} with c[i][j][k].
/// Enforces antisymmetry and the Jacobi identity on load.
StructureConstants algebra_from_json(const json& j);
json algebra_to_json(const StructureConstants& sc);

json report_to_json(const VerifyReport& report);

/// Human-readable rendering of a verification report.
std::string report_to_table(const VerifyReport& report);

/// Frame-labelled table rendering of a 3x3 form.
std::string matrix_to_table(const Mat3& m, const std::string& title);

} // namespace bott

#endif
