#ifndef BOTT_GROUPS_HPP
#define BOTT_GROUPS_HPP

#include "bott/polynomial.hpp"
#include "bott/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bott {

/// The seven 3-dimensional Lorentzian Lie groups of the catalog.
/// G1..G4 are the unimodular ones, G5..G7 the non-unimodular ones.
enum class Group : int { G1 = 1, G2, G3, G4, G5, G6, G7 };

std::string group_name(Group g);
std::optional<Group> parse_group(const std::string& name);

/// Parameter record for a group. Only the fields a group uses must be set;
/// eta is G4-only and must be +1 or -1 there.
struct Params {
  std::optional<Rational> alpha, beta, gamma, delta, eta;

  /// Values in Var order, absent fields as 0 (groups never read fields they
  /// do not declare, so the padding is inert).
  ParamValues values() const;
  std::string to_string() const;
};

struct GroupSpec {
  Group group = Group::G1;
  Params params;
};

/// Which parameters a group declares, in Var order.
const std::vector<Var>& group_vars(Group g);

/// Checks the group's standing constraints (throws ConstraintViolation with
/// the violated constraint and the evaluated values) and returns the
/// structure constants of the printed bracket table. A Jacobi failure here
/// would mean a catalog bug and throws JacobiFailure.
StructureConstants build_group(const GroupSpec& spec);

/// Constraint check only (same validation as build_group, no construction).
void validate_spec(const GroupSpec& spec);

} // namespace bott

#endif
