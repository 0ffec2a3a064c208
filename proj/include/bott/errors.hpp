#ifndef BOTT_ERRORS_HPP
#define BOTT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bott {

/// A group parameter set violates one of the catalog's constraints.
/// The message names the constraint and carries the offending values.
struct ConstraintViolation : std::runtime_error {
  std::string constraint;
  ConstraintViolation(std::string constraint_, const std::string& detail)
      : std::runtime_error("constraint violated: " + constraint_ + " (" + detail + ")"),
        constraint(std::move(constraint_)) {}
};

/// Structure constants that fail the Jacobi identity. Unreachable for valid
/// catalog specs; reaching it signals a catalog bug or bad custom input.
struct JacobiFailure : std::runtime_error {
  explicit JacobiFailure(const std::string& detail)
      : std::runtime_error("Jacobi identity fails: " + detail) {}
};

/// Bounded rejection sampling found no admissible parameter set, which means
/// the requested region is infeasible (or mis-encoded as measure zero).
struct ExhaustedSampling : std::runtime_error {
  explicit ExhaustedSampling(const std::string& detail)
      : std::runtime_error("sampling exhausted: " + detail) {}
};

/// A claimed basis vector's denominator vanished at a sample point.
struct DenominatorVanished : std::runtime_error {
  explicit DenominatorVanished(const std::string& detail)
      : std::runtime_error("denominator vanished: " + detail) {}
};

} // namespace bott

#endif
