#ifndef BOTT_VERIFY_HPP
#define BOTT_VERIFY_HPP

#include "bott/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bott {

/// One disagreement between recomputation and the reference material,
/// carrying both values. `known` marks keys present in the shipped
/// discrepancy list.
struct Mismatch {
  std::string key;
  std::string detail;
  bool known = false;
};

/// A failed internal consistency law (these are independent of the
/// reference tables and must never fail).
struct LawFailure {
  std::string law;
  std::string detail;
};

/// Runs the reference-independent law suite on one algebra/distribution:
/// Levi-Civita torsion-freeness and metric compatibility, Bott
/// distribution-respect, curvature antisymmetry, Lie-derivative symmetry and
/// linearity, equivalence of the assembled system with direct Lie-derivative
/// evaluation at `oracle_vectors` random vectors, kernel exactness, and
/// rank-nullity. Empty result means every law holds exactly.
std::vector<LawFailure> check_laws(const StructureConstants& sc, const Distribution& dist,
                                   Rng& rng, int oracle_vectors = 10);

struct SampleResult {
  Params params;
  int computed_dim = 0;
  bool membership_ok = true;
  bool span_ok = true;
  bool ricci_ok = true;
  bool lie_ok = true;
  bool laws_ok = true;
  std::vector<Mismatch> mismatches;
  std::string verdict; // "pass" | "known-discrepancy" | "fail"
};

struct CaseResult {
  std::string id;
  Group group = Group::G1;
  Distribution dist = Distribution::b1();
  std::string kind; // "case" | "complement" | "tables"
  std::string condition;
  int claimed_dim = -1; // -1 when the entry makes no dimension claim
  bool infeasible = false;
  int denominator_redraws = 0;
  std::vector<SampleResult> samples;
  std::vector<Mismatch> case_mismatches; // e.g. sampler exhaustion
  std::string verdict;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int samples_per_case = 0;
  std::vector<CaseResult> cases;
  int passed = 0, flagged = 0, failed = 0;
  bool all_pass = false; // no entry with verdict "fail"
  std::vector<std::string> observed_discrepancies;
};

/// Verifies one catalog case (dimension, claimed basis membership and span,
/// reference-table agreement, internal laws) at `samples` parameter draws.
CaseResult verify_case(const TheoremCase& tc, std::uint64_t seed, int samples);

/// Per-pair reference-table check over the group's whole region.
CaseResult verify_tables(const PairCatalog& pc, std::uint64_t seed, int samples);

/// Runs every catalog entry (21 table entries + every classification case
/// and complement region). A present `case_filter` restricts the run to the
/// listed ids (an empty list runs nothing). Output ordering is by id,
/// independent of scheduling.
VerifyReport verify_all(std::uint64_t seed, int samples_per_case,
                        const std::optional<std::vector<std::string>>& case_filter = std::nullopt);

} // namespace bott

#endif
