#ifndef BOTT_CATALOG_HPP
#define BOTT_CATALOG_HPP

#include "bott/collineation.hpp"
#include "bott/sampling.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace bott {

/// Reference Ricci table for one (group, distribution) pair: the upper
/// triangle of the symmetric Ric matrix as polynomials in the parameters,
/// row order matching kSystemRows. Recomputation is compared against these
/// entry by entry, exactly.
struct RicciTable {
  std::array<Poly, 6> entries;

  Mat3 eval(const ParamValues& values) const;
};

/// Reference table for the Lie-derivative system: entry (row, k) is the
/// polynomial coefficient of lambda_{k+1} in (L_V Ric)(e_i, e_j) for the row's
/// index pair.
struct LieTable {
  std::array<std::array<Poly, 3>, 6> entries;

  MatX eval(const ParamValues& values) const; // 6x3
};

/// A claimed spanning vector: three rational functions of the parameters.
using ClaimedVector = std::array<RationalFn, 3>;

enum class CaseKind { Theorem, Complement };

/// One region of a classification statement: parameter constraints, a
/// constructive sampling recipe, and the claimed collineation space.
struct TheoremCase {
  std::string id; // e.g. "G2.B1.case3"
  Group group = Group::G1;
  Distribution dist = Distribution::b1();
  CaseKind kind = CaseKind::Theorem;
  std::string condition; // human-readable region description
  CasePredicate predicate;
  ParamRecipe recipe;
  int claimed_dim = 0;
  std::vector<ClaimedVector> claimed_basis;
  /// Complement entries reject these sibling predicates instead of matching
  /// their own (empty) predicate.
  std::vector<CasePredicate> reject;
  /// Set on regions that the reference prints with mutually inconsistent
  /// constraints; the sampler is expected to come up empty there.
  bool expect_infeasible = false;
};

/// Everything the harness knows about one (group, distribution) pair.
struct PairCatalog {
  Group group = Group::G1;
  Distribution dist = Distribution::b1();
  RicciTable ricci;
  LieTable lie;
  /// Alternate printed variants of single Lie-table rows, where the source
  /// tables disagree with themselves: (row index, coefficients).
  std::vector<std::pair<int, std::array<Poly, 3>>> lie_variants;
  std::vector<TheoremCase> cases;
};

/// All 21 pairs, groups G1..G7 by distribution B1, B2, B3.
const std::vector<PairCatalog>& catalog();
const PairCatalog& catalog_pair(Group g, const Distribution& dist);

/// Finds a case by id (e.g. "G4.B2.case5"); nullptr when absent.
const TheoremCase* find_case(const std::string& id);

/// A known, documented disagreement between the reference tables/claims and
/// exact recomputation. Keys are the mismatch keys the verifier emits;
/// `note` records both sides. Mismatches carrying a listed key downgrade
/// from failure to a flagged known discrepancy (the verifier still requires
/// the internal-law checks to pass on the same samples).
struct Discrepancy {
  std::string key;
  std::string note;
};

const std::vector<Discrepancy>& known_discrepancies();
bool is_known_discrepancy(const std::string& key);

} // namespace bott

#endif
