#include "bott/verify.hpp"

#include "bott/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bott {

namespace {

std::string fmt_vec(const Vec3& v) {
  std::ostringstream os;
  os << "(" << v(0) << ", " << v(1) << ", " << v(2) << ")";
  return os.str();
}

Vec3 random_vec(Rng& rng) {
  Vec3 v;
  v << rng.rational(), rng.rational(), rng.rational();
  return v;
}

} // namespace

std::vector<LawFailure> check_laws(const StructureConstants& sc, const Distribution& dist,
                                   Rng& rng, int oracle_vectors) {
  std::vector<LawFailure> failures;
  auto fail = [&](const char* law, const std::string& detail) {
    failures.push_back({law, detail});
  };

  Connection lc = levi_civita(sc);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vec3 torsion = lc.coeffs(i, j) - lc.coeffs(j, i) - sc.bracket_basis(i, j);
      if (!exactly_zero(torsion))
        fail("levi_civita torsion-free",
             "nabla_" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                 " asymmetry differs from the bracket by " + fmt_vec(torsion));
      for (int k = 0; k < 3; ++k) {
        Rational compat =
            metric(lc.coeffs(i, j), basis_vector(k)) + metric(basis_vector(j), lc.coeffs(i, k));
        if (!compat.is_zero())
          fail("levi_civita metric-compatible",
               "(i,j,k)=(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                   std::to_string(k + 1) + ") gives " + compat.to_string());
      }
    }
  }

  Connection bc = bott(sc, dist);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Vec3& value = bc.coeffs(i, j);
      Vec3 bad_part = dist.in_f(j) ? dist.project_fperp(value)
                                   : dist.project_f(value);
      if (!exactly_zero(bad_part))
        fail("bott distribution-respect",
             "nabla_" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                 " leaves its summand: " + fmt_vec(value));
    }
  }

  // projector algebra on a random vector
  {
    Vec3 v = random_vec(rng);
    if (!exactly_equal(Vec3(dist.project_f(v) + dist.project_fperp(v)), v))
      fail("projector sum", "pi_F + pi_Fperp != id at " + fmt_vec(v));
    if (!exactly_zero(dist.project_f(dist.project_fperp(v))))
      fail("projector orthogonality", "pi_F o pi_Fperp != 0 at " + fmt_vec(v));
  }

  CurvatureTensor curv = curvature(bc, sc);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (!exactly_zero(Vec3(curv.r(i, j, k) + curv.r(j, i, k))))
          fail("curvature antisymmetry",
               "R(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")e" +
                   std::to_string(k + 1) + " not antisymmetric in the first pair");

  RicciForm ric = symmetrize(ricci_rho(curv));
  CollineationSystem sys = build_system(ric, sc);

  // direct Lie-derivative evaluation against the assembled system
  for (int t = 0; t < oracle_vectors; ++t) {
    Vec3 v = random_vec(rng);
    RicciForm direct = lie_derivative_ric(ric, sc, v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (direct.m(i, j) != direct.m(j, i))
          fail("lie-derivative symmetry", "asymmetric output at V=" + fmt_vec(v));
    MatX stacked = sys.a * v;
    for (std::size_t row = 0; row < kSystemRows.size(); ++row) {
      auto [i, j] = kSystemRows[row];
      if (stacked(static_cast<Index>(row), 0) != direct.m(i, j))
        fail("system-oracle equivalence",
             "row (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") at V=" +
                 fmt_vec(v) + ": system " + stacked(static_cast<Index>(row), 0).to_string() +
                 " vs direct " + direct.m(i, j).to_string());
    }
  }

  // linearity of the Lie derivative
  {
    Vec3 u = random_vec(rng), v = random_vec(rng);
    Rational a = rng.rational(), b = rng.rational();
    RicciForm lhs = lie_derivative_ric(ric, sc, Vec3(a * u + b * v));
    RicciForm ru = lie_derivative_ric(ric, sc, u);
    RicciForm rv = lie_derivative_ric(ric, sc, v);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (lhs.m(i, j) != a * ru.m(i, j) + b * rv.m(i, j))
          fail("lie-derivative linearity", "at u=" + fmt_vec(u) + ", v=" + fmt_vec(v));
  }

  // kernel exactness and rank-nullity
  SubspaceBasis kernel = nullspace(sys.a);
  if (rank(sys.a) + kernel.dim != 3)
    fail("rank-nullity", "rank " + std::to_string(rank(sys.a)) + " + dim " +
                             std::to_string(kernel.dim) + " != 3");
  for (const Vec3& v : kernel.vectors)
    if (!exactly_zero(MatX(sys.a * v)))
      fail("kernel exactness", "A*v != 0 for basis vector " + fmt_vec(v));

  return failures;
}

namespace {

/// Evaluates one drawn sample against the reference material.
/// Throws DenominatorVanished when a claimed vector is undefined there.
SampleResult eval_sample(const PairCatalog& pc, const TheoremCase* tc, const GroupSpec& spec,
                         Rng& rng) {
  SampleResult out;
  out.params = spec.params;
  ParamValues values = spec.params.values();
  std::string pair_key = group_name(pc.group) + "." + pc.dist.name();

  // claimed basis vectors are evaluated first: a vanishing denominator
  // invalidates the whole sample before any verdict is recorded
  std::vector<Vec3> claimed;
  if (tc) {
    for (const ClaimedVector& cvec : tc->claimed_basis) {
      Vec3 v;
      for (int i = 0; i < 3; ++i) v(i) = cvec[static_cast<std::size_t>(i)].eval(values);
      claimed.push_back(v);
    }
  }

  StructureConstants sc = build_group(spec);
  RicciForm ric = bott_ricci(sc, pc.dist);
  CollineationSystem sys = build_system(ric, sc);

  auto note = [&](std::string key, std::string detail) {
    bool known = is_known_discrepancy(key);
    out.mismatches.push_back({std::move(key), std::move(detail), known});
  };

  // reference Ricci table, entry by entry
  Mat3 ref_ric = pc.ricci.eval(values);
  for (auto [i, j] : kSystemRows) {
    if (ric.m(i, j) != ref_ric(i, j)) {
      out.ricci_ok = false;
      note(pair_key + ".ric(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
           "Ric(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ") at " +
               spec.params.to_string() + ": reference " + ref_ric(i, j).to_string() +
               ", recomputed " + ric.m(i, j).to_string());
    }
  }

  // reference Lie-derivative table, row by row
  MatX ref_lie = pc.lie.eval(values);
  for (std::size_t row = 0; row < kSystemRows.size(); ++row) {
    auto [i, j] = kSystemRows[row];
    bool row_ok = true;
    for (int k = 0; k < 3; ++k)
      if (sys.a(static_cast<Index>(row), k) != ref_lie(static_cast<Index>(row), k)) row_ok = false;
    if (!row_ok) {
      out.lie_ok = false;
      std::ostringstream os;
      os << "(L_V Ric)(e" << i + 1 << ",e" << j + 1 << ") at " << spec.params.to_string()
         << ": reference coefficients [";
      for (int k = 0; k < 3; ++k) os << (k ? ", " : "") << ref_lie(static_cast<Index>(row), k);
      os << "], recomputed [";
      for (int k = 0; k < 3; ++k) os << (k ? ", " : "") << sys.a(static_cast<Index>(row), k);
      os << "]";
      note(pair_key + ".lie(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
           os.str());
    }
  }
  for (const auto& [row, coeffs] : pc.lie_variants) {
    auto [i, j] = kSystemRows[static_cast<std::size_t>(row)];
    bool row_ok = true;
    for (int k = 0; k < 3; ++k)
      if (sys.a(row, k) != coeffs[static_cast<std::size_t>(k)].eval(values)) row_ok = false;
    if (!row_ok) {
      out.lie_ok = false;
      note(pair_key + ".lie(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
           "alternate printed variant of the row also disagrees with recomputation at " +
               spec.params.to_string());
    }
  }

  SubspaceBasis kernel = nullspace(sys.a);
  out.computed_dim = static_cast<int>(kernel.dim);

  if (tc) {
    if (out.computed_dim != tc->claimed_dim) {
      note(tc->id + ".dim", "claimed dimension " + std::to_string(tc->claimed_dim) +
                                ", recomputed " + std::to_string(out.computed_dim) + " at " +
                                spec.params.to_string());
    }
    for (std::size_t vi = 0; vi < claimed.size(); ++vi) {
      MatX residual = sys.a * claimed[vi];
      if (!exactly_zero(residual)) {
        out.membership_ok = false;
        note(tc->id + ".basis", "claimed vector " + fmt_vec(claimed[vi]) + " at " +
                                    spec.params.to_string() +
                                    " does not satisfy the system (A*v != 0)");
      }
    }
    bool span_ok = out.membership_ok &&
                   static_cast<int>(claimed.size()) == out.computed_dim &&
                   linearly_independent(claimed);
    if (tc->claimed_dim != static_cast<int>(claimed.size())) span_ok = false;
    if (!span_ok && out.membership_ok &&
        out.computed_dim == tc->claimed_dim &&
        static_cast<int>(claimed.size()) == tc->claimed_dim && !claimed.empty()) {
      // membership held but the vectors are dependent
      note(tc->id + ".basis", "claimed vectors are linearly dependent at " +
                                  spec.params.to_string());
    }
    out.span_ok = span_ok;
    if (tc->claimed_basis.empty()) out.span_ok = (out.computed_dim == tc->claimed_dim);
  }

  std::vector<LawFailure> law_failures = check_laws(sc, pc.dist, rng);
  out.laws_ok = law_failures.empty();
  for (const LawFailure& lf : law_failures)
    out.mismatches.push_back({pair_key + ".laws", lf.law + ": " + lf.detail, false});

  bool any_unknown = false, any_known = false;
  for (const Mismatch& m : out.mismatches) (m.known ? any_known : any_unknown) = true;
  // a known discrepancy only stands while the independent laws hold
  if (any_known && !out.laws_ok) any_unknown = true;
  out.verdict = any_unknown ? "fail" : (any_known ? "known-discrepancy" : "pass");
  return out;
}

CaseResult run_entry(const PairCatalog& pc, const TheoremCase* tc, const std::string& id,
                     const std::string& kind, std::uint64_t seed, int samples) {
  CaseResult out;
  out.id = id;
  out.group = pc.group;
  out.dist = pc.dist;
  out.kind = kind;
  if (tc) {
    out.condition = tc->condition;
    out.claimed_dim = tc->claimed_dim;
  }

  Rng rng(mix_seed(seed, id));
  ParamRecipe recipe = tc ? tc->recipe : group_recipe(pc.group);
  std::function<bool(const ParamValues&)> accept;
  if (tc && tc->kind == CaseKind::Complement) {
    const auto& reject = tc->reject;
    accept = [&reject](const ParamValues& v) {
      for (const CasePredicate& pred : reject)
        if (pred.holds(v)) return false;
      return true;
    };
  } else if (tc) {
    const CasePredicate& pred = tc->predicate;
    accept = [&pred](const ParamValues& v) { return pred.holds(v); };
  }

  const int max_attempts = samples * 20;
  int attempts = 0;
  while (static_cast<int>(out.samples.size()) < samples && attempts < max_attempts) {
    ++attempts;
    GroupSpec spec;
    try {
      spec = draw_sample(pc.group, recipe, accept, rng);
    } catch (const ExhaustedSampling& e) {
      out.infeasible = true;
      std::string key = id + ".infeasible";
      out.case_mismatches.push_back({key, e.what(), is_known_discrepancy(key)});
      break;
    }
    try {
      out.samples.push_back(eval_sample(pc, tc, spec, rng));
    } catch (const DenominatorVanished&) {
      ++out.denominator_redraws; // reported and redrawn
    }
  }

  bool any_unknown = false, any_known = false;
  for (const Mismatch& m : out.case_mismatches) (m.known ? any_known : any_unknown) = true;
  for (const SampleResult& s : out.samples) {
    if (s.verdict == "fail") any_unknown = true;
    if (s.verdict == "known-discrepancy") any_known = true;
  }
  if (!out.infeasible && static_cast<int>(out.samples.size()) < samples) any_unknown = true;
  out.verdict = any_unknown ? "fail" : (any_known ? "known-discrepancy" : "pass");
  return out;
}

} // namespace

CaseResult verify_case(const TheoremCase& tc, std::uint64_t seed, int samples) {
  const PairCatalog& pc = catalog_pair(tc.group, tc.dist);
  return run_entry(pc, &tc, tc.id,
                   tc.kind == CaseKind::Complement ? "complement" : "case", seed, samples);
}

CaseResult verify_tables(const PairCatalog& pc, std::uint64_t seed, int samples) {
  std::string id = group_name(pc.group) + "." + pc.dist.name() + ".tables";
  return run_entry(pc, nullptr, id, "tables", seed, samples);
}

VerifyReport verify_all(std::uint64_t seed, int samples_per_case,
                        const std::optional<std::vector<std::string>>& case_filter) {
  VerifyReport report;
  report.seed = seed;
  report.samples_per_case = samples_per_case;
  auto wanted = [&](const std::string& id) {
    if (!case_filter) return true;
    return std::find(case_filter->begin(), case_filter->end(), id) != case_filter->end();
  };

  for (const PairCatalog& pc : catalog()) {
    std::string tables_id = group_name(pc.group) + "." + pc.dist.name() + ".tables";
    if (wanted(tables_id)) report.cases.push_back(verify_tables(pc, seed, samples_per_case));
    for (const TheoremCase& tc : pc.cases)
      if (wanted(tc.id)) report.cases.push_back(verify_case(tc, seed, samples_per_case));
  }

  std::sort(report.cases.begin(), report.cases.end(),
            [](const CaseResult& a, const CaseResult& b) { return a.id < b.id; });

  std::vector<std::string> observed;
  for (const CaseResult& cr : report.cases) {
    if (cr.verdict == "pass") ++report.passed;
    else if (cr.verdict == "known-discrepancy") ++report.flagged;
    else ++report.failed;
    for (const SampleResult& s : cr.samples)
      for (const Mismatch& m : s.mismatches)
        if (m.known) observed.push_back(m.key);
    for (const Mismatch& m : cr.case_mismatches)
      if (m.known) observed.push_back(m.key);
  }
  std::sort(observed.begin(), observed.end());
  observed.erase(std::unique(observed.begin(), observed.end()), observed.end());
  report.observed_discrepancies = std::move(observed);
  report.all_pass = report.failed == 0;
  return report;
}

} // namespace bott
