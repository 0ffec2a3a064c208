// Acceptance suite: runs every catalog-level criterion at its stated
// strength and prints one PASS/FAIL line per criterion. Exact arithmetic
// throughout; every comparison is equality, never a tolerance.

#include "bott/json_io.hpp"
#include "bott/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace bott;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kSamplesPerCase = 20;

bool key_matches(const std::string& key, const std::string& infix) {
  return key.find(infix) != std::string::npos;
}

/// Mismatches of the given kinds must all be known discrepancies, and the
/// law suite must hold on every affected sample.
bool check_report_category(const VerifyReport& report, const std::vector<std::string>& infixes,
                           std::ostream& log) {
  bool ok = true;
  for (const CaseResult& cr : report.cases) {
    auto scan = [&](const Mismatch& m, bool laws_ok) {
      bool relevant = false;
      for (const std::string& infix : infixes)
        if (key_matches(m.key, infix)) relevant = true;
      if (!relevant) return;
      if (!m.known) {
        log << "      unlisted mismatch " << m.key << ": " << m.detail << "\n";
        ok = false;
      } else if (!laws_ok) {
        log << "      " << m.key << " flagged but the law suite failed on that sample\n";
        ok = false;
      }
    };
    for (const SampleResult& s : cr.samples)
      for (const Mismatch& m : s.mismatches) scan(m, s.laws_ok);
    for (const Mismatch& m : cr.case_mismatches) scan(m, true);
  }
  return ok;
}

int count_entries(const VerifyReport& report, const std::string& kind) {
  int n = 0;
  for (const CaseResult& cr : report.cases)
    if (cr.kind == kind) ++n;
  return n;
}

} // namespace

int main() {
  auto started = std::chrono::steady_clock::now();
  std::cout << "acceptance suite: seed " << kSeed << ", " << kSamplesPerCase
            << " samples per case, exact comparisons\n";

  VerifyReport report = verify_all(kSeed, kSamplesPerCase);

  struct Criterion {
    std::string description;
    std::function<bool(std::ostream&)> run;
  };

  std::vector<Criterion> criteria;

  // 1. Reference-table reproduction for all 21 pairs: recomputed Ric (and the
  //    Lie-derivative tables) equal the reference polynomials entry by entry;
  //    disagreements must be listed in the shipped discrepancy log and the
  //    independent laws must hold on the same samples.
  criteria.push_back(
      {"reference Ricci/Lie tables reproduced exactly on 21 pairs x " +
           std::to_string(kSamplesPerCase) + " samples (mismatches all logged)",
       [&](std::ostream& log) {
         if (count_entries(report, "tables") != 21) {
           log << "      expected 21 table entries\n";
           return false;
         }
         for (const CaseResult& cr : report.cases) {
           if (cr.kind == "tables" && static_cast<int>(cr.samples.size()) != kSamplesPerCase) {
             log << "      " << cr.id << " ran " << cr.samples.size() << " samples\n";
             return false;
           }
         }
         return check_report_category(report, {".ric(", ".lie("}, log);
       }});

  // 2. Classification dimension checks: every enumerated case and every
  //    complement region of an exhaustive classification has the claimed
  //    kernel dimension at every sample; disagreements must be logged.
  criteria.push_back(
      {"kernel dimensions match the classification on every case and complement region",
       [&](std::ostream& log) {
         bool ok = check_report_category(report, {".dim", ".infeasible"}, log);
         for (const CaseResult& cr : report.cases) {
           if (cr.kind == "tables" || cr.infeasible) continue;
           if (static_cast<int>(cr.samples.size()) != kSamplesPerCase) {
             log << "      " << cr.id << " ran only " << cr.samples.size() << " samples\n";
             ok = false;
           }
         }
         // headline claims, pinned: nothing on G1 for the first two
         // distributions, everything on G5/B1, G6/B3, G7/B3, and the
         // beta = 0 split on G1/B3
         const std::pair<const char*, int> headline[] = {
             {"G1.B1.main", 0},  {"G1.B2.main", 0},       {"G1.B3.main", 3},
             {"G1.B3.complement", 0}, {"G5.B1.main", 3},  {"G6.B3.main", 3},
             {"G7.B3.main", 3}};
         for (const auto& [id, dim] : headline) {
           bool found = false;
           for (const CaseResult& cr : report.cases) {
             if (cr.id != id) continue;
             found = true;
             if (cr.claimed_dim != dim) {
               log << "      " << id << " claims dim " << cr.claimed_dim << ", expected " << dim
                   << "\n";
               ok = false;
             }
             for (const SampleResult& s : cr.samples)
               if (s.computed_dim != dim) {
                 log << "      " << id << " computed dim " << s.computed_dim << " at "
                     << s.params.to_string() << "\n";
                 ok = false;
               }
           }
           if (!found) {
             log << "      missing catalog entry " << id << "\n";
             ok = false;
           }
         }
         return ok;
       }});

  // 3. Claimed spanning vectors: membership (A*v = 0 exactly) and span
  //    equality at every sample; failures must be logged with the
  //    recomputed basis available in the report.
  criteria.push_back({"claimed spanning vectors satisfy the systems and span the kernels",
                      [&](std::ostream& log) {
                        return check_report_category(report, {".basis"}, log);
                      }});

  // 4. Internal-law suite, independent of the reference tables: zero
  //    failures allowed anywhere.
  criteria.push_back(
      {"internal laws hold exactly (torsion, compatibility, splitting, antisymmetry, "
       "Lie-derivative laws, system oracle at 10 vectors, kernel exactness, rank-nullity)",
       [&](std::ostream& log) {
         bool ok = true;
         for (int gi = 1; gi <= 7; ++gi) {
           Group g = static_cast<Group>(gi);
           for (Distribution dist :
                {Distribution::b1(), Distribution::b2(), Distribution::b3()}) {
             std::string label = group_name(g) + "." + dist.name();
             Rng rng(mix_seed(kSeed, "laws." + label));
             std::vector<GroupSpec> specs =
                 sample_group(g, mix_seed(kSeed, "laws.params." + label), kSamplesPerCase);
             for (const GroupSpec& spec : specs) {
               std::vector<LawFailure> failures =
                   check_laws(build_group(spec), dist, rng, 10);
               for (const LawFailure& f : failures) {
                 log << "      " << label << " at " << spec.params.to_string() << ": " << f.law
                     << " (" << f.detail << ")\n";
                 ok = false;
               }
             }
           }
         }
         // every sample inside the report also ran the same suite
         for (const CaseResult& cr : report.cases)
           for (const SampleResult& s : cr.samples)
             if (!s.laws_ok) {
               log << "      law failure inside " << cr.id << "\n";
               ok = false;
             }
         return ok;
       }});

  // 5. Scale invariance for the groups with homogeneous bracket tables.
  criteria.push_back(
      {"collineation spaces are invariant under parameter scaling by 2, -1, 1/3",
       [&](std::ostream& log) {
         const Rational factors[] = {Rational(2), Rational(-1), Rational(1, 3)};
         bool ok = true;
         for (Group g :
              {Group::G1, Group::G2, Group::G3, Group::G5, Group::G6, Group::G7}) {
           std::vector<GroupSpec> specs =
               sample_group(g, mix_seed(kSeed, "scale." + group_name(g)), 10);
           for (const GroupSpec& spec : specs) {
             for (Distribution dist :
                  {Distribution::b1(), Distribution::b2(), Distribution::b3()}) {
               SubspaceBasis original = collineation_space(spec, dist);
               for (const Rational& t : factors) {
                 GroupSpec scaled = spec;
                 auto scale = [&](std::optional<Rational>& x) {
                   if (x) x = *x * t;
                 };
                 scale(scaled.params.alpha);
                 scale(scaled.params.beta);
                 scale(scaled.params.gamma);
                 scale(scaled.params.delta);
                 if (!(collineation_space(scaled, dist) == original)) {
                   log << "      " << group_name(g) << "." << dist.name() << " at "
                       << spec.params.to_string() << " scaled by " << t.to_string() << "\n";
                   ok = false;
                 }
               }
             }
           }
         }
         return ok;
       }});

  // 6. Determinism: two full verification runs with the same seed produce
  //    byte-identical serialized reports.
  criteria.push_back({"two full verification runs with seed 42 serialize byte-identically",
                      [&](std::ostream& log) {
                        std::string again = report_to_json(verify_all(kSeed, kSamplesPerCase)).dump();
                        std::string first = report_to_json(report).dump();
                        if (first != again) {
                          log << "      reports differ\n";
                          return false;
                        }
                        return true;
                      }});

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    bool ok = criteria[i].run(log);
    std::cout << "criterion " << i + 1 << ": " << (ok ? "PASS" : "FAIL") << " - "
              << criteria[i].description << "\n";
    if (!ok) {
      std::cout << log.str();
      ++failures;
    }
  }

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failures) << "/"
            << criteria.size() << " criteria passed in " << elapsed << " ms ("
            << report.passed << " catalog entries passed, " << report.flagged
            << " flagged as known discrepancies, " << report.failed << " failed)\n";
  return failures == 0 ? 0 : 1;
}
