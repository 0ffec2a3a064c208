#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bott/errors.hpp"
#include "bott/json_io.hpp"
#include "bott/verify.hpp"

using namespace bott;

TEST_SUITE("laws") {
  TEST_CASE("the independent law suite is clean on sampled pairs") {
    for (int gi = 1; gi <= 7; ++gi) {
      Group g = static_cast<Group>(gi);
      for (Distribution dist : {Distribution::b1(), Distribution::b2(), Distribution::b3()}) {
        Rng rng(mix_seed(8, group_name(g) + dist.name()));
        for (const GroupSpec& spec : sample_group(g, 600u + static_cast<std::uint64_t>(gi), 5)) {
          std::vector<LawFailure> failures = check_laws(build_group(spec), dist, rng);
          for (const LawFailure& f : failures) MESSAGE(f.law, ": ", f.detail);
          CHECK(failures.empty());
        }
      }
    }
  }
}

TEST_SUITE("verify_case") {
  TEST_CASE("G5.B1.main: every field is a collineation at every sample") {
    const TheoremCase* tc = find_case("G5.B1.main");
    REQUIRE(tc != nullptr);
    CaseResult result = verify_case(*tc, 42, 10);
    CHECK(result.verdict == "pass");
    REQUIRE(result.samples.size() == 10);
    for (const SampleResult& s : result.samples) CHECK(s.computed_dim == 3);
  }

  TEST_CASE("G1.B3: full space on beta = 0, trivial on the complement") {
    const TheoremCase* main_case = find_case("G1.B3.main");
    REQUIRE(main_case != nullptr);
    CaseResult main_result = verify_case(*main_case, 42, 10);
    CHECK(main_result.verdict == "pass");
    for (const SampleResult& s : main_result.samples) CHECK(s.computed_dim == 3);

    const TheoremCase* complement = find_case("G1.B3.complement");
    REQUIRE(complement != nullptr);
    CaseResult comp_result = verify_case(*complement, 42, 10);
    CHECK(comp_result.verdict == "pass");
    for (const SampleResult& s : comp_result.samples) {
      CHECK(s.computed_dim == 0);
      CHECK(*s.params.beta != Rational(0));
    }
  }

  TEST_CASE("G2.B2.case3: printed vector spans the kernel") {
    const TheoremCase* tc = find_case("G2.B2.case3");
    REQUIRE(tc != nullptr);
    CaseResult result = verify_case(*tc, 7, 10);
    CHECK(result.verdict == "pass");
    for (const SampleResult& s : result.samples) {
      CHECK(s.computed_dim == 1);
      CHECK(s.membership_ok);
      CHECK(s.span_ok);
    }
  }

  TEST_CASE("the infeasible-as-printed region reports and is covered by the log") {
    const TheoremCase* tc = find_case("G7.B2.case3");
    REQUIRE(tc != nullptr);
    CaseResult result = verify_case(*tc, 42, 5);
    CHECK(result.infeasible);
    CHECK(result.verdict == "known-discrepancy");
  }

  TEST_CASE("a vanishing claimed-basis denominator is reported and redrawn") {
    // synthetic case whose claimed vector is undefined everywhere: every
    // draw is rejected, the redraws are counted, and the entry fails for
    // lack of samples
    TheoremCase tc;
    tc.id = "synthetic.denominator";
    tc.group = Group::G3;
    tc.dist = Distribution::b1();
    tc.kind = CaseKind::Theorem;
    tc.predicate = {{}, {Poly::var(Var::Alpha), Poly::var(Var::Beta), Poly::var(Var::Gamma)}};
    tc.recipe = group_recipe(Group::G3);
    tc.claimed_dim = 1;
    tc.claimed_basis = {{RationalFn{Poly(0)}, RationalFn{Poly(0)}, RationalFn{Poly(1), Poly(0)}}};
    CaseResult result = verify_case(tc, 42, 3);
    CHECK(result.samples.empty());
    CHECK(result.denominator_redraws == 3 * 20);
    CHECK(result.verdict == "fail");
  }

  TEST_CASE("known discrepancies are flagged, not failed") {
    const TheoremCase* tc = find_case("G5.B2.case3");
    REQUIRE(tc != nullptr);
    CaseResult result = verify_case(*tc, 42, 10);
    CHECK(result.verdict == "known-discrepancy");
    for (const SampleResult& s : result.samples) {
      CHECK(s.computed_dim == 1); // dimension agrees, only the axes differ
      CHECK(!s.membership_ok);
      CHECK(s.laws_ok);
    }
  }
}

TEST_SUITE("verify_all") {
  TEST_CASE("full run has no unexplained failures") {
    VerifyReport report = verify_all(42, 5);
    CHECK(report.all_pass);
    CHECK(report.failed == 0);
    CHECK(report.cases.size() >= 60);
    // ordering by id, independent of construction order
    for (std::size_t i = 1; i < report.cases.size(); ++i)
      CHECK(report.cases[i - 1].id < report.cases[i].id);
  }

  TEST_CASE("filtering restricts the run") {
    VerifyReport report = verify_all(1, 3, {{"G3.B1.case2"}});
    REQUIRE(report.cases.size() == 1);
    CHECK(report.cases[0].id == "G3.B1.case2");
    // an explicitly empty case list runs nothing; no filter runs everything
    VerifyReport empty = verify_all(1, 3, std::vector<std::string>{});
    CHECK(empty.cases.empty());
    CHECK(empty.all_pass);
  }

  TEST_CASE("two runs with the same seed serialize identically") {
    VerifyReport a = verify_all(42, 4);
    VerifyReport b = verify_all(42, 4);
    CHECK(report_to_json(a).dump() == report_to_json(b).dump());
  }
}

TEST_SUITE("json") {
  TEST_CASE("rational strings round-trip") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
      Rational r = rng.rational();
      CHECK(rational_from_json(rational_to_json(r)) == r);
    }
    CHECK_THROWS(rational_from_json(json(0.5)));
  }

  TEST_CASE("ricci form round-trip") {
    GroupSpec spec;
    spec.group = Group::G1;
    spec.params.alpha = Rational(1);
    spec.params.beta = Rational(-2, 3);
    RicciForm ric = bott_ricci(build_group(spec), Distribution::b1());
    RicciForm back = ricci_from_json(ricci_to_json(ric));
    CHECK(back.symmetric == ric.symmetric);
    CHECK(exactly_equal(back.m, ric.m));
  }

  TEST_CASE("group spec round-trip") {
    GroupSpec spec;
    spec.group = Group::G4;
    spec.params.alpha = Rational(1);
    spec.params.beta = Rational(2);
    spec.params.eta = Rational(1);
    GroupSpec back = group_spec_from_json(group_spec_to_json(spec));
    CHECK(back.group == Group::G4);
    CHECK(*back.params.alpha == Rational(1));
    CHECK(*back.params.eta == Rational(1));
    CHECK(!back.params.gamma);
  }

  TEST_CASE("custom algebra loader enforces antisymmetry and the identity") {
    GroupSpec spec;
    spec.group = Group::G2;
    spec.params.alpha = Rational(1);
    spec.params.beta = Rational(0);
    spec.params.gamma = Rational(2);
    StructureConstants sc = build_group(spec);
    StructureConstants back = algebra_from_json(algebra_to_json(sc));
    CHECK(back == sc);

    json bad = algebra_to_json(sc);
    bad["c"][0][1][0] = "5"; // breaks antisymmetry against c[1][0][0]
    CHECK_THROWS_AS(algebra_from_json(bad), std::invalid_argument);

    // antisymmetric but violating the identity: [e1,e2]=e3, [e1,e3]=e2, [e2,e3]=e2
    StructureConstants violating;
    violating.set_bracket(0, 1, basis_vector(2));
    violating.set_bracket(0, 2, basis_vector(1));
    violating.set_bracket(1, 2, basis_vector(1));
    CHECK_THROWS_AS(algebra_from_json(algebra_to_json(violating)), JacobiFailure);
  }

  TEST_CASE("report JSON carries the required fields") {
    VerifyReport report = verify_all(42, 2, {{"G6.B2.case3", "G5.B2.case3"}});
    json j = report_to_json(report);
    REQUIRE(j.at("cases").size() == 2);
    const json& flagged = j.at("cases").at(0); // G5.B2.case3 sorts first
    CHECK(flagged.at("case_id") == "G5.B2.case3");
    CHECK(flagged.at("group") == "G5");
    CHECK(flagged.at("dist") == "B2");
    CHECK(flagged.at("claimed_dim") == 1);
    const json& sample = flagged.at("samples").at(0);
    CHECK(sample.contains("sample_params"));
    CHECK(sample.contains("computed_dim"));
    CHECK(sample.contains("membership"));
    CHECK(sample.contains("span_equal"));
    CHECK(sample.contains("ricci_match"));
    CHECK(sample.contains("verdict"));
    CHECK(sample.at("mismatches").at(0).at("known") == true);
    CHECK(j.at("observed_discrepancies").size() >= 1);
  }
}
