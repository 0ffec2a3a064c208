#include "bott/json_io.hpp"

#include "bott/errors.hpp"

#include <iomanip>
#include <sstream>

namespace bott {

json rational_to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected a rational string, got " + j.dump());
  return Rational::from_string(j.get<std::string>());
}

json ricci_to_json(const RicciForm& ric) {
  json m = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(rational_to_json(ric.m(i, j)));
    m.push_back(row);
  }
  return json{{"symmetric", ric.symmetric}, {"m", m}};
}

RicciForm ricci_from_json(const json& j) {
  RicciForm out;
  out.symmetric = j.at("symmetric").get<bool>();
  const json& m = j.at("m");
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out.m(i, k) = rational_from_json(m.at(i).at(k));
  return out;
}

json connection_to_json(const Connection& conn) {
  json gamma = json::array();
  for (int i = 0; i < 3; ++i) {
    json plane = json::array();
    for (int j = 0; j < 3; ++j) {
      json row = json::array();
      for (int k = 0; k < 3; ++k) row.push_back(rational_to_json(conn.coeffs(i, j)(k)));
      plane.push_back(row);
    }
    gamma.push_back(plane);
  }
  return json{{"gamma", gamma}};
}

json collineations_to_json(const SubspaceBasis& basis) {
  json vectors = json::array();
  for (const Vec3& v : basis.vectors) {
    json row = json::array();
    for (int i = 0; i < 3; ++i) row.push_back(rational_to_json(v(i)));
    vectors.push_back(row);
  }
  return json{{"dim", basis.dim}, {"basis", vectors}};
}

json group_spec_to_json(const GroupSpec& spec) {
  json params = json::object();
  auto put = [&](const char* name, const std::optional<Rational>& v) {
    if (v) params[name] = rational_to_json(*v);
  };
  put("alpha", spec.params.alpha);
  put("beta", spec.params.beta);
  put("gamma", spec.params.gamma);
  put("delta", spec.params.delta);
  put("eta", spec.params.eta);
  return json{{"group", group_name(spec.group)}, {"params", params}};
}

GroupSpec group_spec_from_json(const json& j) {
  GroupSpec spec;
  auto g = parse_group(j.at("group").get<std::string>());
  if (!g) throw std::invalid_argument("unknown group: " + j.at("group").dump());
  spec.group = *g;
  if (j.contains("params")) {
    const json& params = j.at("params");
    auto get = [&](const char* name) -> std::optional<Rational> {
      if (!params.contains(name)) return std::nullopt;
      return rational_from_json(params.at(name));
    };
    spec.params.alpha = get("alpha");
    spec.params.beta = get("beta");
    spec.params.gamma = get("gamma");
    spec.params.delta = get("delta");
    spec.params.eta = get("eta");
  }
  return spec;
}

StructureConstants algebra_from_json(const json& j) {
  const json& c = j.at("c");
  if (!c.is_array() || c.size() != 3)
    throw std::invalid_argument("custom algebra: \"c\" must be a 3x3x3 array");
  auto entry = [&](int i, int jj, int k) { return rational_from_json(c.at(i).at(jj).at(k)); };
  // antisymmetry is required of the input, not silently repaired
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj < 3; ++jj)
      for (int k = 0; k < 3; ++k)
        if (entry(i, jj, k) != -entry(jj, i, k))
          throw std::invalid_argument(
              "custom algebra: antisymmetry fails at c[" + std::to_string(i + 1) + "][" +
              std::to_string(jj + 1) + "][" + std::to_string(k + 1) + "]");
  StructureConstants sc;
  for (auto [i, jj] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    Vec3 v;
    for (int k = 0; k < 3; ++k) v(k) = entry(i, jj, k);
    sc.set_bracket(i, jj, v);
  }
  JacobiReport jacobi = check_jacobi(sc);
  if (!jacobi.ok) throw JacobiFailure("custom algebra: " + jacobi.describe());
  return sc;
}

json algebra_to_json(const StructureConstants& sc) {
  json c = json::array();
  for (int i = 0; i < 3; ++i) {
    json plane = json::array();
    for (int j = 0; j < 3; ++j) {
      json row = json::array();
      for (int k = 0; k < 3; ++k) row.push_back(rational_to_json(sc.c(i, j, k)));
      plane.push_back(row);
    }
    c.push_back(plane);
  }
  return json{{"c", c}};
}

namespace {

json params_to_json(const Params& p) {
  json out = json::object();
  auto put = [&](const char* name, const std::optional<Rational>& v) {
    if (v) out[name] = rational_to_json(*v);
  };
  put("alpha", p.alpha);
  put("beta", p.beta);
  put("gamma", p.gamma);
  put("delta", p.delta);
  put("eta", p.eta);
  return out;
}

json mismatch_to_json(const Mismatch& m) {
  return json{{"key", m.key}, {"detail", m.detail}, {"known", m.known}};
}

} // namespace

json report_to_json(const VerifyReport& report) {
  json cases = json::array();
  for (const CaseResult& cr : report.cases) {
    json samples = json::array();
    for (const SampleResult& s : cr.samples) {
      json mismatches = json::array();
      for (const Mismatch& m : s.mismatches) mismatches.push_back(mismatch_to_json(m));
      samples.push_back(json{{"sample_params", params_to_json(s.params)},
                             {"computed_dim", s.computed_dim},
                             {"membership", s.membership_ok},
                             {"span_equal", s.span_ok},
                             {"ricci_match", s.ricci_ok},
                             {"lie_match", s.lie_ok},
                             {"laws", s.laws_ok},
                             {"mismatches", mismatches},
                             {"verdict", s.verdict}});
    }
    json case_mismatches = json::array();
    for (const Mismatch& m : cr.case_mismatches) case_mismatches.push_back(mismatch_to_json(m));
    json entry{{"case_id", cr.id},
               {"group", group_name(cr.group)},
               {"dist", cr.dist.name()},
               {"kind", cr.kind},
               {"condition", cr.condition},
               {"samples", samples},
               {"verdict", cr.verdict}};
    if (cr.claimed_dim >= 0) entry["claimed_dim"] = cr.claimed_dim;
    if (cr.infeasible) entry["infeasible"] = true;
    if (cr.denominator_redraws > 0) entry["denominator_redraws"] = cr.denominator_redraws;
    if (!case_mismatches.empty()) entry["case_mismatches"] = case_mismatches;
    cases.push_back(entry);
  }
  return json{{"seed", report.seed},
              {"samples_per_case", report.samples_per_case},
              {"cases", cases},
              {"passed", report.passed},
              {"flagged", report.flagged},
              {"failed", report.failed},
              {"all_pass", report.all_pass},
              {"observed_discrepancies", report.observed_discrepancies}};
}

std::string report_to_table(const VerifyReport& report) {
  std::ostringstream os;
  os << "verification report (seed " << report.seed << ", " << report.samples_per_case
     << " samples per case)\n";
  os << std::left << std::setw(24) << "case" << std::setw(10) << "claimed" << std::setw(10)
     << "computed" << "verdict\n";
  for (const CaseResult& cr : report.cases) {
    std::string claimed = cr.claimed_dim >= 0 ? std::to_string(cr.claimed_dim) : "-";
    std::string computed = "-";
    if (!cr.samples.empty()) {
      bool uniform = true;
      for (const SampleResult& s : cr.samples)
        if (s.computed_dim != cr.samples.front().computed_dim) uniform = false;
      computed = uniform ? std::to_string(cr.samples.front().computed_dim) : "mixed";
    } else if (cr.infeasible) {
      computed = "n/a";
    }
    os << std::left << std::setw(24) << cr.id << std::setw(10) << claimed << std::setw(10)
       << computed << cr.verdict;
    if (cr.infeasible) os << " (no admissible parameters)";
    if (cr.denominator_redraws > 0) os << " (" << cr.denominator_redraws << " redraws)";
    os << "\n";
    for (const SampleResult& s : cr.samples) {
      for (const Mismatch& m : s.mismatches) {
        os << "    [" << (m.known ? "known" : "FAIL") << "] " << m.key << ": " << m.detail
           << "\n";
      }
    }
    for (const Mismatch& m : cr.case_mismatches)
      os << "    [" << (m.known ? "known" : "FAIL") << "] " << m.key << ": " << m.detail << "\n";
  }
  os << "summary: " << report.passed << " passed, " << report.flagged
     << " flagged as known discrepancies, " << report.failed << " failed\n";
  if (!report.observed_discrepancies.empty()) {
    os << "known discrepancies observed:\n";
    for (const std::string& key : report.observed_discrepancies) os << "  " << key << "\n";
  }
  return os.str();
}

std::string matrix_to_table(const Mat3& m, const std::string& title) {
  std::ostringstream os;
  os << title << "\n";
  std::array<std::array<std::string, 4>, 4> cells;
  cells[0] = {"", "e1", "e2", "e3"};
  for (int i = 0; i < 3; ++i) {
    cells[static_cast<std::size_t>(i + 1)][0] = "e" + std::to_string(i + 1);
    for (int j = 0; j < 3; ++j)
      cells[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] =
          m(i, j).to_string();
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells)
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c)
      os << std::left << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    os << "\n";
  }
  return os.str();
}

} // namespace bott
