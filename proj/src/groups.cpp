#include "bott/groups.hpp"

#include "bott/errors.hpp"

#include <sstream>

namespace bott {

std::string group_name(Group g) { return "G" + std::to_string(static_cast<int>(g)); }

std::optional<Group> parse_group(const std::string& name) {
  if (name.size() == 2 && (name[0] == 'G' || name[0] == 'g') && name[1] >= '1' && name[1] <= '7')
    return static_cast<Group>(name[1] - '0');
  return std::nullopt;
}

ParamValues Params::values() const {
  ParamValues out;
  out[0] = alpha.value_or(Rational(0));
  out[1] = beta.value_or(Rational(0));
  out[2] = gamma.value_or(Rational(0));
  out[3] = delta.value_or(Rational(0));
  out[4] = eta.value_or(Rational(0));
  return out;
}

std::string Params::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const char* name, const std::optional<Rational>& v) {
    if (!v) return;
    if (!first) os << ", ";
    first = false;
    os << name << "=" << v->to_string();
  };
  emit("alpha", alpha);
  emit("beta", beta);
  emit("gamma", gamma);
  emit("delta", delta);
  emit("eta", eta);
  return os.str();
}

const std::vector<Var>& group_vars(Group g) {
  static const std::vector<Var> g1 = {Var::Alpha, Var::Beta};
  static const std::vector<Var> g2 = {Var::Alpha, Var::Beta, Var::Gamma};
  static const std::vector<Var> g3 = {Var::Alpha, Var::Beta, Var::Gamma};
  static const std::vector<Var> g4 = {Var::Alpha, Var::Beta, Var::Eta};
  static const std::vector<Var> g567 = {Var::Alpha, Var::Beta, Var::Gamma, Var::Delta};
  switch (g) {
    case Group::G1: return g1;
    case Group::G2: return g2;
    case Group::G3: return g3;
    case Group::G4: return g4;
    default: return g567;
  }
}

namespace {

const Rational& require(const std::optional<Rational>& field, const char* name, Group g) {
  if (!field)
    throw ConstraintViolation(std::string(name) + " required",
                              group_name(g) + " needs parameter " + name);
  return *field;
}

void forbid_extras(const GroupSpec& spec) {
  const auto& vars = group_vars(spec.group);
  auto declared = [&](Var v) {
    for (Var w : vars)
      if (w == v) return true;
    return false;
  };
  auto check = [&](Var v, const std::optional<Rational>& field) {
    if (field && !declared(v))
      throw ConstraintViolation(std::string(var_name(v)) + " not a parameter",
                                group_name(spec.group) + " does not take " + var_name(v) + "=" +
                                    field->to_string());
  };
  check(Var::Alpha, spec.params.alpha);
  check(Var::Beta, spec.params.beta);
  check(Var::Gamma, spec.params.gamma);
  check(Var::Delta, spec.params.delta);
  check(Var::Eta, spec.params.eta);
}

void require_nonzero(const Rational& v, const std::string& constraint, const std::string& detail) {
  if (v.is_zero()) throw ConstraintViolation(constraint, detail);
}

void require_zero(const Rational& v, const std::string& constraint, const std::string& detail) {
  if (!v.is_zero()) throw ConstraintViolation(constraint, detail);
}

} // namespace

void validate_spec(const GroupSpec& spec) {
  const Params& p = spec.params;
  forbid_extras(spec);
  switch (spec.group) {
    case Group::G1: {
      const Rational& a = require(p.alpha, "alpha", spec.group);
      require(p.beta, "beta", spec.group);
      require_nonzero(a, "alpha != 0", "G1 with alpha=" + a.to_string());
      break;
    }
    case Group::G2: {
      require(p.alpha, "alpha", spec.group);
      require(p.beta, "beta", spec.group);
      const Rational& c = require(p.gamma, "gamma", spec.group);
      require_nonzero(c, "gamma != 0", "G2 with gamma=" + c.to_string());
      break;
    }
    case Group::G3: {
      require(p.alpha, "alpha", spec.group);
      require(p.beta, "beta", spec.group);
      require(p.gamma, "gamma", spec.group);
      break;
    }
    case Group::G4: {
      require(p.alpha, "alpha", spec.group);
      require(p.beta, "beta", spec.group);
      const Rational& h = require(p.eta, "eta", spec.group);
      if (h != Rational(1) && h != Rational(-1))
        throw ConstraintViolation("eta in {+1,-1}", "G4 with eta=" + h.to_string());
      break;
    }
    case Group::G5: {
      const Rational& a = require(p.alpha, "alpha", spec.group);
      const Rational& b = require(p.beta, "beta", spec.group);
      const Rational& c = require(p.gamma, "gamma", spec.group);
      const Rational& d = require(p.delta, "delta", spec.group);
      require_nonzero(a + d, "alpha + delta != 0", "G5 with " + p.to_string());
      require_zero(a * c + b * d, "alpha*gamma + beta*delta = 0",
                   "G5 with " + p.to_string() + " gives " + (a * c + b * d).to_string());
      break;
    }
    case Group::G6: {
      const Rational& a = require(p.alpha, "alpha", spec.group);
      const Rational& b = require(p.beta, "beta", spec.group);
      const Rational& c = require(p.gamma, "gamma", spec.group);
      const Rational& d = require(p.delta, "delta", spec.group);
      require_nonzero(a + d, "alpha + delta != 0", "G6 with " + p.to_string());
      require_zero(a * c - b * d, "alpha*gamma - beta*delta = 0",
                   "G6 with " + p.to_string() + " gives " + (a * c - b * d).to_string());
      break;
    }
    case Group::G7: {
      const Rational& a = require(p.alpha, "alpha", spec.group);
      require(p.beta, "beta", spec.group);
      const Rational& c = require(p.gamma, "gamma", spec.group);
      const Rational& d = require(p.delta, "delta", spec.group);
      require_nonzero(a + d, "alpha + delta != 0", "G7 with " + p.to_string());
      require_zero(a * c, "alpha*gamma = 0",
                   "G7 with " + p.to_string() + " gives " + (a * c).to_string());
      break;
    }
  }
}

StructureConstants build_group(const GroupSpec& spec) {
  validate_spec(spec);
  const Params& p = spec.params;
  Rational a = p.alpha.value_or(Rational(0));
  Rational b = p.beta.value_or(Rational(0));
  Rational c = p.gamma.value_or(Rational(0));
  Rational d = p.delta.value_or(Rational(0));
  Rational h = p.eta.value_or(Rational(0));

  auto v3 = [](Rational x, Rational y, Rational z) {
    Vec3 v;
    v << std::move(x), std::move(y), std::move(z);
    return v;
  };

  StructureConstants sc;
  switch (spec.group) {
    case Group::G1:
      sc.set_bracket(0, 1, v3(a, 0, -b));
      sc.set_bracket(0, 2, v3(-a, -b, 0));
      sc.set_bracket(1, 2, v3(b, a, a));
      break;
    case Group::G2:
      sc.set_bracket(0, 1, v3(0, c, -b));
      sc.set_bracket(0, 2, v3(0, -b, -c));
      sc.set_bracket(1, 2, v3(a, 0, 0));
      break;
    case Group::G3:
      sc.set_bracket(0, 1, v3(0, 0, -c));
      sc.set_bracket(0, 2, v3(0, -b, 0));
      sc.set_bracket(1, 2, v3(a, 0, 0));
      break;
    case Group::G4:
      sc.set_bracket(0, 1, v3(0, -1, Rational(2) * h - b));
      sc.set_bracket(0, 2, v3(0, -b, 1));
      sc.set_bracket(1, 2, v3(a, 0, 0));
      break;
    case Group::G5:
      sc.set_bracket(0, 1, Vec3::Zero());
      sc.set_bracket(0, 2, v3(a, b, 0));
      sc.set_bracket(1, 2, v3(c, d, 0));
      break;
    case Group::G6:
      sc.set_bracket(0, 1, v3(0, a, b));
      sc.set_bracket(0, 2, v3(0, c, d));
      sc.set_bracket(1, 2, Vec3::Zero());
      break;
    case Group::G7:
      sc.set_bracket(0, 1, v3(-a, -b, -b));
      sc.set_bracket(0, 2, v3(a, b, b));
      sc.set_bracket(1, 2, v3(c, d, d));
      break;
  }

  JacobiReport jacobi = check_jacobi(sc);
  if (!jacobi.ok)
    throw JacobiFailure(group_name(spec.group) + " with " + p.to_string() + ": " +
                        jacobi.describe());
  return sc;
}

} // namespace bott
