#include "bott/sampling.hpp"

#include "bott/errors.hpp"

namespace bott {

long long Rng::next_in(long long lo, long long hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(engine_() % span);
}

Rational Rng::rational() {
  long long num = next_in(-9, 9);
  long long den = next_in(1, 5);
  return Rational(num, den);
}

Rational Rng::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Rational Rng::sign() { return next_in(0, 1) == 0 ? Rational(1) : Rational(-1); }

std::uint64_t mix_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 1469598103934665603ull; // FNV-1a 64
  for (unsigned char c : label) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

bool CasePredicate::holds(const ParamValues& values) const {
  for (const Poly& p : equalities)
    if (!p.eval(values).is_zero()) return false;
  for (const Poly& p : inequations)
    if (p.eval(values).is_zero()) return false;
  return true;
}

ParamRecipe group_recipe(Group g) {
  switch (g) {
    case Group::G1:
      return [](Rng& rng) {
        Params p;
        p.alpha = rng.nonzero_rational();
        p.beta = rng.rational();
        return p;
      };
    case Group::G2:
      return [](Rng& rng) {
        Params p;
        p.alpha = rng.rational();
        p.beta = rng.rational();
        p.gamma = rng.nonzero_rational();
        return p;
      };
    case Group::G3:
      return [](Rng& rng) {
        Params p;
        p.alpha = rng.rational();
        p.beta = rng.rational();
        p.gamma = rng.rational();
        return p;
      };
    case Group::G4:
      return [](Rng& rng) {
        Params p;
        p.alpha = rng.rational();
        p.beta = rng.rational();
        p.eta = rng.sign();
        return p;
      };
    case Group::G5:
      // alpha*gamma + beta*delta = 0 solved for gamma when alpha != 0;
      // alpha = 0 forces beta*delta = 0 with delta != 0, so beta = 0.
      return [](Rng& rng) {
        Params p;
        Rational a = rng.rational();
        Rational d = rng.rational();
        if ((a + d).is_zero()) return Params{}; // redraw
        p.alpha = a;
        p.delta = d;
        if (!a.is_zero()) {
          Rational b = rng.rational();
          p.beta = b;
          p.gamma = -(b * d) / a;
        } else {
          p.beta = Rational(0);
          p.gamma = rng.rational();
        }
        return p;
      };
    case Group::G6:
      // mirror of G5: alpha*gamma - beta*delta = 0
      return [](Rng& rng) {
        Params p;
        Rational a = rng.rational();
        Rational d = rng.rational();
        if ((a + d).is_zero()) return Params{};
        p.alpha = a;
        p.delta = d;
        if (!a.is_zero()) {
          Rational b = rng.rational();
          p.beta = b;
          p.gamma = (b * d) / a;
        } else {
          p.beta = Rational(0);
          p.gamma = rng.rational();
        }
        return p;
      };
    case Group::G7:
      // alpha*gamma = 0: one of the two factors is pinned to zero
      return [](Rng& rng) {
        Params p;
        Rational a = rng.rational();
        p.alpha = a;
        p.beta = rng.rational();
        if (!a.is_zero()) {
          p.gamma = Rational(0);
          p.delta = rng.rational();
        } else {
          p.gamma = rng.rational();
          p.delta = rng.nonzero_rational();
        }
        if ((*p.alpha + *p.delta).is_zero()) return Params{};
        return p;
      };
  }
  throw std::logic_error("group_recipe: bad group");
}

namespace {

bool complete(const Params& p, Group g) {
  for (Var v : group_vars(g)) {
    switch (v) {
      case Var::Alpha: if (!p.alpha) return false; break;
      case Var::Beta: if (!p.beta) return false; break;
      case Var::Gamma: if (!p.gamma) return false; break;
      case Var::Delta: if (!p.delta) return false; break;
      case Var::Eta: if (!p.eta) return false; break;
    }
  }
  return true;
}

bool standing_constraints_hold(const GroupSpec& spec) {
  try {
    validate_spec(spec);
    return true;
  } catch (const ConstraintViolation&) {
    return false;
  }
}

} // namespace

GroupSpec draw_sample(Group g, const ParamRecipe& recipe,
                      const std::function<bool(const ParamValues&)>& accept, Rng& rng) {
  const int max_draws = 1000;
  for (int attempt = 0; attempt < max_draws; ++attempt) {
    Params p = recipe(rng);
    if (!complete(p, g)) continue;
    GroupSpec spec{g, p};
    if (!standing_constraints_hold(spec)) continue;
    if (accept && !accept(p.values())) continue;
    return spec;
  }
  throw ExhaustedSampling(group_name(g) + ": no admissible parameters in " +
                          std::to_string(max_draws) + " draws (infeasible or measure-zero region)");
}

std::vector<GroupSpec> sample_params(Group g, const ParamRecipe& recipe,
                                     const CasePredicate& predicate, std::uint64_t seed,
                                     int count) {
  Rng rng(seed);
  std::vector<GroupSpec> out;
  out.reserve(static_cast<std::size_t>(count));
  auto accept = [&](const ParamValues& v) { return predicate.holds(v); };
  for (int i = 0; i < count; ++i) out.push_back(draw_sample(g, recipe, accept, rng));
  return out;
}

std::vector<GroupSpec> sample_group(Group g, std::uint64_t seed, int count) {
  return sample_params(g, group_recipe(g), CasePredicate{}, seed, count);
}

} // namespace bott
