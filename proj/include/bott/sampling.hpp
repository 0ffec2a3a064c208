#ifndef BOTT_SAMPLING_HPP
#define BOTT_SAMPLING_HPP

#include "bott/groups.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace bott {

/// Deterministic random source. Wraps std::mt19937_64 (whose output sequence
/// the standard pins down) and maps values into ranges without touching
/// std::uniform_int_distribution, which is not portable across libraries.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [lo, hi] (modulo mapping; the ranges here are
  /// tiny relative to 2^64, so bias is negligible and determinism is exact).
  long long next_in(long long lo, long long hi);

  /// Small exact rational: numerator in [-9, 9], denominator in {1..5}.
  Rational rational();

  /// Small nonzero rational with the same shape.
  Rational nonzero_rational();

  /// +1 or -1.
  Rational sign();

private:
  std::mt19937_64 engine_;
};

/// Seed mixing: a fixed FNV-1a hash of the label folded into the base seed,
/// so every catalog case draws an independent, reproducible stream.
std::uint64_t mix_seed(std::uint64_t seed, const std::string& label);

/// Polynomial constraints on a group's parameters: all `equalities` must
/// evaluate to 0 and all `inequations` must evaluate nonzero.
struct CasePredicate {
  std::vector<Poly> equalities;
  std::vector<Poly> inequations;

  bool holds(const ParamValues& values) const;
};

/// A recipe draws candidate parameters for one region; equality constraints
/// are satisfied by construction inside the recipe (rejection would never
/// hit a measure-zero set), inequations by redraw.
using ParamRecipe = std::function<Params(Rng&)>;

/// Recipe covering a group's full valid parameter region.
ParamRecipe group_recipe(Group g);

/// One admissible draw: recipe output must be complete, satisfy the group's
/// standing constraints, and pass `accept`. Throws ExhaustedSampling after
/// 1000 rejected draws.
GroupSpec draw_sample(Group g, const ParamRecipe& recipe,
                      const std::function<bool(const ParamValues&)>& accept, Rng& rng);

/// Draws `count` parameter sets from `recipe` that satisfy the group's
/// standing constraints plus `predicate`; deterministic for a fixed seed.
/// Throws ExhaustedSampling after 1000 rejected draws for a single sample.
std::vector<GroupSpec> sample_params(Group g, const ParamRecipe& recipe,
                                     const CasePredicate& predicate, std::uint64_t seed,
                                     int count);

/// Same, drawing from the group's own region recipe.
std::vector<GroupSpec> sample_group(Group g, std::uint64_t seed, int count);

} // namespace bott

#endif
