#ifndef BOTT_CONNECTION_HPP
#define BOTT_CONNECTION_HPP

#include "bott/structure.hpp"

#include <array>
#include <optional>
#include <string>

namespace bott {

/// The fixed Lorentzian frame metric: g = diag(+1, +1, -1), e3 timelike.
inline Rational metric_sign(int k) { return k == 2 ? Rational(-1) : Rational(1); }

/// g(u, v) = u1 v1 + u2 v2 - u3 v3, exactly.
Rational metric(const Vec3& u, const Vec3& v);

/// One of the three coordinate-aligned splittings of the frame.
/// F holds the distribution's 0-based frame indices, the complement is F-perp.
struct Distribution {
  enum class Tag : int { B1 = 1, B2, B3 };
  Tag tag;

  static Distribution b1() { return {Tag::B1}; }
  static Distribution b2() { return {Tag::B2}; }
  static Distribution b3() { return {Tag::B3}; }

  std::array<int, 2> f_indices() const;
  int fperp_index() const;
  bool in_f(int i) const { return i != fperp_index(); }

  /// Component-wise projection onto F (keep F rows, zero the complement row).
  Vec3 project_f(const Vec3& v) const;
  /// Projection onto F-perp.
  Vec3 project_fperp(const Vec3& v) const;

  std::string name() const;
};

std::optional<Distribution> parse_distribution(const std::string& name);

/// Affine connection in the left-invariant frame: nabla_{e_i} e_j has
/// coefficient vector coeffs(i, j). Coefficient functions are constants on
/// the frame, so directional derivatives extend by plain linearity.
class Connection {
public:
  Connection() {
    for (auto& row : gamma_)
      for (auto& v : row) v = Vec3::Zero();
  }

  const Vec3& coeffs(int i, int j) const { return gamma_[i][j]; }
  Vec3& coeffs(int i, int j) { return gamma_[i][j]; }

  /// nabla_{e_i} w for a constant-coefficient field w.
  Vec3 derive(int i, const Vec3& w) const;

  /// nabla_u w with u a constant-coefficient combination of frame fields.
  Vec3 derive_along(const Vec3& u, const Vec3& w) const;

  friend bool operator==(const Connection& a, const Connection& b);

private:
  std::array<std::array<Vec3, 3>, 3> gamma_;
};

/// The Levi-Civita connection of the left-invariant metric, from the frame
/// form of the Koszul formula:
///   2 g(nabla_{e_i} e_j, e_k) = g([e_i,e_j], e_k) - g([e_j,e_k], e_i)
///                             + g([e_k,e_i], e_j).
/// All derivative terms vanish since the metric coefficients are constant.
/// The result is the unique torsion-free metric-compatible connection; both
/// properties are asserted by the test suite rather than assumed.
Connection levi_civita(const StructureConstants& sc);

/// The Bott connection of the distribution, defined case-by-case on frame
/// vectors:
///   both arguments in F        -> project the Levi-Civita derivative onto F
///   direction in F-perp, field in F      -> project the bracket onto F
///   direction in F, field in F-perp      -> project the bracket onto F-perp
///   both in F-perp             -> project the Levi-Civita derivative onto F-perp
/// It generally carries torsion.
Connection bott(const StructureConstants& sc, const Distribution& dist);

} // namespace bott

#endif
