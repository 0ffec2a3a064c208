#ifndef BOTT_STRUCTURE_HPP
#define BOTT_STRUCTURE_HPP

#include "bott/eigen_support.hpp"

#include <array>
#include <optional>
#include <string>

namespace bott {

/// Structure constants of a 3-dimensional Lie algebra on the frame e1,e2,e3:
/// [e_i, e_j] = sum_k c(i,j,k) e_k, with 0-based indices in code.
/// Antisymmetry c(i,j,k) = -c(j,i,k) is maintained by construction.
class StructureConstants {
public:
  StructureConstants() {
    for (auto& m : c_) m = Vec3::Zero();
    for (auto& m : mirror_) m = Vec3::Zero();
  }

  /// Sets [e_i, e_j] = v for i < j; the (j, i) bracket follows by antisymmetry.
  void set_bracket(int i, int j, const Vec3& v);

  /// Coefficients of [e_i, e_j] for any i, j.
  Vec3 bracket_basis(int i, int j) const;

  const Rational& c(int i, int j, int k) const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

private:
  // upper brackets [e1,e2], [e1,e3], [e2,e3] and their negatives
  std::array<Vec3, 3> c_;
  std::array<Vec3, 3> mirror_;
  static int slot(int i, int j); // i < j
};

/// Bilinear extension of the bracket tables: result_k = sum_{i,j} c(i,j,k) u_i v_j.
Vec3 bracket(const StructureConstants& sc, const Vec3& u, const Vec3& v);

/// Result of evaluating the Jacobi identity on the frame triple (e1,e2,e3).
struct JacobiReport {
  bool ok = true;
  /// Present when ok is false: 1-based triple and the nonvanishing cyclic sum.
  std::optional<std::array<int, 3>> violating_triple;
  Vec3 defect = Vec3::Zero();

  std::string describe() const;
};

/// Checks [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 exactly.
/// Antisymmetry is structural, so the one frame triple decides the identity.
JacobiReport check_jacobi(const StructureConstants& sc);

} // namespace bott

#endif
