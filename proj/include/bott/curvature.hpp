#ifndef BOTT_CURVATURE_HPP
#define BOTT_CURVATURE_HPP

#include "bott/connection.hpp"

#include <array>

namespace bott {

/// Curvature tensor of a frame connection:
///   R(e_i, e_j) e_k = nabla_{e_i} nabla_{e_j} e_k - nabla_{e_j} nabla_{e_i} e_k
///                   - nabla_{[e_i, e_j]} e_k,
/// stored as the coefficient vector r(i, j, k). Antisymmetric in (i, j).
class CurvatureTensor {
public:
  CurvatureTensor() {
    for (auto& plane : r_)
      for (auto& row : plane)
        for (auto& v : row) v = Vec3::Zero();
  }

  const Vec3& r(int i, int j, int k) const { return r_[i][j][k]; }
  Vec3& r(int i, int j, int k) { return r_[i][j][k]; }

private:
  std::array<std::array<std::array<Vec3, 3>, 3>, 3> r_;
};

CurvatureTensor curvature(const Connection& conn, const StructureConstants& sc);

/// 3x3 rational bilinear form; `symmetric` distinguishes the raw frame trace
/// rho (a Bott connection has torsion, so rho is genuinely asymmetric) from
/// its symmetrization Ric.
struct RicciForm {
  Mat3 m = Mat3::Zero();
  bool symmetric = false;

  Rational apply(const Vec3& x, const Vec3& y) const { return (x.transpose() * m * y)(0, 0); }
};

/// rho(e_i, e_j) = -g(R(e_i,e_1) e_j, e_1) - g(R(e_i,e_2) e_j, e_2)
///               + g(R(e_i,e_3) e_j, e_3).
RicciForm ricci_rho(const CurvatureTensor& r);

/// Ric = (rho + rho^T) / 2. Expects an asymmetric-flagged input.
RicciForm symmetrize(const RicciForm& rho);

} // namespace bott

#endif
