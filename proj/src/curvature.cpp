#include "bott/curvature.hpp"

#include <stdexcept>

namespace bott {

CurvatureTensor curvature(const Connection& conn, const StructureConstants& sc) {
  CurvatureTensor out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Vec3 bracket_ij = sc.bracket_basis(i, j);
      for (int k = 0; k < 3; ++k) {
        Vec3 ek = basis_vector(k);
        Vec3 value = conn.derive(i, conn.derive(j, ek)) - conn.derive(j, conn.derive(i, ek)) -
                     conn.derive_along(bracket_ij, ek);
        out.r(i, j, k) = value;
      }
    }
  }
  return out;
}

RicciForm ricci_rho(const CurvatureTensor& r) {
  RicciForm out;
  out.symmetric = false;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Rational value(0);
      for (int k = 0; k < 3; ++k) {
        Vec3 ek = basis_vector(k);
        Rational term = metric(r.r(i, k, j), ek);
        // signs -, -, + over k = 1, 2, 3
        value += (k == 2 ? term : -term);
      }
      out.m(i, j) = value;
    }
  }
  return out;
}

RicciForm symmetrize(const RicciForm& rho) {
  if (rho.symmetric) throw std::logic_error("symmetrize: input already symmetric");
  RicciForm out;
  out.symmetric = true;
  const Rational half(1, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out.m(i, j) = half * (rho.m(i, j) + rho.m(j, i));
  return out;
}

} // namespace bott
