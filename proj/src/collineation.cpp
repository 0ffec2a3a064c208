#include "bott/collineation.hpp"

#include <stdexcept>

namespace bott {

RicciForm lie_derivative_ric(const RicciForm& ric, const StructureConstants& sc, const Vec3& v) {
  if (!ric.symmetric) throw std::logic_error("lie_derivative_ric: Ric must be symmetric");
  RicciForm out;
  out.symmetric = true;
  for (int i = 0; i < 3; ++i) {
    Vec3 vi = bracket(sc, v, basis_vector(i));
    for (int j = 0; j < 3; ++j) {
      Vec3 vj = bracket(sc, v, basis_vector(j));
      out.m(i, j) = -ric.apply(vi, basis_vector(j)) - ric.apply(basis_vector(i), vj);
    }
  }
  return out;
}

CollineationSystem build_system(const RicciForm& ric, const StructureConstants& sc) {
  if (!ric.symmetric) throw std::logic_error("build_system: Ric must be symmetric");
  CollineationSystem sys;
  for (int k = 0; k < 3; ++k) {
    RicciForm column = lie_derivative_ric(ric, sc, basis_vector(k));
    for (std::size_t row = 0; row < kSystemRows.size(); ++row) {
      auto [i, j] = kSystemRows[row];
      sys.a(static_cast<Index>(row), k) = column.m(i, j);
    }
  }
  return sys;
}

RicciForm bott_ricci(const StructureConstants& sc, const Distribution& dist) {
  Connection conn = bott(sc, dist);
  CurvatureTensor r = curvature(conn, sc);
  return symmetrize(ricci_rho(r));
}

SubspaceBasis collineation_space(const StructureConstants& sc, const Distribution& dist) {
  RicciForm ric = bott_ricci(sc, dist);
  CollineationSystem sys = build_system(ric, sc);
  return nullspace(sys.a);
}

SubspaceBasis collineation_space(const GroupSpec& spec, const Distribution& dist) {
  return collineation_space(build_group(spec), dist);
}

} // namespace bott
