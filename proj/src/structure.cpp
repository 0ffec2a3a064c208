#include "bott/structure.hpp"

#include <sstream>
#include <stdexcept>

namespace bott {

int StructureConstants::slot(int i, int j) {
  if (i == 0 && j == 1) return 0;
  if (i == 0 && j == 2) return 1;
  if (i == 1 && j == 2) return 2;
  throw std::logic_error("StructureConstants: bad index pair");
}

void StructureConstants::set_bracket(int i, int j, const Vec3& v) {
  int s = slot(i, j);
  c_[static_cast<std::size_t>(s)] = v;
  mirror_[static_cast<std::size_t>(s)] = -v;
}

Vec3 StructureConstants::bracket_basis(int i, int j) const {
  if (i == j) return Vec3::Zero();
  if (i < j) return c_[static_cast<std::size_t>(slot(i, j))];
  return mirror_[static_cast<std::size_t>(slot(j, i))];
}

const Rational& StructureConstants::c(int i, int j, int k) const {
  static const Rational zero(0);
  if (i == j) return zero;
  const Vec3& v = i < j ? c_[static_cast<std::size_t>(slot(i, j))]
                        : mirror_[static_cast<std::size_t>(slot(j, i))];
  return v(k);
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  for (int s = 0; s < 3; ++s)
    if (!exactly_equal(a.c_[static_cast<std::size_t>(s)], b.c_[static_cast<std::size_t>(s)]))
      return false;
  return true;
}

Vec3 bracket(const StructureConstants& sc, const Vec3& u, const Vec3& v) {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i) {
    if (u(i).is_zero()) continue;
    for (int j = 0; j < 3; ++j) {
      if (i == j || v(j).is_zero()) continue;
      out += u(i) * v(j) * sc.bracket_basis(i, j);
    }
  }
  return out;
}

JacobiReport check_jacobi(const StructureConstants& sc) {
  JacobiReport report;
  Vec3 e0 = basis_vector(0), e1 = basis_vector(1), e2 = basis_vector(2);
  Vec3 defect = bracket(sc, bracket(sc, e0, e1), e2) + bracket(sc, bracket(sc, e1, e2), e0) +
                bracket(sc, bracket(sc, e2, e0), e1);
  if (!exactly_zero(defect)) {
    report.ok = false;
    report.violating_triple = {1, 2, 3};
    report.defect = defect;
  }
  return report;
}

std::string JacobiReport::describe() const {
  if (ok) return "Jacobi identity holds";
  std::ostringstream os;
  os << "Jacobi identity fails on triple (e" << (*violating_triple)[0] << ",e"
     << (*violating_triple)[1] << ",e" << (*violating_triple)[2] << "): cyclic sum = ("
     << defect(0) << ", " << defect(1) << ", " << defect(2) << ")";
  return os.str();
}

} // namespace bott
