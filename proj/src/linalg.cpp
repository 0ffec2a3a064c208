#include "bott/linalg.hpp"

#include <stdexcept>

namespace bott {

RrefResult rref(const MatX& m) {
  RrefResult out;
  out.matrix = m;
  MatX& a = out.matrix;
  const Index rows = a.rows(), cols = a.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    Rational inv = a(row, col).inverse();
    for (Index c = col; c < cols; ++c) a(row, c) = a(row, c) * inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      Rational f = a(r, col);
      for (Index c = col; c < cols; ++c) a(r, c) = a(r, c) - f * a(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

Index rank(const MatX& m) { return rref(m).rank; }

bool SubspaceBasis::operator==(const SubspaceBasis& other) const {
  if (dim != other.dim) return false;
  for (Index i = 0; i < dim; ++i)
    if (!exactly_equal(vectors[static_cast<std::size_t>(i)],
                       other.vectors[static_cast<std::size_t>(i)]))
      return false;
  return true;
}

SubspaceBasis nullspace(const MatX& m) {
  if (m.cols() != 3) throw std::invalid_argument("nullspace: matrix must have 3 columns");
  RrefResult r = rref(m);
  SubspaceBasis out;
  out.dim = 3 - r.rank;
  std::vector<bool> is_pivot(3, false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  for (Index free_col = 0; free_col < 3; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    Vec3 v = Vec3::Zero();
    v(free_col) = Rational(1);
    for (Index pr = 0; pr < r.rank; ++pr) {
      Index pc = r.pivots[static_cast<std::size_t>(pr)];
      v(pc) = -r.matrix(pr, free_col);
    }
    out.vectors.push_back(v);
  }
  return out;
}

bool linearly_independent(const std::vector<Vec3>& vectors) {
  if (vectors.empty()) return true;
  MatX m(3, static_cast<Index>(vectors.size()));
  for (Index c = 0; c < m.cols(); ++c) m.col(c) = vectors[static_cast<std::size_t>(c)];
  return rank(m) == m.cols();
}

} // namespace bott
