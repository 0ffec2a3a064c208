#ifndef BOTT_LINALG_HPP
#define BOTT_LINALG_HPP

#include "bott/eigen_support.hpp"

#include <vector>

namespace bott {

struct RrefResult {
  MatX matrix;                ///< reduced row-echelon form
  std::vector<Index> pivots;  ///< pivot column per nonzero row, strictly increasing
  Index rank = 0;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
/// Pivot choice is the first nonzero entry in column order, so the result
/// is deterministic (and no magnitude pivoting is needed: arithmetic is exact).
RrefResult rref(const MatX& m);

Index rank(const MatX& m);

/// Basis of a subspace of the 3-dimensional coefficient space, held in a
/// reduced column-echelon normal form: every vector has pivot entry 1,
/// zeros in the other vectors' pivot rows, and pivot rows strictly increase.
/// Two computations of the same subspace therefore compare equal.
struct SubspaceBasis {
  Index dim = 0;
  std::vector<Vec3> vectors;

  bool operator==(const SubspaceBasis& other) const;
};

/// Exact kernel of m (m must have 3 columns). dim = 3 - rank(m) and every
/// returned vector satisfies m*v = 0 with exact equality.
SubspaceBasis nullspace(const MatX& m);

/// True when the stacked columns are linearly independent.
bool linearly_independent(const std::vector<Vec3>& vectors);

} // namespace bott

#endif
