#ifndef BOTT_COLLINEATION_HPP
#define BOTT_COLLINEATION_HPP

#include "bott/curvature.hpp"
#include "bott/groups.hpp"
#include "bott/linalg.hpp"

#include <array>
#include <utility>

namespace bott {

/// (L_V Ric)(e_i, e_j) = -Ric([V, e_i], e_j) - Ric(e_i, [V, e_j]).
/// The directional term V[Ric(X,Y)] drops out: Ric entries are constants on
/// the left-invariant frame. Output is symmetric whenever `ric` is.
RicciForm lie_derivative_ric(const RicciForm& ric, const StructureConstants& sc, const Vec3& v);

/// Fixed row order of the collineation system: the upper triangle of a
/// symmetric form, listed row by row (0-based index pairs).
inline constexpr std::array<std::pair<int, int>, 6> kSystemRows = {
    {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}}};

/// The 6x3 linear system whose kernel is the space of left-invariant Ricci
/// collineations: column k holds the upper-triangle entries of
/// lie_derivative_ric(ric, sc, e_k), so a * lambda stacks (L_V Ric)(e_i,e_j)
/// for V = lambda_1 e_1 + lambda_2 e_2 + lambda_3 e_3.
struct CollineationSystem {
  MatX a{6, 3};
};

CollineationSystem build_system(const RicciForm& ric, const StructureConstants& sc);

/// Full pipeline for a catalog group: Bott connection of the distribution,
/// curvature, Ricci, symmetrization, Lie-derivative system, exact kernel.
SubspaceBasis collineation_space(const GroupSpec& spec, const Distribution& dist);

/// Same pipeline from explicit structure constants (custom algebras).
SubspaceBasis collineation_space(const StructureConstants& sc, const Distribution& dist);

/// The symmetric Ricci form of the distribution's Bott connection.
RicciForm bott_ricci(const StructureConstants& sc, const Distribution& dist);

} // namespace bott

#endif
