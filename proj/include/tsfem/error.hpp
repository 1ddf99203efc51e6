#pragma once

#include "tsfem/fem.hpp"

namespace tsfem {

struct ErrorPair {
  double rel_sq = 0.0;  // ||phi_h - phi||^2 / ||phi||^2
  double rel = 0.0;     // unsquared ratio
};

// element-quadrature L2 error of the interpolated nodal field against a
// pointwise oracle; throws if the oracle norm vanishes
ErrorPair l2_error(const Mesh& m, const std::vector<cplx>& field,
                   const std::function<cplx(const Vec3&)>& oracle);

// discrete (lumped-mass weighted) nodal L2 error against the oracle sampled
// at the nodes. Unlike l2_error this carries no interpolation error, so it is
// the right functional for refinement studies of under-resolved layers, where
// the interpolation error of the layer itself floors the quadrature norm at
// O(sqrt(h)) no matter how good the nodal values are.
ErrorPair nodal_l2_error(const Mesh& m, const std::vector<cplx>& field,
                         const std::function<cplx(const Vec3&)>& oracle);

}  // namespace tsfem
