#pragma once

#include <functional>

#include "tsfem/core.hpp"
#include "tsfem/mesh.hpp"
#include "tsfem/method.hpp"

namespace tsfem {

struct PhysicalParams {
  Vec3 velocity;                    // global convection velocity
  std::vector<Vec3> elem_velocity;  // optional per-element override
  double omega = 0.0;
  double kappa = 1.0;

  Vec3 a(int e) const {
    return elem_velocity.empty() ? velocity : elem_velocity[e];
  }
};

struct QuadPoint {
  double xi[3];
  double w;
};

// line2: 2-point Gauss; quad4: 2x2 Gauss; tet4: 4-point degree-2 rule
int quad_rule(CellKind kind, QuadPoint out[4]);

// shape functions, physical gradients and metric at one parent point
struct ShapeEval {
  int nv = 0;
  double N[4] = {};
  Vec3 grad[4] = {};
  double detJw = 0.0;  // |det J| times the quadrature weight
  Vec3 xyz;            // physical location of the point
  double G[3][3] = {}; // (dxi/dx)^T (dxi/dx)
};
ShapeEval shape_eval(const Mesh& m, int e, const QuadPoint& qp);

// per-element stabilization coefficients; exact_1d modes demand line elements
struct ElemCoefs {
  double tau = 0.0;
  double tau_diff = 0.0;
  cplx omega_hat;  // equals omega for non-ASU methods
  cplx kasu;       // zero for non-ASU methods
};
ElemCoefs element_coefs(const Mesh& m, int e, const PhysicalParams& p,
                        const MethodOptions& opt);

// complex element matrix and load vector for one element; RD variants return
// their base scheme here (the reconstruction correction is global)
struct ElementSystem {
  int nv = 0;
  cplx K[4][4] = {};
  cplx F[4] = {};
};
ElementSystem element_matrix(const Mesh& m, int e, const PhysicalParams& p,
                             const MethodOptions& opt,
                             const std::function<cplx(const Vec3&)>& source);

}  // namespace tsfem
