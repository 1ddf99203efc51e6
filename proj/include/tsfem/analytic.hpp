#pragma once

#include "tsfem/core.hpp"
#include "tsfem/method.hpp"

namespace tsfem {

// exact single-mode solution on the unit interval with phi(0)=0, phi(1)=1:
//   phi(xi) = exp(r1 (xi-1)) (1 - exp(-2 s xi)) / (1 - exp(-2 s)),
//   s = sqrt(P^2 + i W^2), r1 = P + s  (Re r1 >= 0 >= Re r2, overflow-safe)
// P = W = 0 degenerates to phi = xi (flagged); |s| < 1e-6 uses a series branch.
struct Exact1D {
  cplx value;
  bool degenerate;
};
Exact1D exact_1d(double xi, double P, double W);

// closed-form nodal solution of the Galerkin scheme on a uniform N-element
// mesh with phi_0 = 0, phi_N = 1:
//   rho_{1,2} = (1 + 2 i beta +- sqrt(alpha^2 - 3 beta^2 + 6 i beta)) / (1 - alpha - i beta)
//   phi_A = (rho1^A - rho2^A) / (rho1^N - rho2^N)
// complex (alpha, beta) admitted so effective-coefficient oracles reuse it.
cplx galerkin_nodal_1d(int A, int N, cplx alpha, cplx beta);
std::pair<cplx, cplx> galerkin_nodal_rho(cplx alpha, cplx beta);

// exact separated-series solution on the unit square with
// phi(x,0) = 0, phi(x,1) = 1, phi(0,y) = 1, phi(1,y) = 0, flow along +x
cplx exact_2d(double xi, double eta, double P, double W, int nterms = 200);

// complex coefficients (omega_hat, a_hat, kappa_hat) such that the
// stabilized 1D scheme equals the Galerkin scheme with these coefficients
struct EffectiveCoeffs {
  cplx omega_hat, a_hat, kappa_hat;
};
EffectiveCoeffs effective_coefficients(Method m, double a, double omega,
                                       double kappa, double tau,
                                       double tau_diff, cplx omega_hat_asu);

}  // namespace tsfem
