#pragma once

#include "tsfem/core.hpp"

namespace tsfem {

// optimal 1D stabilization parameter (h/2a)(coth(alpha) - 1/alpha);
// even in a, series branch below |alpha| = 1e-6, a = 0 gives h^2/(12 kappa)
double tau_exact_1d(double a, double kappa, double h);

// combined inverse-scale form 1/sqrt(tc^-2 + td^-2); throws if both scales zero
double tau_approx(double tau_conv_inv, double tau_diff_inv);

// inverse scales from the element metric tensor G (symmetric, dim x dim):
//   tau_conv^-2 = a.G.a, tau_diff^-2 = 9 kappa^2 (G:G)
double tau_conv_inv_from_metric(const Vec3& a, const double G[3][3], int dim);
double tau_diff_inv_from_metric(double kappa, const double G[3][3], int dim);

// frequency limiter threshold 1/(pi omega^2 tau_diff); +inf when omega = 0
double tau_max(double omega, double tau_diff);

// discrete-dispersion-matched frequency for the ASU scheme,
// exact 1D form; beta = 0 returns omega, series branch below |alpha| = 1e-6
cplx omega_hat_exact(double alpha, double beta, double omega);

// first-order phase approximation omega * exp(i omega tau),
// with tau optionally clipped at tau_max(omega, tau_diff)
cplx omega_hat_approx(double omega, double tau, double tau_diff, bool limiter);

// complex diffusivity added by the ASU scheme: 2 i omega_hat tau_diff kappa
cplx kappa_asu(cplx omega_hat, double tau_diff, double kappa);

// nodally-exact effective groups for the ASU scheme:
//   alpha_hat = 3 sinh(alpha) / (cosh(gamma) + 2 cosh(alpha))
//   i beta_hat = (cosh(gamma) - cosh(alpha)) / (cosh(gamma) + 2 cosh(alpha))
// with gamma = sqrt(alpha^2 + 6 i beta); overflow-safe for large |alpha|
struct AsuHatGroups {
  cplx alpha_hat;
  cplx beta_hat;
};
AsuHatGroups asu_hat_groups(double alpha, double beta);

}  // namespace tsfem
