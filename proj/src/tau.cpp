#include "tsfem/tau.hpp"

namespace tsfem {

double tau_exact_1d(double a, double kappa, double h) {
  if (kappa <= 0.0) throw std::domain_error("tau_exact_1d: kappa must be positive");
  if (h <= 0.0) throw std::domain_error("tau_exact_1d: h must be positive");
  double alpha = a * h / (2.0 * kappa);
  if (std::abs(alpha) < 1e-6) {
    // (h/2a)(coth a - 1/a) = (h/2a)(a/3 - a^3/45 + ...) -> h^2/(12k) at a = 0
    return h * h / (12.0 * kappa) * (1.0 - alpha * alpha / 15.0);
  }
  double cth;
  if (std::abs(alpha) > 350.0) {
    cth = alpha > 0 ? 1.0 : -1.0;
  } else {
    cth = std::cosh(alpha) / std::sinh(alpha);
  }
  return h / (2.0 * a) * (cth - 1.0 / alpha);
}

double tau_approx(double tau_conv_inv, double tau_diff_inv) {
  if (tau_conv_inv == 0.0 && tau_diff_inv == 0.0)
    throw std::domain_error("tau_approx: both inverse scales are zero");
  return 1.0 / std::sqrt(tau_conv_inv * tau_conv_inv + tau_diff_inv * tau_diff_inv);
}

double tau_conv_inv_from_metric(const Vec3& a, const double G[3][3], int dim) {
  double s = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s += a[i] * G[i][j] * a[j];
  return std::sqrt(std::max(s, 0.0));
}

double tau_diff_inv_from_metric(double kappa, const double G[3][3], int dim) {
  double gg = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) gg += G[i][j] * G[i][j];
  return 3.0 * kappa * std::sqrt(gg);
}

double tau_max(double omega, double tau_diff) {
  if (omega == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (PI * omega * omega * tau_diff);
}

// stable pieces shared by omega_hat_exact and asu_hat_groups:
// gamma = sqrt(a^2 + 6 i beta), delta = gamma - a computed as 6 i beta/(gamma + a)
// so that cosh(gamma) - cosh(a) = 2 sinh((gamma+a)/2) sinh(delta/2) has no
// cancellation at small beta.
namespace {
struct GammaParts {
  cplx gamma, delta, u;  // u = (gamma + a)/2
};
GammaParts gamma_parts(double a_abs, double beta) {
  GammaParts p;
  p.gamma = csqrt(cplx(a_abs * a_abs, 6.0 * beta));
  p.delta = cplx(0.0, 6.0 * beta) / (p.gamma + a_abs);
  p.u = 0.5 * (p.gamma + a_abs);
  return p;
}
}  // namespace

cplx omega_hat_exact(double alpha, double beta, double omega) {
  if (beta == 0.0) return cplx(omega, 0.0);
  double a = std::abs(alpha);  // formula is even in alpha
  cplx ib(0.0, beta);
  if (a < 1e-6) {
    // limit (cosh(sqrt(6 i beta)) - 1)/(3 i beta) via 2 sinh^2(z/2)
    cplx z = csqrt(6.0 * ib);
    cplx sh = std::sinh(0.5 * z);
    return 2.0 * sh * sh / (3.0 * ib) * omega;
  }
  GammaParts p = gamma_parts(a, beta);
  // ratio sinh(u)/sinh(a), exponent-shifted for large a
  cplx ratio;
  if (a > 300.0) {
    cplx num = 1.0 - std::exp(-2.0 * p.u);
    double den = -std::expm1(-2.0 * a);
    ratio = std::exp(p.u - a) * num / den;
  } else {
    ratio = std::sinh(p.u) / std::sinh(a);
  }
  return (a / ib) * (2.0 * ratio * std::sinh(0.5 * p.delta)) / 3.0 * omega;
}

cplx omega_hat_approx(double omega, double tau, double tau_diff, bool limiter) {
  double t = tau;
  if (limiter) t = std::min(t, tau_max(omega, tau_diff));
  return omega * std::exp(I * (omega * t));
}

cplx kappa_asu(cplx omega_hat, double tau_diff, double kappa) {
  return 2.0 * I * omega_hat * tau_diff * kappa;
}

AsuHatGroups asu_hat_groups(double alpha, double beta) {
  double a = std::abs(alpha);
  double sgn = alpha < 0 ? -1.0 : 1.0;
  GammaParts p = gamma_parts(a, beta);
  AsuHatGroups out;
  if (a > 300.0) {
    // scale numerators and denominator by exp(-a)
    cplx den = std::exp(p.delta) * (1.0 + std::exp(-2.0 * p.gamma)) * 0.5
               + (1.0 + std::exp(-2.0 * a)) * 0.5 * 2.0;
    cplx num_a = 1.5 * (1.0 - std::exp(-2.0 * a));
    cplx num_b = std::exp(0.5 * p.delta) * (1.0 - std::exp(-2.0 * p.u))
                 * std::sinh(0.5 * p.delta);
    out.alpha_hat = sgn * num_a / den;
    out.beta_hat = -I * (num_b / den);
  } else {
    cplx den = std::cosh(p.gamma) + 2.0 * std::cosh(a);
    cplx diff = 2.0 * std::sinh(p.u) * std::sinh(0.5 * p.delta);
    out.alpha_hat = sgn * 3.0 * std::sinh(a) / den;
    out.beta_hat = -I * (diff / den);
  }
  return out;
}

}  // namespace tsfem
