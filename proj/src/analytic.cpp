#include "tsfem/analytic.hpp"

#include "tsfem/tau.hpp"

namespace tsfem {

Exact1D exact_1d(double xi, double P, double W) {
  if (xi < -1e-12 || xi > 1.0 + 1e-12)
    throw std::domain_error("exact_1d: xi outside [0,1]");
  cplx s = csqrt(cplx(P * P, W * W));
  if (std::abs(s) < 1e-6) {
    // phi = exp(P(xi-1)) sinh(s xi)/sinh(s) ~ xi (1 + s^2(xi^2-1)/6)
    bool degen = (P == 0.0 && W == 0.0);
    cplx corr = 1.0 + s * s * (xi * xi - 1.0) / 6.0;
    return {std::exp(cplx(P * (xi - 1.0), 0.0)) * xi * corr, degen};
  }
  cplx r1 = P + s;  // Re r1 >= 0, so every exponent below has Re <= 0
  cplx num = std::exp(r1 * (xi - 1.0)) * (1.0 - std::exp(-2.0 * s * xi));
  cplx den = 1.0 - std::exp(-2.0 * s);
  return {num / den, false};
}

std::pair<cplx, cplx> galerkin_nodal_rho(cplx alpha, cplx beta) {
  cplx ib = I * beta;
  cplx den = 1.0 - alpha - ib;
  if (std::abs(den) == 0.0)
    throw std::domain_error("galerkin_nodal_rho: 1 - alpha - i beta vanishes");
  cplx disc = csqrt(alpha * alpha - 3.0 * beta * beta + 6.0 * ib);
  cplx r1 = (1.0 + 2.0 * ib + disc) / den;
  cplx r2 = (1.0 + 2.0 * ib - disc) / den;
  return {r1, r2};
}

cplx galerkin_nodal_1d(int A, int N, cplx alpha, cplx beta) {
  if (N < 1 || A < 0 || A > N)
    throw std::domain_error("galerkin_nodal_1d: need 0 <= A <= N, N >= 1");
  auto [r1, r2] = galerkin_nodal_rho(alpha, beta);
  if (std::abs(r2) > std::abs(r1)) std::swap(r1, r2);
  // scaled by r1^-N so all powers stay bounded: |r2/r1| <= 1, A - N <= 0
  cplx q = r2 / r1;
  cplx den = 1.0 - std::pow(q, double(N));
  if (std::abs(den) < 1e-14)
    throw std::domain_error("galerkin_nodal_1d: rho1^N = rho2^N (singular)");
  cplx num = std::pow(r1, double(A - N)) * (1.0 - std::pow(q, double(A)));
  return num / den;
}

cplx exact_2d(double xi, double eta, double P, double W, int nterms) {
  if (W <= 0.0) throw std::domain_error("exact_2d: requires W > 0");
  if (nterms < 1) throw std::domain_error("exact_2d: nterms must be >= 1");
  // transverse part V(eta) = sinh(z eta)/sinh(z), z = sqrt(i) W
  cplx z = csqrt(I) * W;
  cplx V = std::exp(z * (eta - 1.0)) * (1.0 - std::exp(-2.0 * z * eta))
           / (1.0 - std::exp(-2.0 * z));
  cplx iW2(0.0, W * W);
  cplx sum = 0.0;
  for (int n = 1; n <= nterms; ++n) {
    double npi = n * PI;
    double cn = (n % 2 == 0) ? 1.0 : -1.0;  // cos(n pi)
    double an = 2.0 * (1.0 - cn) / npi;
    cplx bn = 2.0 * npi * cn / (iW2 + npi * npi);
    cplx s = csqrt(cplx(P * P, 0.0) + iW2 + npi * npi);
    cplx rp = P + s, rm = P - s;  // Re rp >= 0 >= Re rm
    // coefficients rescaled by exp(-rp) so every exponent has Re <= 0
    cplx den = 1.0 - std::exp(-2.0 * s);
    cplx termA = ((an + bn) - bn * std::exp(-rp)) * std::exp(rm * xi);
    cplx termB = (bn - (an + bn) * std::exp(rm)) * std::exp(rp * (xi - 1.0));
    sum += (termA + termB) / den * std::sin(npi * eta);
  }
  return V + sum;
}

EffectiveCoeffs effective_coefficients(Method m, double a, double omega,
                                       double kappa, double tau,
                                       double tau_diff, cplx omega_hat_asu) {
  cplx iwt = I * (omega * tau);
  EffectiveCoeffs c{cplx(omega), cplx(a), cplx(kappa)};
  switch (m) {
    case Method::Galerkin:
      break;
    case Method::Supg:
      c.a_hat = (1.0 - iwt) * a;
      c.kappa_hat = kappa + a * a * tau;
      break;
    case Method::VmsGls:
      c.omega_hat = (1.0 - iwt) * omega;
      c.a_hat = (1.0 - 2.0 * iwt) * a;
      c.kappa_hat = kappa + a * a * tau;
      break;
    case Method::Asu:
      c.omega_hat = omega_hat_asu;
      c.kappa_hat = kappa + kappa_asu(omega_hat_asu, tau_diff, kappa) + a * a * tau;
      break;
    default:
      throw std::invalid_argument("effective_coefficients: RD variants have no closed form");
  }
  return c;
}

}  // namespace tsfem
