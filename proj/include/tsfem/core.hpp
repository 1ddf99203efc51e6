#pragma once

#include <complex>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace tsfem {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};
inline constexpr double PI = 3.14159265358979323846;

// principal square root: nonnegative real part; on the branch cut
// (negative real axis) the imaginary part is taken positive.
inline cplx csqrt(cplx z) {
  cplx r = std::sqrt(z);
  if (r.real() < 0.0) r = -r;
  if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
  return r;
}

inline cplx ccoth(cplx z) {
  if (z == cplx(0.0, 0.0))
    throw std::domain_error("coth: zero argument");
  // cosh/sinh overflow together for large |Re z|; use the stable form
  double xr = z.real();
  if (std::abs(xr) > 350.0) return cplx(xr > 0 ? 1.0 : -1.0, 0.0);
  return std::cosh(z) / std::sinh(z);
}

inline bool cfinite(cplx z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// ---------------------------------------------------------------------------
// dimensionless groups for the single-mode convection-diffusion problem
//   Peclet      P     = a L / (2 kappa)        (domain scale L)
//   Womersley   W     = L sqrt(omega / kappa)
//   cell Peclet alpha = a h / (2 kappa)        (mesh scale h)
//   frequency   beta  = omega h^2 / (6 kappa)
// identities kept exact in floating point: alpha = P h / L, 6 beta = W^2 (h/L)^2
// ---------------------------------------------------------------------------

struct Groups {
  double P = 0.0, W = 0.0, alpha = 0.0, beta = 0.0;
};

inline Groups groups_from_physical(double a, double omega, double kappa,
                                   double L, double h) {
  if (kappa <= 0.0) throw std::domain_error("groups: kappa must be positive");
  Groups g;
  g.P = a * L / (2.0 * kappa);
  g.W = L * std::sqrt(omega / kappa);
  g.alpha = a * h / (2.0 * kappa);
  g.beta = omega * h * h / (6.0 * kappa);
  return g;
}

// recover (a, omega) for given kappa and scales; inverse of the above
inline double velocity_from_peclet(double P, double kappa, double L) {
  return 2.0 * kappa * P / L;
}
inline double velocity_from_alpha(double alpha, double kappa, double h) {
  return 2.0 * kappa * alpha / h;
}
inline double omega_from_womersley(double W, double kappa, double L) {
  return kappa * W * W / (L * L);
}
inline double omega_from_beta(double beta, double kappa, double h) {
  return 6.0 * kappa * beta / (h * h);
}

}  // namespace tsfem
