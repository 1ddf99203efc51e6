#include <cmath>
#include <complex>

#include "doctest.h"
#include "tsfem/analytic.hpp"
#include "tsfem/assembly.hpp"
#include "tsfem/fem.hpp"
#include "tsfem/mesh.hpp"

using namespace tsfem;

namespace {

// compare every interior row of the assembled stabilized system against the
// three-point stencil of the Galerkin scheme with the method's effective
// complex coefficients, then compare the solved nodal values against the
// closed-form nodal solution evaluated at the effective cell groups
void check_effective(Method meth, double alpha, double beta) {
  CAPTURE(method_name(meth));
  CAPTURE(alpha);
  CAPTURE(beta);
  const int N = 16;
  Mesh m = uniform_line(N, 1.0);
  const double h = 1.0 / N, kappa = 1.0;
  const double a = velocity_from_alpha(alpha, kappa, h);
  const double omega = omega_from_beta(beta, kappa, h);

  Problem p;
  p.mesh = &m;
  p.params.velocity = {a, 0, 0};
  p.params.omega = omega;
  p.params.kappa = kappa;
  p.dirichlet = {{"left", 0.0}, {"right", 1.0}};
  MethodOptions opt = default_options(meth, 1);

  ElemCoefs ec = element_coefs(m, 0, p.params, opt);
  EffectiveCoeffs c = effective_coefficients(meth, a, omega, kappa, ec.tau,
                                             ec.tau_diff, ec.omega_hat);

  cplx lo = I * c.omega_hat * h / 6.0 - c.a_hat / 2.0 - c.kappa_hat / h;
  cplx di = 4.0 * I * c.omega_hat * h / 6.0 + 2.0 * c.kappa_hat / h;
  cplx hi = I * c.omega_hat * h / 6.0 + c.a_hat / 2.0 - c.kappa_hat / h;

  ComplexSystem s = assemble_complex(p, opt, /*apply_dirichlet=*/false);
  double scale = std::abs(di);
  for (int A = 1; A < N; ++A) {
    CAPTURE(A);
    CHECK(std::abs(s.rows[A].at(A - 1) - lo) / scale < 1e-13);
    CHECK(std::abs(s.rows[A].at(A) - di) / scale < 1e-13);
    CHECK(std::abs(s.rows[A].at(A + 1) - hi) / scale < 1e-13);
  }

  // nodal solution == closed form at the effective complex groups
  GmresOptions g;
  g.tol = 1e-13;
  g.max_iters = 500;
  SolveReport rep;
  std::vector<cplx> u = solve(p, opt, g, &rep);
  REQUIRE(rep.converged);
  cplx alpha_hat = c.a_hat * h / (2.0 * c.kappa_hat);
  cplx beta_hat = c.omega_hat * h * h / (6.0 * c.kappa_hat);
  double worst = 0.0;
  for (int A = 0; A <= N; ++A)
    worst = std::max(worst,
                     std::abs(u[A] - galerkin_nodal_1d(A, N, alpha_hat, beta_hat)));
  CHECK(worst < 1e-10);
}

}  // namespace

TEST_CASE("stabilized schemes equal Galerkin with effective coefficients") {
  for (Method meth : {Method::Galerkin, Method::Supg, Method::VmsGls,
                      Method::Asu}) {
    check_effective(meth, 2.0, 0.7);
    check_effective(meth, 5.0, 0.1);
    check_effective(meth, 0.5, 1.5);
  }
}

TEST_CASE("steady limit: effective coefficients with omega = 0") {
  // beta = 0 keeps the convection and diffusion modifications only
  check_effective(Method::Supg, 3.0, 0.0);
  check_effective(Method::VmsGls, 3.0, 0.0);
}

TEST_CASE("effective_coefficients: closed-form values") {
  const double a = 2.0, omega = 3.0, kappa = 0.5, tau = 0.1, td = 0.04;
  cplx what(2.9, 0.4);

  EffectiveCoeffs g = effective_coefficients(Method::Galerkin, a, omega, kappa,
                                             tau, td, what);
  CHECK(g.omega_hat == cplx(omega, 0.0));
  CHECK(g.a_hat == cplx(a, 0.0));
  CHECK(g.kappa_hat == cplx(kappa, 0.0));

  EffectiveCoeffs s = effective_coefficients(Method::Supg, a, omega, kappa,
                                             tau, td, what);
  CHECK(std::abs(s.omega_hat - cplx(omega, 0.0)) < 1e-15);
  CHECK(std::abs(s.a_hat - (1.0 - I * omega * tau) * a) < 1e-14);
  CHECK(std::abs(s.kappa_hat - (kappa + a * a * tau)) < 1e-14);

  EffectiveCoeffs v = effective_coefficients(Method::VmsGls, a, omega, kappa,
                                             tau, td, what);
  CHECK(std::abs(v.omega_hat - (1.0 - I * omega * tau) * omega) < 1e-14);
  CHECK(std::abs(v.a_hat - (1.0 - 2.0 * I * omega * tau) * a) < 1e-14);
  CHECK(std::abs(v.kappa_hat - (kappa + a * a * tau)) < 1e-14);

  EffectiveCoeffs u = effective_coefficients(Method::Asu, a, omega, kappa,
                                             tau, td, what);
  CHECK(std::abs(u.omega_hat - what) < 1e-15);
  CHECK(std::abs(u.a_hat - cplx(a, 0.0)) < 1e-15);
  // kappa + 2 i omega_hat tau_diff kappa + a^2 tau
  cplx want = kappa + 2.0 * I * what * td * kappa + a * a * tau;
  CHECK(std::abs(u.kappa_hat - want) < 1e-14);

  CHECK_THROWS_AS(effective_coefficients(Method::RdSupg, a, omega, kappa, tau,
                                         td, what),
                  std::invalid_argument);
}
