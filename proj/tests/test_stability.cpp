#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "tsfem/mesh.hpp"
#include "tsfem/stability.hpp"

using namespace tsfem;

namespace {

Problem line_problem(const Mesh& m, double alpha, double beta) {
  Problem p;
  p.mesh = &m;
  const double h = 1.0 / m.n_elems();
  p.params.velocity = {velocity_from_alpha(alpha, 1.0, h), 0, 0};
  p.params.omega = omega_from_beta(beta, 1.0, h);
  p.params.kappa = 1.0;
  p.dirichlet = {{"left", 0.0}, {"right", 1.0}};
  return p;
}

// worst relative gap between the matrix quadratic form and the closed-form
// energy over a batch of random interior fields
double worst_energy_gap(const Problem& p, const MethodOptions& opt,
                        int n_fields, unsigned seed) {
  ComplexSystem s = assemble_complex(p, opt, /*apply_dirichlet=*/false);
  AssembledSystem rs = to_real_block(s);
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n_fields; ++k) {
    std::vector<cplx> w =
        random_probe_field(s.n, s.dirichlet_nodes, rng);
    std::vector<double> c = to_real_vector(w);
    double qf = quadratic_form(rs.matrix, c);
    double ea = analytic_energy(*p.mesh, w, p.params, opt);
    worst = std::max(worst, std::abs(qf - ea) / std::max(1.0, std::abs(qf)));
  }
  return worst;
}

}  // namespace

TEST_CASE("quadratic_form: small known matrix") {
  // A = [[2, 1], [0, 3]], c = (1, 2):  c^T A c = 2 + 2 + 0 + 12 = 16
  std::vector<std::vector<std::pair<int, double>>> rows = {
      {{0, 2.0}, {1, 1.0}}, {{1, 3.0}}};
  Csr A = csr_from_rows(rows);
  CHECK(quadratic_form(A, {1.0, 2.0}) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("random_probe_field: deterministic, bounded, constrained to zero") {
  std::mt19937_64 r1(99u), r2(99u);
  std::vector<int> constrained = {0, 3, 7};
  auto a = random_probe_field(8, constrained, r1);
  auto b = random_probe_field(8, constrained, r2);
  REQUIRE(a.size() == 8);
  CHECK(a == b);
  for (int c : constrained) CHECK(a[c] == cplx(0.0, 0.0));
  bool any_nonzero = false;
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(a[i].real()) <= 1.0);
    CHECK(std::abs(a[i].imag()) <= 1.0);
    if (std::abs(a[i]) > 0.0) any_nonzero = true;
  }
  CHECK(any_nonzero);
}

TEST_CASE("closed-form energies equal the matrix quadratic form in 1D") {
  Mesh m = uniform_line(16, 1.0);
  Problem p = line_problem(m, 3.0, 0.7);
  for (Method meth : {Method::Galerkin, Method::Supg, Method::VmsGls,
                      Method::Asu}) {
    CAPTURE(method_name(meth));
    CHECK(worst_energy_gap(p, default_options(meth, 1), 25, 5u) < 1e-9);
  }
}

TEST_CASE("closed-form energies equal the matrix quadratic form in 2D") {
  Mesh m = structured_quad(6, 6, 1.0);
  Problem p;
  p.mesh = &m;
  p.params.velocity = {2.0, 0.7, 0};
  p.params.omega = 3.0;
  p.params.kappa = 0.5;
  p.dirichlet = {{"left", 1.0}, {"top", 1.0}, {"bottom", 0.0}, {"right", 0.0}};
  for (Method meth : {Method::Galerkin, Method::Supg, Method::VmsGls,
                      Method::Asu}) {
    CAPTURE(method_name(meth));
    CHECK(worst_energy_gap(p, default_options(meth, 2), 15, 17u) < 1e-9);
  }
}

TEST_CASE("energy identity survives element-to-element tau variation") {
  // tetrahedra of varying size: the streamline cross term must be evaluated
  // element-locally or the identity breaks at the 1e-4 level
  Mesh m = cylinder_tet(0.5, 1.0, 4, 2);
  Problem p;
  p.mesh = &m;
  p.params.velocity = {0, 0, 2.0};
  p.params.omega = 3.0;
  p.params.kappa = 0.5;
  p.dirichlet = {{"inlet", 0.0}, {"outlet", 1.0}};
  p.neumann = {{"wall", 0.0}};
  for (Method meth : {Method::Galerkin, Method::Supg, Method::VmsGls,
                      Method::Asu}) {
    CAPTURE(method_name(meth));
    CHECK(worst_energy_gap(p, default_options(meth, 3), 10, 23u) < 1e-9);
  }
}

TEST_CASE("subscale scheme energy is nonnegative by construction") {
  Mesh m = uniform_line(24, 1.0);
  MethodOptions vms = default_options(Method::VmsGls, 1);
  for (double beta : {0.01, 1.0, 50.0}) {
    Problem p = line_problem(m, 10.0, beta);
    ComplexSystem s = assemble_complex(p, vms, false);
    std::mt19937_64 rng(31u);
    for (int k = 0; k < 50; ++k) {
      std::vector<cplx> w = random_probe_field(s.n, s.dirichlet_nodes, rng);
      CHECK(analytic_energy(m, w, p.params, vms) > -1e-12);
    }
  }
}

TEST_CASE("probe statistics: signs across schemes in the unsteady regime") {
  // alpha = 10, beta = 50: frequency dominates (omega h / a = 15)
  Mesh m = uniform_line(32, 1.0);
  Problem p = line_problem(m, 10.0, 50.0);

  ProbeStats g = probe_interior(p, default_options(Method::Galerkin, 1), 200, 42u);
  CHECK(g.min > 0.0);
  CHECK(g.min <= g.median);
  CHECK(g.energy_residual < 1e-9);

  ProbeStats v = probe_interior(p, default_options(Method::VmsGls, 1), 200, 42u);
  CHECK(v.min > 0.0);

  ProbeStats s = probe_interior(p, default_options(Method::Supg, 1), 200, 42u);
  CHECK(s.min < 0.0);

  // without the frequency limiter the augmented scheme also loses positivity
  // in this regime (1D default keeps the limiter off)
  ProbeStats u = probe_interior(p, default_options(Method::Asu, 1), 200, 42u);
  CHECK(u.min < 0.0);

  // in a diffusion-dominated regime every scheme stays positive
  Problem pd = line_problem(m, 0.5, 0.1);
  for (Method meth : {Method::Galerkin, Method::Supg, Method::VmsGls,
                      Method::Asu}) {
    CAPTURE(method_name(meth));
    CHECK(probe_interior(pd, default_options(meth, 1), 200, 42u).min > 0.0);
  }
}
