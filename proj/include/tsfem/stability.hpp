#pragma once

#include <random>

#include "tsfem/assembly.hpp"

namespace tsfem {

// c^T A c
double quadratic_form(const Csr& A, const std::vector<double>& c);

// closed-form tangent energies, integrated with the assembly quadrature.
// For a complex nodal field w vanishing on the Dirichlet sets these equal
// the quadratic form of the interior (Dirichlet-eliminated) block matrix:
//   Galerkin: kappa |grad w|^2
//   SUPG:     + tau |a.grad w|^2 - tau omega [(a.grad w_r) w_i - (a.grad w_i) w_r]
//   VMS/GLS:  kappa |grad w|^2 + tau (a.grad w_r - omega w_i)^2
//                               + tau (omega w_r + a.grad w_i)^2
//   ASU:      -Im(omega_hat) |w|^2 + (kappa + Re kappa_asu) |grad w|^2
//                               + tau |a.grad w|^2
// All forms are element-local (tau may vary between elements); only the
// Galerkin convection term relies on global cancellation, which holds for
// constant velocity with a.n = 0 on non-Dirichlet boundary.
double analytic_energy(const Mesh& m, const std::vector<cplx>& w,
                       const PhysicalParams& p, const MethodOptions& opt);

// random probe field: uniform [-1,1] on both parts of every free node,
// zero at constrained nodes
std::vector<cplx> random_probe_field(int n_nodes,
                                     const std::vector<int>& constrained,
                                     std::mt19937_64& rng);

struct ProbeStats {
  double min = 0.0, median = 0.0;
  double energy_residual = 0.0;  // worst |probe - analytic| / max(1, |probe|)
};

// probe the interior block of the assembled (un-replaced) system
ProbeStats probe_interior(const Problem& p, const MethodOptions& opt,
                          int n_probes, unsigned seed);

}  // namespace tsfem
