#include "tsfem/temporal.hpp"

#include "tsfem/solver.hpp"
#include "tsfem/tau.hpp"

namespace tsfem {

TemporalResult temporal_reference_1d(int n_elems, double alpha, double beta,
                                     int cycles, int steps_per_cycle,
                                     double kappa) {
  if (n_elems < 2 || cycles < 1 || steps_per_cycle < 8)
    throw std::domain_error("temporal_reference_1d: bad discretization");
  if (beta <= 0.0)
    throw std::domain_error("temporal_reference_1d: needs beta > 0");
  int n = n_elems + 1;
  double h = 1.0 / n_elems;
  double a = 2.0 * kappa * alpha / h;
  double omega = 6.0 * kappa * beta / (h * h);
  double tau = tau_approx(2.0 * std::abs(a) / h, 12.0 * kappa / (h * h));

  // semi-discrete SUPG: (M + tau a C^T) du/dt + (a C + kappa D + tau a^2 D) u = 0
  std::vector<std::vector<double>> Ms(n, std::vector<double>(n, 0.0)), Ks = Ms;
  for (int e = 0; e < n_elems; ++e) {
    int i = e, j = e + 1;
    double me[2][2] = {{h / 3.0, h / 6.0}, {h / 6.0, h / 3.0}};
    double ce[2][2] = {{-0.5, 0.5}, {-0.5, 0.5}};
    double de[2][2] = {{1.0 / h, -1.0 / h}, {-1.0 / h, 1.0 / h}};
    int id[2] = {i, j};
    for (int A = 0; A < 2; ++A)
      for (int B = 0; B < 2; ++B) {
        Ms[id[A]][id[B]] += me[A][B] + tau * a * ce[B][A];
        Ks[id[A]][id[B]] += a * ce[A][B] + (kappa + tau * a * a) * de[A][B];
      }
  }

  double T = 2.0 * PI / omega;
  double dt = T / steps_per_cycle;
  int nf = n - 2;  // free nodes 1..n-2; node 0 pinned at 0, node n-1 driven
  std::vector<std::vector<double>> A_ff(nf, std::vector<double>(nf));
  std::vector<double> A_fg(nf);  // coupling of free rows to the driven node
  std::vector<std::vector<double>> B_full(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) B_full[i][j] = Ms[i][j] / dt - 0.5 * Ks[i][j];
  for (int i = 0; i < nf; ++i) {
    for (int j = 0; j < nf; ++j)
      A_ff[i][j] = Ms[i + 1][j + 1] / dt + 0.5 * Ks[i + 1][j + 1];
    A_fg[i] = Ms[i + 1][n - 1] / dt + 0.5 * Ks[i + 1][n - 1];
  }

  TemporalResult res;
  res.steps_per_cycle = steps_per_cycle;
  res.cycles = cycles;
  std::vector<double> u(n, 0.0);
  std::vector<cplx> acc(n, cplx(0.0, 0.0));
  int total = cycles * steps_per_cycle;
  int proj_from = (cycles - 1) * steps_per_cycle;
  for (int step = 0; step < total; ++step) {
    double t1 = (step + 1) * dt;
    double g1 = std::cos(omega * t1);
    std::vector<double> rhs(nf);
    for (int i = 0; i < nf; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += B_full[i + 1][j] * u[j];
      rhs[i] = s - A_fg[i] * g1;
    }
    std::vector<double> uf = lu_solve(A_ff, rhs);
    for (int i = 0; i < nf; ++i) u[i + 1] = uf[i];
    u[0] = 0.0;
    u[n - 1] = g1;
    for (double v : u) res.max_norm = std::max(res.max_norm, std::abs(v));
    if (res.max_norm > 1e6) {
      res.diverged = true;
      break;
    }
    if (step >= proj_from) {
      cplx ph = std::exp(-I * (omega * t1)) * (2.0 / steps_per_cycle);
      for (int i = 0; i < n; ++i) acc[i] += u[i] * ph;
    }
  }
  res.projected = std::move(acc);
  return res;
}

}  // namespace tsfem
