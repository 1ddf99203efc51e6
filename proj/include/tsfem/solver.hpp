#pragma once

#include <vector>

#include "tsfem/core.hpp"

namespace tsfem {

struct Csr {
  int n = 0;
  std::vector<int> ptr, col;
  std::vector<double> val;

  void matvec(const std::vector<double>& x, std::vector<double>& y) const;
};

// build from per-row column->value maps
Csr csr_from_rows(const std::vector<std::vector<std::pair<int, double>>>& rows);

struct GmresOptions {
  double tol = 1e-8;        // relative residual target
  int restart = 200;
  int max_iters = 1000;     // total inner iterations across restarts
  enum class Precond { None, Jacobi } precond = Precond::Jacobi;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;        // total inner iterations
  double rel_residual = 0.0; // true ||b - Ax|| / ||b|| at exit
  std::vector<double> residual_history;  // per-iteration relative estimates
};

// restarted GMRES, right-preconditioned so the recurrence tracks the true
// residual; x is both the initial guess and the result (best iterate on
// non-convergence)
SolveReport gmres(const Csr& A, const std::vector<double>& b,
                  std::vector<double>& x, const GmresOptions& opt);

// dense direct solves used as small-system oracles
std::vector<double> lu_solve(std::vector<std::vector<double>> A,
                             std::vector<double> b);
std::vector<cplx> lu_solve(std::vector<std::vector<cplx>> A,
                           std::vector<cplx> b);

}  // namespace tsfem
