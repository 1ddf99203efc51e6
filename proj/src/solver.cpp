#include "tsfem/solver.hpp"

#include <algorithm>

namespace tsfem {

void Csr::matvec(const std::vector<double>& x, std::vector<double>& y) const {
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int k = ptr[i]; k < ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

Csr csr_from_rows(const std::vector<std::vector<std::pair<int, double>>>& rows) {
  Csr a;
  a.n = int(rows.size());
  a.ptr.resize(a.n + 1, 0);
  for (int i = 0; i < a.n; ++i) a.ptr[i + 1] = a.ptr[i] + int(rows[i].size());
  a.col.resize(a.ptr[a.n]);
  a.val.resize(a.ptr[a.n]);
  for (int i = 0; i < a.n; ++i) {
    int k = a.ptr[i];
    for (const auto& [j, v] : rows[i]) {
      a.col[k] = j;
      a.val[k] = v;
      ++k;
    }
  }
  return a;
}

namespace {

double nrm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double dotv(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

SolveReport gmres(const Csr& A, const std::vector<double>& b,
                  std::vector<double>& x, const GmresOptions& opt) {
  SolveReport rep;
  int n = A.n;
  if (x.size() != size_t(n)) x.assign(n, 0.0);
  double bnorm = nrm2(b);
  if (bnorm == 0.0) {
    x.assign(n, 0.0);
    rep.converged = true;
    rep.rel_residual = 0.0;
    rep.residual_history = {0.0};
    return rep;
  }
  std::vector<double> diag(n, 1.0);
  if (opt.precond == GmresOptions::Precond::Jacobi) {
    for (int i = 0; i < n; ++i)
      for (int k = A.ptr[i]; k < A.ptr[i + 1]; ++k)
        if (A.col[k] == i && A.val[k] != 0.0) diag[i] = A.val[k];
  }
  auto apply_minv = [&](std::vector<double>& v) {
    for (int i = 0; i < n; ++i) v[i] /= diag[i];
  };

  int m = std::max(1, opt.restart);
  std::vector<std::vector<double>> V;
  std::vector<std::vector<double>> H(m + 1, std::vector<double>(m, 0.0));
  std::vector<double> cs(m), sn(m), g(m + 1), r(n), w(n), t(n);

  while (rep.iterations < opt.max_iters) {
    A.matvec(x, r);
    for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
    double beta = nrm2(r);
    if (beta / bnorm <= opt.tol) {
      rep.converged = true;
      break;
    }
    V.assign(1, r);
    for (double& v : V[0]) v /= beta;
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;
    int j = 0;
    for (; j < m && rep.iterations < opt.max_iters; ++j) {
      t = V[j];
      apply_minv(t);
      A.matvec(t, w);
      for (int i = 0; i <= j; ++i) {  // modified Gram-Schmidt
        H[i][j] = dotv(w, V[i]);
        for (int k2 = 0; k2 < n; ++k2) w[k2] -= H[i][j] * V[i][k2];
      }
      H[j + 1][j] = nrm2(w);
      if (H[j + 1][j] > 0.0) {
        V.push_back(w);
        for (double& v : V.back()) v /= H[j + 1][j];
      } else {
        V.push_back(std::vector<double>(n, 0.0));  // lucky breakdown
      }
      for (int i = 0; i < j; ++i) {  // apply stored Givens rotations
        double h0 = cs[i] * H[i][j] + sn[i] * H[i + 1][j];
        double h1 = -sn[i] * H[i][j] + cs[i] * H[i + 1][j];
        H[i][j] = h0;
        H[i + 1][j] = h1;
      }
      double denom = std::hypot(H[j][j], H[j + 1][j]);
      cs[j] = denom == 0.0 ? 1.0 : H[j][j] / denom;
      sn[j] = denom == 0.0 ? 0.0 : H[j + 1][j] / denom;
      H[j][j] = denom;
      H[j + 1][j] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];
      ++rep.iterations;
      rep.residual_history.push_back(std::abs(g[j + 1]) / bnorm);
      if (std::abs(g[j + 1]) / bnorm <= opt.tol) {
        ++j;
        break;
      }
    }
    // back-substitute y from the j x j triangular system, update x
    std::vector<double> y(j, 0.0);
    for (int i = j - 1; i >= 0; --i) {
      double s = g[i];
      for (int k2 = i + 1; k2 < j; ++k2) s -= H[i][k2] * y[k2];
      y[i] = H[i][i] != 0.0 ? s / H[i][i] : 0.0;
    }
    t.assign(n, 0.0);
    for (int k2 = 0; k2 < j; ++k2)
      for (int i = 0; i < n; ++i) t[i] += y[k2] * V[k2][i];
    apply_minv(t);
    for (int i = 0; i < n; ++i) x[i] += t[i];
  }
  A.matvec(x, r);
  for (int i = 0; i < n; ++i) r[i] = b[i] - r[i];
  rep.rel_residual = nrm2(r) / bnorm;
  if (rep.rel_residual <= opt.tol) rep.converged = true;
  return rep;
}

std::vector<double> lu_solve(std::vector<std::vector<double>> A,
                             std::vector<double> b) {
  int n = int(b.size());
  std::vector<int> piv(n);
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
    piv[k] = p;
    std::swap(A[k], A[p]);
    std::swap(b[k], b[p]);
    if (A[k][k] == 0.0) throw std::runtime_error("lu_solve: singular matrix");
    for (int i = k + 1; i < n; ++i) {
      double f = A[i][k] / A[k][k];
      A[i][k] = 0.0;
      for (int j = k + 1; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= A[i][j] * b[j];
    b[i] /= A[i][i];
  }
  return b;
}

std::vector<cplx> lu_solve(std::vector<std::vector<cplx>> A,
                           std::vector<cplx> b) {
  int n = int(b.size());
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
    std::swap(A[k], A[p]);
    std::swap(b[k], b[p]);
    if (std::abs(A[k][k]) == 0.0) throw std::runtime_error("lu_solve: singular matrix");
    for (int i = k + 1; i < n; ++i) {
      cplx f = A[i][k] / A[k][k];
      A[i][k] = 0.0;
      for (int j = k + 1; j < n; ++j) A[i][j] -= f * A[k][j];
      b[i] -= f * b[k];
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    for (int j = i + 1; j < n; ++j) b[i] -= A[i][j] * b[j];
    b[i] /= A[i][i];
  }
  return b;
}

}  // namespace tsfem
