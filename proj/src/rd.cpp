#include "tsfem/rd.hpp"

namespace tsfem {

namespace {

// dense LU with partial pivoting, factored once and solved many times
struct DenseLU {
  int n;
  std::vector<std::vector<double>> A;
  std::vector<int> piv;

  explicit DenseLU(std::vector<std::vector<double>> M) : n(int(M.size())), A(std::move(M)), piv(n) {
    for (int k = 0; k < n; ++k) {
      int p = k;
      for (int i = k + 1; i < n; ++i)
        if (std::abs(A[i][k]) > std::abs(A[p][k])) p = i;
      piv[k] = p;
      std::swap(A[k], A[p]);
      if (A[k][k] == 0.0) throw std::runtime_error("rd: singular mass matrix");
      for (int i = k + 1; i < n; ++i) {
        A[i][k] /= A[k][k];
        for (int j = k + 1; j < n; ++j) A[i][j] -= A[i][k] * A[k][j];
      }
    }
  }

  template <typename T>
  std::vector<T> solve(std::vector<T> b) const {
    for (int k = 0; k < n; ++k) {
      std::swap(b[k], b[piv[k]]);
      for (int i = k + 1; i < n; ++i) b[i] -= A[i][k] * b[k];
    }
    for (int i = n - 1; i >= 0; --i) {
      for (int j = i + 1; j < n; ++j) b[i] -= A[i][j] * b[j];
      b[i] /= A[i][i];
    }
    return b;
  }
};

struct LineOperators {
  std::vector<std::vector<double>> M, C, D;
  double h;  // uniform element length
};

LineOperators line_operators(const Mesh& m) {
  if (m.kind != CellKind::Line2)
    throw std::invalid_argument("rd: line elements required");
  int n = m.n_nodes();
  LineOperators op;
  op.M.assign(n, std::vector<double>(n, 0.0));
  op.C = op.M;
  op.D = op.M;
  op.h = element_volume(m, 0);
  for (int e = 0; e < m.n_elems(); ++e) {
    double h = element_volume(m, e);
    if (std::abs(h - op.h) > 1e-12 * op.h)
      throw std::invalid_argument("rd: uniform mesh required");
    int i = m.elems[e][0], j = m.elems[e][1];
    // Me = h/6 [2 1; 1 2], Ce = [-1/2 1/2; -1/2 1/2], De = 1/h [1 -1; -1 1]
    op.M[i][i] += h / 3.0; op.M[i][j] += h / 6.0;
    op.M[j][i] += h / 6.0; op.M[j][j] += h / 3.0;
    op.C[i][i] += -0.5; op.C[i][j] += 0.5;
    op.C[j][i] += -0.5; op.C[j][j] += 0.5;
    op.D[i][i] += 1.0 / h; op.D[i][j] += -1.0 / h;
    op.D[j][i] += -1.0 / h; op.D[j][j] += 1.0 / h;
  }
  return op;
}

}  // namespace

std::vector<cplx> rd_project_derivative(const Mesh& m, const std::vector<cplx>& u) {
  LineOperators op = line_operators(m);
  int n = m.n_nodes();
  std::vector<cplx> rhs(n, cplx(0.0, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rhs[i] += op.C[i][j] * u[j];
  DenseLU lu(op.M);
  std::vector<double> br(n), bi(n);
  for (int i = 0; i < n; ++i) { br[i] = rhs[i].real(); bi[i] = rhs[i].imag(); }
  auto xr = lu.solve(br);
  auto xi = lu.solve(bi);
  std::vector<cplx> psi(n);
  for (int i = 0; i < n; ++i) psi[i] = cplx(xr[i], xi[i]);
  return psi;
}

std::pair<std::vector<std::vector<cplx>>, std::vector<cplx>>
assemble_rd_dense(const Problem& p, const MethodOptions& opt) {
  const Mesh& m = *p.mesh;
  if (!p.params.elem_velocity.empty())
    throw std::invalid_argument("rd: global velocity required");
  if (!is_rd(opt.method))
    throw std::invalid_argument("assemble_rd_dense: RD method required");
  int n = m.n_nodes();
  std::vector<std::vector<cplx>> K(n, std::vector<cplx>(n, cplx(0.0, 0.0)));
  std::vector<cplx> F(n, cplx(0.0, 0.0));
  for (int e = 0; e < m.n_elems(); ++e) {
    ElementSystem es = element_matrix(m, e, p.params, opt, p.source);
    const auto& c = m.elems[e];
    for (int A = 0; A < es.nv; ++A) {
      F[c[A]] += es.F[A];
      for (int B = 0; B < es.nv; ++B) K[c[A]][c[B]] += es.K[A][B];
    }
  }
  LineOperators op = line_operators(m);
  ElemCoefs coefs = element_coefs(m, 0, p.params, opt);
  double a = p.params.velocity.x;
  double tau = coefs.tau, kappa = p.params.kappa;

  DenseLU lu(op.M);
  std::vector<std::vector<double>> X(n);  // X = M^-1 C, built column-wise
  {
    std::vector<std::vector<double>> cols(n, std::vector<double>(n));
    for (int j = 0; j < n; ++j) {
      std::vector<double> col(n);
      for (int i = 0; i < n; ++i) col[i] = op.C[i][j];
      cols[j] = lu.solve(col);
    }
    for (int i = 0; i < n; ++i) {
      X[i].resize(n);
      for (int j = 0; j < n; ++j) X[i][j] = cols[j][i];
    }
  }
  // streamline residual gains -kappa psi_x:  dK = -tau a kappa D X
  // subscale residual (RD-VMS) additionally: dK += i omega tau kappa C X
  cplx cs = cplx(-tau * a * kappa, 0.0);
  cplx cv = opt.method == Method::RdVms ? I * (p.params.omega * tau * kappa)
                                        : cplx(0.0, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double dx = 0.0, cx = 0.0;
      for (int k = 0; k < n; ++k) {
        dx += op.D[i][k] * X[k][j];
        if (cv != cplx(0.0, 0.0)) cx += op.C[i][k] * X[k][j];
      }
      K[i][j] += cs * dx + cv * cx;
    }
  return {std::move(K), std::move(F)};
}

}  // namespace tsfem
