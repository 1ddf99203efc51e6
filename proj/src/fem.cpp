#include "tsfem/fem.hpp"

#include "tsfem/tau.hpp"

namespace tsfem {

int quad_rule(CellKind kind, QuadPoint out[4]) {
  const double g = 1.0 / std::sqrt(3.0);
  switch (kind) {
    case CellKind::Line2:
      out[0] = {{-g, 0, 0}, 1.0};
      out[1] = {{+g, 0, 0}, 1.0};
      return 2;
    case CellKind::Quad4: {
      int k = 0;
      for (double ey : {-g, +g})
        for (double ex : {-g, +g}) out[k++] = {{ex, ey, 0}, 1.0};
      return 4;
    }
    case CellKind::Tet4: {
      const double a = 0.58541019662496845, b = 0.13819660112501051;
      const double w = 1.0 / 24.0;  // reference volume 1/6 split evenly
      out[0] = {{a, b, b}, w};
      out[1] = {{b, a, b}, w};
      out[2] = {{b, b, a}, w};
      out[3] = {{b, b, b}, w};
      return 4;
    }
  }
  return 0;
}

namespace {

// invert a dim x dim Jacobian stored in a 3x3 array
double invert_jacobian(double J[3][3], double Jinv[3][3], int dim) {
  if (dim == 1) {
    double d = J[0][0];
    Jinv[0][0] = 1.0 / d;
    return d;
  }
  if (dim == 2) {
    double d = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    Jinv[0][0] = J[1][1] / d;
    Jinv[0][1] = -J[0][1] / d;
    Jinv[1][0] = -J[1][0] / d;
    Jinv[1][1] = J[0][0] / d;
    return d;
  }
  double d = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1])
             - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0])
             + J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
  Jinv[0][0] = (J[1][1] * J[2][2] - J[1][2] * J[2][1]) / d;
  Jinv[0][1] = (J[0][2] * J[2][1] - J[0][1] * J[2][2]) / d;
  Jinv[0][2] = (J[0][1] * J[1][2] - J[0][2] * J[1][1]) / d;
  Jinv[1][0] = (J[1][2] * J[2][0] - J[1][0] * J[2][2]) / d;
  Jinv[1][1] = (J[0][0] * J[2][2] - J[0][2] * J[2][0]) / d;
  Jinv[1][2] = (J[0][2] * J[1][0] - J[0][0] * J[1][2]) / d;
  Jinv[2][0] = (J[1][0] * J[2][1] - J[1][1] * J[2][0]) / d;
  Jinv[2][1] = (J[0][1] * J[2][0] - J[0][0] * J[2][1]) / d;
  Jinv[2][2] = (J[0][0] * J[1][1] - J[0][1] * J[1][0]) / d;
  return d;
}

}  // namespace

ShapeEval shape_eval(const Mesh& m, int e, const QuadPoint& qp) {
  ShapeEval s;
  s.nv = m.nv();
  int dim = m.dim();
  double dN[4][3] = {};  // parent-space gradients
  double x = qp.xi[0], y = qp.xi[1], z = qp.xi[2];
  switch (m.kind) {
    case CellKind::Line2:
      s.N[0] = 0.5 * (1.0 - x);
      s.N[1] = 0.5 * (1.0 + x);
      dN[0][0] = -0.5;
      dN[1][0] = +0.5;
      break;
    case CellKind::Quad4: {
      const double sx[4] = {-1, +1, +1, -1}, sy[4] = {-1, -1, +1, +1};
      for (int a = 0; a < 4; ++a) {
        s.N[a] = 0.25 * (1.0 + sx[a] * x) * (1.0 + sy[a] * y);
        dN[a][0] = 0.25 * sx[a] * (1.0 + sy[a] * y);
        dN[a][1] = 0.25 * sy[a] * (1.0 + sx[a] * x);
      }
      break;
    }
    case CellKind::Tet4:
      s.N[0] = 1.0 - x - y - z;
      s.N[1] = x;
      s.N[2] = y;
      s.N[3] = z;
      dN[0][0] = dN[0][1] = dN[0][2] = -1.0;
      dN[1][0] = dN[2][1] = dN[3][2] = 1.0;
      break;
  }
  const auto& c = m.elems[e];
  double J[3][3] = {}, Jinv[3][3] = {};
  for (int a = 0; a < s.nv; ++a) {
    const Vec3& p = m.nodes[c[a]];
    s.xyz.x += s.N[a] * p.x;
    s.xyz.y += s.N[a] * p.y;
    s.xyz.z += s.N[a] * p.z;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) J[j][i] += dN[a][i] * p[j];
  }
  double det = invert_jacobian(J, Jinv, dim);
  s.detJw = std::abs(det) * qp.w;
  for (int a = 0; a < s.nv; ++a)
    for (int j = 0; j < dim; ++j) {
      double gsum = 0.0;
      for (int i = 0; i < dim; ++i) gsum += dN[a][i] * Jinv[i][j];
      s.grad[a][j] = gsum;
    }
  // G = (dxi/dx)^T (dxi/dx) with dxi_i/dx_j = Jinv[i][j]
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      double g = 0.0;
      for (int k = 0; k < dim; ++k) g += Jinv[k][i] * Jinv[k][j];
      s.G[i][j] = g;
    }
  return s;
}

ElemCoefs element_coefs(const Mesh& m, int e, const PhysicalParams& p,
                        const MethodOptions& opt) {
  int dim = m.dim();
  Vec3 a = p.a(e);
  QuadPoint qps[4];
  quad_rule(m.kind, qps);
  ShapeEval s = shape_eval(m, e, qps[0]);  // affine/uniform: metric constant
  double tci = tau_conv_inv_from_metric(a, s.G, dim);
  double tdi = tau_diff_inv_from_metric(p.kappa, s.G, dim);
  ElemCoefs c;
  c.tau_diff = 1.0 / tdi;
  if (opt.tau_mode == TauMode::Exact1D) {
    if (m.kind != CellKind::Line2)
      throw std::invalid_argument("tau exact_1d requires line elements");
    double h = element_volume(m, e);
    c.tau = tau_exact_1d(a.x, p.kappa, h);
  } else {
    c.tau = tau_approx(tci, tdi);
  }
  Method base = opt.method;
  if (base == Method::Asu) {
    if (opt.omega_hat_mode == OmegaHatMode::Exact1D) {
      if (m.kind != CellKind::Line2)
        throw std::invalid_argument("omega_hat exact_1d requires line elements");
      double h = element_volume(m, e);
      double alpha = a.x * h / (2.0 * p.kappa);
      double beta = p.omega * h * h / (6.0 * p.kappa);
      c.omega_hat = omega_hat_exact(alpha, beta, p.omega);
    } else {
      c.omega_hat = omega_hat_approx(p.omega, c.tau, c.tau_diff, opt.limiter);
    }
    c.kasu = kappa_asu(c.omega_hat, c.tau_diff, p.kappa);
  } else {
    c.omega_hat = cplx(p.omega, 0.0);
    c.kasu = 0.0;
  }
  return c;
}

ElementSystem element_matrix(const Mesh& m, int e, const PhysicalParams& p,
                             const MethodOptions& opt,
                             const std::function<cplx(const Vec3&)>& source) {
  ElementSystem out;
  out.nv = m.nv();
  int dim = m.dim();
  Vec3 a = p.a(e);
  ElemCoefs c = element_coefs(m, e, p, opt);
  Method base = opt.method;
  if (base == Method::RdSupg) base = Method::Supg;
  if (base == Method::RdVms) base = Method::VmsGls;

  const cplx iw = I * p.omega;
  const cplx iwh = I * c.omega_hat;  // equals iw except for ASU
  const cplx keff = p.kappa + c.kasu;
  QuadPoint qps[4];
  int nq = quad_rule(m.kind, qps);
  for (int q = 0; q < nq; ++q) {
    ShapeEval s = shape_eval(m, e, qps[q]);
    double adN[4];
    for (int b = 0; b < out.nv; ++b) {
      double acc = 0.0;
      for (int d = 0; d < dim; ++d) acc += a[d] * s.grad[b][d];
      adN[b] = acc;
    }
    cplx qv = source ? source(s.xyz) : cplx(0.0, 0.0);
    for (int A = 0; A < out.nv; ++A) {
      for (int B = 0; B < out.nv; ++B) {
        double gg = 0.0;
        for (int d = 0; d < dim; ++d) gg += s.grad[A][d] * s.grad[B][d];
        cplx k;
        switch (base) {
          case Method::Galerkin:
            k = iw * s.N[A] * s.N[B] + s.N[A] * adN[B] + p.kappa * gg;
            break;
          case Method::Supg:
            k = iw * s.N[A] * s.N[B] + s.N[A] * adN[B] + p.kappa * gg
                + c.tau * adN[A] * (iw * s.N[B] + adN[B]);
            break;
          case Method::VmsGls:
            k = iw * s.N[A] * s.N[B] + s.N[A] * adN[B] + p.kappa * gg
                + c.tau * adN[A] * (iw * s.N[B] + adN[B])
                - iw * c.tau * s.N[A] * (iw * s.N[B] + adN[B]);
            break;
          case Method::Asu:
            k = iwh * s.N[A] * s.N[B] + s.N[A] * adN[B] + keff * gg
                + c.tau * adN[A] * adN[B];
            break;
          default:
            throw std::logic_error("element_matrix: unexpected method");
        }
        out.K[A][B] += k * s.detJw;
      }
      cplx f = s.N[A] * qv;  // Galerkin load
      if (base == Method::Supg) f += c.tau * adN[A] * qv;
      if (base == Method::VmsGls) f += (c.tau * adN[A] - iw * c.tau * s.N[A]) * qv;
      out.F[A] += f * s.detJw;
    }
  }
  return out;
}

}  // namespace tsfem
