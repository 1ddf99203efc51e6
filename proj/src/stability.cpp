#include "tsfem/stability.hpp"

#include <algorithm>

namespace tsfem {

double quadratic_form(const Csr& A, const std::vector<double>& c) {
  std::vector<double> y;
  A.matvec(c, y);
  double s = 0.0;
  for (int i = 0; i < A.n; ++i) s += c[i] * y[i];
  return s;
}

double analytic_energy(const Mesh& m, const std::vector<cplx>& w,
                       const PhysicalParams& p, const MethodOptions& opt) {
  if (w.size() != size_t(m.n_nodes()))
    throw std::invalid_argument("analytic_energy: field size mismatch");
  Method base = opt.method;
  if (base == Method::RdSupg || base == Method::RdVms)
    throw std::invalid_argument("analytic_energy: no closed form for RD variants");
  QuadPoint qps[4];
  int nq = quad_rule(m.kind, qps);
  int dim = m.dim();
  double E = 0.0;
  for (int e = 0; e < m.n_elems(); ++e) {
    const auto& c = m.elems[e];
    Vec3 a = p.a(e);
    ElemCoefs cf = element_coefs(m, e, p, opt);
    for (int q = 0; q < nq; ++q) {
      ShapeEval s = shape_eval(m, e, qps[q]);
      double wr = 0.0, wi = 0.0;
      Vec3 gr{}, gi{};
      for (int A = 0; A < s.nv; ++A) {
        wr += s.N[A] * w[c[A]].real();
        wi += s.N[A] * w[c[A]].imag();
        for (int d = 0; d < dim; ++d) {
          gr[d] += s.grad[A][d] * w[c[A]].real();
          gi[d] += s.grad[A][d] * w[c[A]].imag();
        }
      }
      double g2 = dot(gr, gr) + dot(gi, gi);
      double agr = dot(a, gr), agi = dot(a, gi);
      double val = 0.0;
      switch (base) {
        case Method::Galerkin:
          val = p.kappa * g2;
          break;
        case Method::Supg:
          // element-local form: tau varies across elements, so the mass/
          // streamline cross term must not be moved by global parts
          val = p.kappa * g2 + cf.tau * (agr * agr + agi * agi)
                - cf.tau * p.omega * (agr * wi - agi * wr);
          break;
        case Method::VmsGls: {
          double X = agr - p.omega * wi;
          double Y = p.omega * wr + agi;
          val = p.kappa * g2 + cf.tau * (X * X + Y * Y);
          break;
        }
        case Method::Asu:
          val = -cf.omega_hat.imag() * (wr * wr + wi * wi)
                + (p.kappa + cf.kasu.real()) * g2
                + cf.tau * (agr * agr + agi * agi);
          break;
        default:
          break;
      }
      E += val * s.detJw;
    }
  }
  return E;
}

std::vector<cplx> random_probe_field(int n_nodes,
                                     const std::vector<int>& constrained,
                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<cplx> w(n_nodes);
  for (auto& v : w) v = cplx(dist(rng), dist(rng));
  for (int i : constrained) w[i] = cplx(0.0, 0.0);
  return w;
}

ProbeStats probe_interior(const Problem& p, const MethodOptions& opt,
                          int n_probes, unsigned seed) {
  ComplexSystem cs = assemble_complex(p, opt, /*apply_dirichlet=*/false);
  AssembledSystem sys = to_real_block(cs);
  std::mt19937_64 rng(seed);
  std::vector<double> values(n_probes);
  ProbeStats st;
  st.energy_residual = 0.0;
  for (int k = 0; k < n_probes; ++k) {
    std::vector<cplx> w = random_probe_field(cs.n, cs.dirichlet_nodes, rng);
    std::vector<double> c = to_real_vector(w);
    double qf = quadratic_form(sys.matrix, c);
    values[k] = qf;
    if (!is_rd(opt.method)) {
      double ea = analytic_energy(*p.mesh, w, p.params, opt);
      double res = std::abs(qf - ea) / std::max(1.0, std::abs(qf));
      st.energy_residual = std::max(st.energy_residual, res);
    }
  }
  std::sort(values.begin(), values.end());
  st.min = values.front();
  st.median = values[n_probes / 2];
  return st;
}

}  // namespace tsfem
