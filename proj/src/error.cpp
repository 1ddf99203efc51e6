#include "tsfem/error.hpp"

namespace tsfem {

ErrorPair l2_error(const Mesh& m, const std::vector<cplx>& field,
                   const std::function<cplx(const Vec3&)>& oracle) {
  if (field.size() != size_t(m.n_nodes()))
    throw std::invalid_argument("l2_error: field size mismatch");
  QuadPoint qps[4];
  int nq = quad_rule(m.kind, qps);
  double num = 0.0, den = 0.0;
  for (int e = 0; e < m.n_elems(); ++e) {
    const auto& c = m.elems[e];
    for (int q = 0; q < nq; ++q) {
      ShapeEval s = shape_eval(m, e, qps[q]);
      cplx uh(0.0, 0.0);
      for (int a = 0; a < s.nv; ++a) uh += s.N[a] * field[c[a]];
      cplx ux = oracle(s.xyz);
      num += std::norm(uh - ux) * s.detJw;
      den += std::norm(ux) * s.detJw;
    }
  }
  if (den == 0.0) throw std::domain_error("l2_error: oracle norm is zero");
  ErrorPair ep;
  ep.rel_sq = num / den;
  ep.rel = std::sqrt(ep.rel_sq);
  return ep;
}

ErrorPair nodal_l2_error(const Mesh& m, const std::vector<cplx>& field,
                         const std::function<cplx(const Vec3&)>& oracle) {
  if (field.size() != size_t(m.n_nodes()))
    throw std::invalid_argument("nodal_l2_error: field size mismatch");
  QuadPoint qps[4];
  int nq = quad_rule(m.kind, qps);
  std::vector<double> lump(m.n_nodes(), 0.0);
  for (int e = 0; e < m.n_elems(); ++e)
    for (int q = 0; q < nq; ++q) {
      ShapeEval s = shape_eval(m, e, qps[q]);
      for (int a = 0; a < s.nv; ++a) lump[m.elems[e][a]] += s.N[a] * s.detJw;
    }
  double num = 0.0, den = 0.0;
  for (int i = 0; i < m.n_nodes(); ++i) {
    cplx ux = oracle(m.nodes[i]);
    num += lump[i] * std::norm(field[i] - ux);
    den += lump[i] * std::norm(ux);
  }
  if (den == 0.0) throw std::domain_error("nodal_l2_error: oracle norm is zero");
  ErrorPair ep;
  ep.rel_sq = num / den;
  ep.rel = std::sqrt(ep.rel_sq);
  return ep;
}

}  // namespace tsfem
