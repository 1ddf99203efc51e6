#include "tsfem/assembly.hpp"

#include <algorithm>

#include "tsfem/rd.hpp"

namespace tsfem {

ComplexSystem assemble_complex(const Problem& p, const MethodOptions& opt,
                               bool apply_dirichlet) {
  const Mesh& m = *p.mesh;
  ComplexSystem s;
  s.n = m.n_nodes();
  s.rows.resize(s.n);
  s.rhs.assign(s.n, cplx(0.0, 0.0));

  if (is_rd(opt.method)) {
    // global reconstruction correction: dense complex path (1D only)
    auto [K, F] = assemble_rd_dense(p, opt);
    for (int i = 0; i < s.n; ++i) {
      s.rhs[i] = F[i];
      for (int j = 0; j < s.n; ++j)
        if (K[i][j] != cplx(0.0, 0.0)) s.rows[i][j] = K[i][j];
    }
  } else {
    for (int e = 0; e < m.n_elems(); ++e) {
      ElementSystem es = element_matrix(m, e, p.params, opt, p.source);
      const auto& c = m.elems[e];
      for (int A = 0; A < es.nv; ++A) {
        s.rhs[c[A]] += es.F[A];
        auto& row = s.rows[c[A]];
        for (int B = 0; B < es.nv; ++B) row[c[B]] += es.K[A][B];
      }
    }
  }

  // point-flux Neumann terms; only meaningful on 1D boundaries, multi-D
  // problems in scope use homogeneous natural walls
  for (const auto& [name, h] : p.neumann) {
    auto it = m.node_sets.find(name);
    if (it == m.node_sets.end())
      throw std::invalid_argument("assemble: unknown neumann set " + name);
    if (h == cplx(0.0, 0.0)) continue;
    if (m.dim() != 1)
      throw std::invalid_argument("assemble: nonzero neumann data only supported in 1D");
    for (int node : it->second) s.rhs[node] += h;
  }

  std::map<int, cplx> bc;
  for (const auto& [name, g] : p.dirichlet) {
    auto it = m.node_sets.find(name);
    if (it == m.node_sets.end())
      throw std::invalid_argument("assemble: unknown dirichlet set " + name);
    for (int node : it->second) bc[node] = g;  // later sets override earlier
  }
  for (const auto& [node, g] : bc) {
    s.dirichlet_nodes.push_back(node);
    s.dirichlet_values.push_back(g);
  }

  if (apply_dirichlet) {
    std::vector<char> is_bc(s.n, 0);
    std::vector<cplx> gval(s.n, cplx(0.0, 0.0));
    for (size_t k = 0; k < s.dirichlet_nodes.size(); ++k) {
      is_bc[s.dirichlet_nodes[k]] = 1;
      gval[s.dirichlet_nodes[k]] = s.dirichlet_values[k];
    }
    for (int i = 0; i < s.n; ++i) {
      if (is_bc[i]) {
        s.rows[i].clear();
        s.rows[i][i] = 1.0;
        s.rhs[i] = gval[i];
        continue;
      }
      auto& row = s.rows[i];
      for (auto it = row.begin(); it != row.end();) {
        if (is_bc[it->first]) {
          s.rhs[i] -= it->second * gval[it->first];  // column lift
          it = row.erase(it);
        } else {
          ++it;
        }
      }
    }
  }
  return s;
}

AssembledSystem to_real_block(const ComplexSystem& s) {
  AssembledSystem out;
  out.n_nodes = s.n;
  std::vector<std::vector<std::pair<int, double>>> rows(2 * s.n);
  for (int i = 0; i < s.n; ++i) {
    auto& re_row = rows[2 * i];
    auto& im_row = rows[2 * i + 1];
    re_row.reserve(2 * s.rows[i].size());
    im_row.reserve(2 * s.rows[i].size());
    for (const auto& [j, k] : s.rows[i]) {
      re_row.push_back({2 * j, k.real()});
      re_row.push_back({2 * j + 1, -k.imag()});
      im_row.push_back({2 * j, k.imag()});
      im_row.push_back({2 * j + 1, k.real()});
    }
  }
  out.matrix = csr_from_rows(rows);
  out.rhs.resize(2 * s.n);
  for (int i = 0; i < s.n; ++i) {
    out.rhs[2 * i] = s.rhs[i].real();
    out.rhs[2 * i + 1] = s.rhs[i].imag();
  }
  out.dirichlet_mask.assign(2 * s.n, 0);
  for (int node : s.dirichlet_nodes) {
    out.dirichlet_mask[2 * node] = 1;
    out.dirichlet_mask[2 * node + 1] = 1;
  }
  return out;
}

AssembledSystem assemble(const Problem& p, const MethodOptions& opt) {
  return to_real_block(assemble_complex(p, opt));
}

std::vector<cplx> to_complex_field(const std::vector<double>& x) {
  std::vector<cplx> u(x.size() / 2);
  for (size_t i = 0; i < u.size(); ++i) u[i] = cplx(x[2 * i], x[2 * i + 1]);
  return u;
}

std::vector<double> to_real_vector(const std::vector<cplx>& u) {
  std::vector<double> x(2 * u.size());
  for (size_t i = 0; i < u.size(); ++i) {
    x[2 * i] = u[i].real();
    x[2 * i + 1] = u[i].imag();
  }
  return x;
}

std::vector<cplx> solve(const Problem& p, const MethodOptions& opt,
                        const GmresOptions& gopt, SolveReport* rep) {
  AssembledSystem sys = assemble(p, opt);
  std::vector<double> x;
  SolveReport r = gmres(sys.matrix, sys.rhs, x, gopt);
  if (rep) *rep = r;
  return to_complex_field(x);
}

}  // namespace tsfem
