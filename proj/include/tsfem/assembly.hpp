#pragma once

#include <map>
#include <string>
#include <utility>

#include "tsfem/fem.hpp"
#include "tsfem/solver.hpp"

namespace tsfem {

// Dirichlet data is an ordered association list: where node sets overlap
// (e.g. corners of a structured quad), later entries win
using BcList = std::vector<std::pair<std::string, cplx>>;

struct Problem {
  const Mesh* mesh = nullptr;
  PhysicalParams params;
  std::function<cplx(const Vec3&)> source;   // null = zero
  BcList dirichlet;                          // node-set name -> value g
  BcList neumann;                            // node-set name -> flux h (1D points)
};

// complex N x N system kept as per-row maps plus Dirichlet bookkeeping
struct ComplexSystem {
  int n = 0;
  std::vector<std::map<int, cplx>> rows;
  std::vector<cplx> rhs;
  std::vector<int> dirichlet_nodes;   // sorted, unique
  std::vector<cplx> dirichlet_values; // parallel to dirichlet_nodes
};

// assemble the complex system; apply_dirichlet = false leaves the PDE rows in
// place (used by the stability probes, which zero constrained entries instead)
ComplexSystem assemble_complex(const Problem& p, const MethodOptions& opt,
                               bool apply_dirichlet = true);

// expand to the real 2N x 2N block system, node-major [re, im] per node:
// each complex entry k becomes [[Re k, -Im k], [Im k, Re k]]
struct AssembledSystem {
  Csr matrix;
  std::vector<double> rhs;
  std::vector<uint8_t> dirichlet_mask;  // per real dof
  int n_nodes = 0;
};
AssembledSystem to_real_block(const ComplexSystem& s);

AssembledSystem assemble(const Problem& p, const MethodOptions& opt);

// interleaved real vector <-> complex nodal field
std::vector<cplx> to_complex_field(const std::vector<double>& x);
std::vector<double> to_real_vector(const std::vector<cplx>& u);

// assemble + GMRES in one step; returns the complex nodal solution
std::vector<cplx> solve(const Problem& p, const MethodOptions& opt,
                        const GmresOptions& gopt, SolveReport* rep = nullptr);

}  // namespace tsfem
