#pragma once

#include "tsfem/assembly.hpp"

namespace tsfem {

// consistent-mass L2 projection of the nodal field's x-derivative onto the
// same linear basis: psi = M^-1 C u, global, no boundary treatment (1D only)
std::vector<cplx> rd_project_derivative(const Mesh& m, const std::vector<cplx>& u);

// dense complex system for the RD variants: the base scheme plus the global
// correction that swaps the vanishing -kappa phi_xx residual term for the
// reconstructed -kappa psi_x in every stabilization integral
std::pair<std::vector<std::vector<cplx>>, std::vector<cplx>>
assemble_rd_dense(const Problem& p, const MethodOptions& opt);

}  // namespace tsfem
