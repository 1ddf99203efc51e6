#pragma once

#include "tsfem/core.hpp"

namespace tsfem {

// Crank-Nicolson time integration of the 1D SUPG semi-discrete transport
// system on a uniform N-element mesh of [0,1] with phi(0,t) = 0 and
// phi(1,t) = cos(omega t), started from zero. After the washout cycles the
// last cycle is projected onto e^{i omega t}, giving the nodal amplitude
// directly comparable to the time-spectral SUPG solve of the same problem.
struct TemporalResult {
  std::vector<cplx> projected;  // complex nodal amplitude, size N+1
  double max_norm = 0.0;        // largest nodal magnitude seen while marching
  bool diverged = false;        // max_norm exceeded the guard threshold
  int steps_per_cycle = 0;
  int cycles = 0;
};

TemporalResult temporal_reference_1d(int n_elems, double alpha, double beta,
                                     int cycles, int steps_per_cycle,
                                     double kappa = 1.0);

}  // namespace tsfem
