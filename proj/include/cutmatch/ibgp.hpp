#pragma once

#include "cutmatch/projections.hpp"
#include "cutmatch/types.hpp"

namespace cutmatch {

struct IbgpOptions {
  double eps = 0.1;
  double tau_step = 1e-8;  // stop when ||eps * V||_inf <= tau_step
  int max_iter = 2000;
  double tau_proj = 1e-8;
  int max_proj = 1000;
  bool adaptive_step = true;
  double gain_rtol = 1e-9;
  bool dykstra_correction = false;

  static IbgpOptions from(const SolverConfig& cfg);
};

struct IbgpState {
  MatchingMatrix X;
  double score = 0;  // vec(X)^T A vec(X), plus the coupling term in CutMatch mode
  int iterations = 0;
  bool converged = false;
};

// Matching objective gradient:
//   [grad]_ij = [(A + A^T) vec(X)]_{tau(i,j)} - lambda2 [y y^T]_ij.
// StandardGM mode passes lambda2 = 0 and an empty y.
Eigen::MatrixXd gradient(const AffinityMatrix& A, const MatchingMatrix& X,
                         const CutVector& y, double lambda2);

// Projected gradient ascent on the matching score: repeat
//   grad -> symmetrize (CutMatch mode) -> project_direction -> X += eps*V
// until the step is below tau_step or no step yields a meaningful gain.
// Every iterate stays feasible; the score never decreases beyond 1e-8 when
// the adaptive step policy is on.
IbgpState ibgp_solve(const AffinityMatrix& A, const MatchingMatrix& X_init,
                     const CutVector& y, double lambda2, MatchMode mode,
                     const IbgpOptions& opt = {});

// Standard two-graph matching: the zero-diagonal and symmetry constraints
// are dropped and there is no coupling term.
IbgpState ibgp_gm(const AffinityMatrix& A, const MatchingMatrix& X_init,
                  const IbgpOptions& opt = {});

}  // namespace cutmatch
