#pragma once

#include <vector>

#include "cutmatch/types.hpp"

namespace cutmatch {

struct ProjectionResult {
  Eigen::MatrixXd X;
  bool converged = false;
  int iterations = 0;
  std::vector<double> residuals;  // max constraint violation after each sweep
};

// Projects X_raw onto the doubly stochastic matrices with zero diagonal by
// cyclic alternation: affine row/col-sum centering, ramp to the nonnegative
// orthant, zero the diagonal. Stops when the max violation of those
// constraints is <= tau. Non-convergence is reported via the flag.
ProjectionResult bregman_project_zero_diag(const Eigen::MatrixXd& X_raw,
                                           double tau, int max_iter);

// Euclidean projection of symmetric U onto {V : V1 = 0, V = V^T}:
//   V = U - (1/n) U 1 1^T - (1/n) 1 1^T U + (1/n^2) 1 1^T U 1 1^T.
// Throws if U deviates from symmetry by more than tau_feas.
Eigen::MatrixXd center_c1_symmetric(const Eigen::MatrixXd& U,
                                    double tau_feas = 1e-6);

// Same closed form for arbitrary U; the result satisfies both V1 = 0 and
// V^T 1 = 0. The 1/n^2 coefficient on the last term is the one that makes
// both residuals vanish (see tests).
Eigen::MatrixXd center_c1_doubly(const Eigen::MatrixXd& U);

// Clamps V so that X_prev + eps*V stays in [0,1] elementwise. CutMatch mode
// additionally zeroes the diagonal and uses the tighter of the two bounds at
// (j,k) and (k,j), which preserves symmetry of a symmetric V.
Eigen::MatrixXd truncate_c2(const Eigen::MatrixXd& V,
                            const MatchingMatrix& X_prev, double eps,
                            MatchMode mode);

struct DirectionResult {
  Eigen::MatrixXd V;
  bool converged = false;
  int sweeps = 0;
};

// Solves for the update direction nearest the gradient U subject to the
// constraint split: C1 the sum/symmetry subspace, C2 the box (plus zero
// diagonal in CutMatch mode). Alternates center and truncate until the
// change between sweeps is <= tau; with dykstra_correction the alternation
// carries correction increments and converges to the exact projection.
// CutMatch mode requires U symmetrized by the caller.
DirectionResult project_direction(const Eigen::MatrixXd& U,
                                  const MatchingMatrix& X_prev, double eps,
                                  MatchMode mode, double tau, int max_proj,
                                  bool dykstra_correction = false);

}  // namespace cutmatch
