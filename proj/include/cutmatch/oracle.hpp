#pragma once

#include "cutmatch/types.hpp"

namespace cutmatch {
// Independent brute-force and high-precision references. Everything here is
// deliberately written without reusing the solver-side code paths it checks.
namespace oracle {

struct BruteForceMatch {
  MatchingMatrix X;        // best perfect-matching indicator
  double score = 0;        // vec(X)^T A vec(X)
  long long enumerated = 0;  // number of matchings visited, (n-1)!!
};

// Exhausts all perfect matchings (fixed-point-free involutions) of n nodes,
// n <= 10 and even. Ties break lexicographically.
BruteForceMatch brute_force_match(const AffinityMatrix& A);

struct BruteForceCut {
  Eigen::VectorXi labels;
  double cost = 0;  // sum_{i<j} W_ij (y_i - y_j)^2
};

// Minimizes the discrete cut cost over bipartitions (balanced ones only when
// the flag is set). n <= 20 balanced.
BruteForceCut brute_force_cut(const SimilarityMatrix& W, bool balanced);

// Euclidean projection of U onto the direction feasible set, computed by
// Dykstra's alternating projections with correction increments, run to
// `tol` (default 1e-12). The subspace projection is solved through a KKT
// linear system rather than the closed form.
Eigen::MatrixXd dykstra_oracle(const Eigen::MatrixXd& U,
                               const MatchingMatrix& X_prev, double eps,
                               MatchMode mode, double tol = 1e-12,
                               int max_sweeps = 100000);

// Projection of U onto the equality constraints alone (V1 = 0 and V = V^T
// for CutMatch, V1 = 0 and V^T 1 = 0 for StandardGM), via the KKT system
// v = u - C^T (C C^T)^+ C u solved with a rank-revealing decomposition.
Eigen::MatrixXd kkt_center(const Eigen::MatrixXd& U, MatchMode mode);

}  // namespace oracle
}  // namespace cutmatch
