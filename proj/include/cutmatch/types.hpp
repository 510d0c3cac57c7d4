#pragma once

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <cstdint>

namespace cutmatch {

// Relaxed matching matrix: doubly stochastic, zero diagonal, symmetric,
// entries in [0,1]. Invariants are checked, not encoded in the type.
using MatchingMatrix = Eigen::MatrixXd;

// Unit-norm vector whose signs encode the bipartition.
using CutVector = Eigen::VectorXd;

// Pairwise edge-compatibility matrix, n^2 x n^2, indexed by tau().
// Only edge-pair entries are ever nonzero, so it is kept sparse.
using AffinityMatrix = Eigen::SparseMatrix<double>;

// Cut weight matrix, n x n, symmetric with zero diagonal.
using SimilarityMatrix = Eigen::MatrixXd;

enum class MatchMode {
  CutMatch,    // direction constraints: V1 = 0, V = V^T, V_ii = 0, box
  StandardGM,  // direction constraints: V1 = 0, V^T 1 = 0, box
};

struct SolverConfig {
  double lambda1 = 200.0;  // cut energy weight
  double lambda2 = 50.0;   // coupling weight
  double eps = 0.1;        // gradient step length
  double tau_feas = 1e-6;
  double tau_obj = 1e-8;   // relative objective tolerance, outer loop
  double tau_step = 1e-8;  // step-norm tolerance, matching inner loop
  double tau_proj = 1e-8;  // sweep-change tolerance, direction projection
  int max_outer = 30;
  int max_ibgp = 2000;
  int max_proj = 1000;
  std::uint64_t seed = 0;

  // Step-size policy for the matching update. The plain update rule uses a
  // fixed eps; with adaptive_step the step is halved whenever it would
  // decrease the objective and grown again after a run of accepted steps,
  // and steps whose gain falls below gain_rtol * max(1,|score|) are treated
  // as converged. Disable to run the fixed-step behavior.
  bool adaptive_step = true;
  double gain_rtol = 1e-9;

  // Use correction increments (Dykstra) in the direction projection instead
  // of plain alternation.
  bool dykstra_correction = false;

  // Compatibility switch: pick the cut vector by the smallest instead of the
  // largest algebraic eigenvalue.
  bool argmin_cut = false;

  void validate() const;  // throws std::invalid_argument
};

}  // namespace cutmatch
