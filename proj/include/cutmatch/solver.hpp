#pragma once

#include <functional>
#include <vector>

#include "cutmatch/graph.hpp"
#include "cutmatch/ibgp.hpp"
#include "cutmatch/types.hpp"

namespace cutmatch {

// One record per outer iteration, written after the matching update.
struct TraceRow {
  int iter = 0;
  double objective = 0;           // full joint objective
  double objective_after_cut = 0; // joint objective right after the cut step
  double match_term = 0;          // vec(X)^T A vec(X)
  double cut_term = 0;            // y^T L y (unweighted)
  double coupling_term = 0;       // y^T (I - X) y (unweighted)
  double feas_residual = 0;       // max constraint violation of X
  double eigenvalue = 0;          // eigenvalue used by the cut step
  int ibgp_iterations = 0;
};

struct SolveTrace {
  double initial_objective = 0;
  std::vector<TraceRow> rows;
};

// Joint objective: vec(X)^T A vec(X) - lambda1 y^T L y + lambda2 y^T (I-X) y.
double objective(const AffinityMatrix& A, const SimilarityMatrix& W,
                 const MatchingMatrix& X, const CutVector& y, double lambda1,
                 double lambda2);

struct InitState {
  MatchingMatrix X;
  CutVector y;
};

// y from the spectral cut of W's Laplacian; X from a standard-GM solve on A
// started at the uniform doubly stochastic matrix, symmetrized, zeroed on
// same-partition pairs of y, then projected onto the feasible set.
InitState initialize(const AffinityMatrix& A, const SimilarityMatrix& W,
                     const SolverConfig& cfg);

struct CutMatchResult {
  MatchingMatrix X;
  CutVector y;
  SolveTrace trace;
  bool converged = false;
};

// Called after every cut update with (M, y, eigenvalue); used by audits.
using CutObserver =
    std::function<void(const Eigen::MatrixXd&, const CutVector&, double)>;

// Alternates the cut update and the matching update until the relative
// objective change is <= tau_obj or max_outer is hit. On the first iteration
// only, same-partition entries of X are re-zeroed against the fresh cut and
// X is re-projected.
CutMatchResult cutmatch_solve(const AffinityMatrix& A,
                              const SimilarityMatrix& W,
                              const SolverConfig& cfg,
                              const CutObserver& observer = nullptr);

struct Discretized {
  std::vector<int> assignment;  // Hungarian permutation, diagonal forbidden
  Eigen::VectorXi labels;       // sign pattern of y
  std::vector<int> pairing;     // greedy symmetric perfect matching over X+X^T
};

Discretized discretize(const MatchingMatrix& X, const CutVector& y);

}  // namespace cutmatch
