#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutmatch/types.hpp"

namespace cutmatch {

// Balanced bipartition labels plus the fixed-point-free involution pairing
// the two sides node-to-node.
struct GroundTruth {
  Eigen::VectorXi labels;           // entries in {-1, +1}, m of each
  std::vector<int> correspondence;  // pi(pi(i)) = i, pi(i) != i

  void validate(int n) const;
};

// A single undirected graph with 2-D node positions and d-D node features.
// Immutable after construction; validate() checks all structural invariants.
struct Graph {
  int n = 0;                               // node count, even, >= 4
  Eigen::MatrixX2d positions;              // n x 2
  Eigen::MatrixXd features;                // n x d
  std::vector<std::pair<int, int>> edges;  // undirected, stored with i < j
  std::optional<GroundTruth> ground_truth;

  int feature_dim() const { return static_cast<int>(features.cols()); }
  void validate() const;
};

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

// Maximum violation of each constraint defining the relaxed matching set.
struct FeasibilityReport {
  double row_sum = 0;   // max_i |sum_j X_ij - 1|
  double col_sum = 0;   // max_j |sum_i X_ij - 1|
  double box = 0;       // max distance of entries outside [0,1]
  double diagonal = 0;  // max_i |X_ii|
  double symmetry = 0;  // max_ij |X_ij - X_ji|

  double max_violation() const;
  bool feasible(double tau) const { return max_violation() <= tau; }
};

FeasibilityReport check_feasible(const MatchingMatrix& X);

}  // namespace cutmatch
