#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cutmatch/graph.hpp"
#include "cutmatch/types.hpp"

namespace cutmatch {

// Joint cut+match benchmark instance. Two point clouds of m standard-normal
// nodes each; the second is a horizontal translate of the first, positioned
// so the overlap between the clouds is gamma (positive = overlapping), then
// perturbed by sigma-level Gaussian noise. Corresponding nodes share a d-D
// feature up to mu-level noise, and floor(rho*n) nodes get their features
// cyclically rotated. Edges come from Delaunay triangulation over all 2m
// nodes; each absent edge is added independently with probability eta.
struct SyntheticConfig {
  int m = 20;
  double gamma = 0.2;
  double sigma = 0.0;
  double mu = 0.0;
  double rho = 0.0;
  double eta = 0.0;
  int d = 128;
  double delta1 = 0.5;
  double delta2 = 5.0;
  double delta3 = 0.5;
  std::uint64_t seed = 0;

  void validate() const;
};

// Two-graph matching instance: graph 2 is graph 1 plus Gaussian deformation,
// outliers appended independently to both, edges of the complete graph kept
// with probability `density` (one shared mask; nodes correspond by index).
struct GmPairConfig {
  int inliers = 20;
  double deformation = 0.0;
  int outliers = 0;
  double density = 1.0;
  double delta1 = 0.2;
  std::uint64_t seed = 0;

  void validate() const;
};

// Delaunay triangulation edges (Bowyer-Watson, long-double predicates).
// Collinear input falls back to a path in x-order and sets *degenerate.
std::vector<std::pair<int, int>> delaunay(const Eigen::MatrixX2d& points,
                                          bool* degenerate = nullptr);

Graph generate_joint(const SyntheticConfig& cfg);

struct GmPair {
  AffinityMatrix A;              // n^2 x n^2, n = inliers + outliers
  std::vector<int> ground_truth; // identity on inliers
  int n = 0;
  int inliers = 0;
  std::vector<std::pair<int, int>> edges;
};

GmPair generate_gm_pair(const GmPairConfig& cfg);

}  // namespace cutmatch
