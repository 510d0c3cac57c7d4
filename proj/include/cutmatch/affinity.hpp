#pragma once

#include <string>

#include "cutmatch/graph.hpp"
#include "cutmatch/types.hpp"

namespace cutmatch {

// Column-major vectorization index: X(i,a) maps to vec(X)[a*n + i].
// This convention is normative for the affinity layout and file interchange.
inline int tau(int i, int a, int n) { return a * n + i; }
int tau_checked(int i, int a, int n);  // throws std::out_of_range

// Edge-pair affinity A[tau(i,a), tau(j,b)] = exp(-(d_ij - d_ab)^2 / delta1)
// for (i,j) and (a,b) edges of g with i != a, j != b; zero elsewhere.
// d is the Euclidean distance between node positions. Symmetric.
AffinityMatrix build_affinity(const Graph& g, double delta1);

// W_ij = exp(-|f_i - f_j|^2 / delta2) + exp(-|l_i - l_j|^2 / delta3) for
// i != j, zero diagonal. Entries lie in [0, 2].
SimilarityMatrix build_similarity(const Graph& g, double delta2, double delta3);

// L = D - W with D = diag(W 1). Symmetric PSD, row sums zero.
Eigen::MatrixXd laplacian(const SimilarityMatrix& W);

// Coordinate-list dump, one "row col value" line per nonzero, indices per tau.
void save_affinity_coo(const AffinityMatrix& A, const std::string& path);

}  // namespace cutmatch
