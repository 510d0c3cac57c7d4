#pragma once

#include "cutmatch/types.hpp"

namespace cutmatch {

struct CutResult {
  CutVector y;
  double eigenvalue = 0;
};

// Maximizes y^T M y over unit y orthogonal to 1, where
//   M = lambda2 (I - X) - lambda1 (D - W).
// 1 is always a 0-eigenvector of M, so the maximizer is the eigenvector of
// the largest algebraic eigenvalue among those not parallel to 1. Sign is
// fixed so the first nonzero component is positive. argmin_compat picks the
// smallest eigenvalue instead.
CutResult cut_update(const SimilarityMatrix& W, const MatchingMatrix& X,
                     double lambda1, double lambda2,
                     bool argmin_compat = false);

// Fiedler direction: unit eigenvector of the second-smallest eigenvalue of
// the graph Laplacian of W, sign-fixed as above.
CutVector spectral_cut(const SimilarityMatrix& W);

// Spectral cut thresholded at the median so each side has exactly n/2 nodes.
// Ties are broken by sorting (value, index); the first n/2 get -1.
Eigen::VectorXi balanced_cut(const SimilarityMatrix& W);

// labels_i = +1 if y_i >= 0 else -1.
Eigen::VectorXi sign_discretize(const CutVector& y);

}  // namespace cutmatch
