#include "cutmatch/projections.hpp"

#include <cmath>
#include <stdexcept>

namespace cutmatch {

namespace {

// Violation of the constraints the bistochastic projection drives to zero
// (symmetry is preserved by every step but not enforced, so not measured).
double projection_residual(const Eigen::MatrixXd& X) {
  double v = (X.rowwise().sum().array() - 1.0).abs().maxCoeff();
  v = std::max(v, (X.colwise().sum().array() - 1.0).abs().maxCoeff());
  v = std::max(v, std::max(0.0, -X.minCoeff()));
  v = std::max(v, std::max(0.0, X.maxCoeff() - 1.0));
  v = std::max(v, X.diagonal().cwiseAbs().maxCoeff());
  return v;
}

// V  <-  V - (1/n) V 1 1^T - (1/n) 1 1^T V + (1/n^2) 1 1^T V 1 1^T
// via row/column sums; this is K V K with K = I - (1/n) 1 1^T.
void center_in_place(Eigen::MatrixXd& V) {
  const int n = static_cast<int>(V.rows());
  const Eigen::VectorXd r = V.rowwise().sum() / n;
  const Eigen::RowVectorXd c = V.colwise().sum() / n;
  const double s = c.sum() / n;
  V.colwise() -= r;
  V.rowwise() -= c;
  V.array() += s;
}

void truncate_in_place(Eigen::MatrixXd& V, const MatchingMatrix& X,
                       double eps, MatchMode mode) {
  const int n = static_cast<int>(V.rows());
  if (mode == MatchMode::CutMatch) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (j == k) {
          V(j, j) = 0.0;
          continue;
        }
        const double lo = std::max(-X(j, k) / eps, -X(k, j) / eps);
        const double hi = std::min((1.0 - X(j, k)) / eps, (1.0 - X(k, j)) / eps);
        if (lo > hi) throw std::logic_error("truncate_c2: empty clamp interval (infeasible X_prev)");
        V(j, k) = std::min(std::max(V(j, k), lo), hi);
      }
    }
  } else {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        const double lo = -X(j, k) / eps;
        const double hi = (1.0 - X(j, k)) / eps;
        if (lo > hi) throw std::logic_error("truncate_c2: empty clamp interval (infeasible X_prev)");
        V(j, k) = std::min(std::max(V(j, k), lo), hi);
      }
    }
  }
}

}  // namespace

ProjectionResult bregman_project_zero_diag(const Eigen::MatrixXd& X_raw,
                                           double tau, int max_iter) {
  if (!X_raw.allFinite())
    throw std::invalid_argument("bregman_project_zero_diag: non-finite input");
  ProjectionResult res;
  res.X = X_raw;
  for (int it = 0; it < max_iter; ++it) {
    const int n = static_cast<int>(res.X.rows());
    const Eigen::VectorXd r = res.X.rowwise().sum();
    const Eigen::RowVectorXd c = res.X.colwise().sum();
    const double s = c.sum();
    // X + (1 1^T - X 1 1^T - 1 1^T X)/n + (1 1^T X 1 1^T)/n^2, then ramp
    res.X.colwise() -= r / n;
    res.X.rowwise() -= c / n;
    res.X.array() += 1.0 / n + s / (static_cast<double>(n) * n);
    res.X = res.X.cwiseMax(0.0);
    res.X.diagonal().setZero();
    res.iterations = it + 1;
    res.residuals.push_back(projection_residual(res.X));
    if (res.residuals.back() <= tau) {
      res.converged = true;
      break;
    }
  }
  return res;
}

Eigen::MatrixXd center_c1_symmetric(const Eigen::MatrixXd& U, double tau_feas) {
  if ((U - U.transpose()).cwiseAbs().maxCoeff() > tau_feas)
    throw std::invalid_argument("center_c1_symmetric: input not symmetric");
  Eigen::MatrixXd V = U;
  center_in_place(V);
  return V;
}

Eigen::MatrixXd center_c1_doubly(const Eigen::MatrixXd& U) {
  Eigen::MatrixXd V = U;
  center_in_place(V);
  return V;
}

Eigen::MatrixXd truncate_c2(const Eigen::MatrixXd& V,
                            const MatchingMatrix& X_prev, double eps,
                            MatchMode mode) {
  if (eps <= 0) throw std::invalid_argument("truncate_c2: eps must be > 0");
  Eigen::MatrixXd out = V;
  truncate_in_place(out, X_prev, eps, mode);
  return out;
}

DirectionResult project_direction(const Eigen::MatrixXd& U,
                                  const MatchingMatrix& X_prev, double eps,
                                  MatchMode mode, double tau, int max_proj,
                                  bool dykstra_correction) {
  if (eps <= 0) throw std::invalid_argument("project_direction: eps must be > 0");
  if (mode == MatchMode::CutMatch &&
      (U - U.transpose()).cwiseAbs().maxCoeff() > 1e-6)
    throw std::invalid_argument("project_direction: CutMatch mode requires symmetrized U");

  DirectionResult res;
  res.V = U;
  Eigen::MatrixXd p, q;
  if (dykstra_correction) {
    p = Eigen::MatrixXd::Zero(U.rows(), U.cols());
    q = p;
  }
  for (int sweep = 0; sweep < max_proj; ++sweep) {
    const Eigen::MatrixXd prev = res.V;
    if (dykstra_correction) {
      Eigen::MatrixXd t = res.V + p;
      Eigen::MatrixXd w = t;
      center_in_place(w);
      p = t - w;
      t = w + q;
      res.V = t;
      truncate_in_place(res.V, X_prev, eps, mode);
      q = t - res.V;
    } else {
      center_in_place(res.V);
      truncate_in_place(res.V, X_prev, eps, mode);
    }
    res.sweeps = sweep + 1;
    if ((res.V - prev).cwiseAbs().maxCoeff() <= tau) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace cutmatch
