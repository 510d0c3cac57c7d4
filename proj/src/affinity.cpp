#include "cutmatch/affinity.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace cutmatch {

int tau_checked(int i, int a, int n) {
  if (i < 0 || i >= n || a < 0 || a >= n)
    throw std::out_of_range("tau: index out of range");
  return tau(i, a, n);
}

AffinityMatrix build_affinity(const Graph& g, double delta1) {
  if (delta1 <= 0) throw std::invalid_argument("build_affinity: delta1 must be > 0");
  const int n = g.n;

  // directed edge list with precomputed lengths
  std::vector<int> from, to;
  std::vector<double> len;
  from.reserve(2 * g.edges.size());
  for (const auto& [i, j] : g.edges) {
    const double d = (g.positions.row(i) - g.positions.row(j)).norm();
    from.push_back(i); to.push_back(j); len.push_back(d);
    from.push_back(j); to.push_back(i); len.push_back(d);
  }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(from.size() * from.size());
  for (std::size_t p = 0; p < from.size(); ++p) {
    for (std::size_t q = 0; q < from.size(); ++q) {
      const int i = from[p], j = to[p], a = from[q], b = to[q];
      if (i == a || j == b) continue;
      const double diff = len[p] - len[q];
      trip.emplace_back(tau(i, a, n), tau(j, b, n),
                        std::exp(-diff * diff / delta1));
    }
  }
  AffinityMatrix A(n * n, n * n);
  A.setFromTriplets(trip.begin(), trip.end());
  A.makeCompressed();
  return A;
}

SimilarityMatrix build_similarity(const Graph& g, double delta2, double delta3) {
  if (delta2 <= 0 || delta3 <= 0)
    throw std::invalid_argument("build_similarity: bandwidths must be > 0");
  const int n = g.n;
  SimilarityMatrix W = SimilarityMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double df = (g.features.row(i) - g.features.row(j)).squaredNorm();
      const double dl = (g.positions.row(i) - g.positions.row(j)).squaredNorm();
      const double w = std::exp(-df / delta2) + std::exp(-dl / delta3);
      W(i, j) = w;
      W(j, i) = w;
    }
  }
  return W;
}

Eigen::MatrixXd laplacian(const SimilarityMatrix& W) {
  Eigen::MatrixXd L = -W;
  L.diagonal() += W.rowwise().sum();
  return L;
}

void save_affinity_coo(const AffinityMatrix& A, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write affinity file: " + path);
  out.precision(17);
  for (int k = 0; k < A.outerSize(); ++k)
    for (AffinityMatrix::InnerIterator it(A, k); it; ++it)
      out << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace cutmatch
