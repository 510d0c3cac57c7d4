#include "cutmatch/hungarian.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cutmatch {

namespace {

// Kuhn's augmenting-path matching on the allowed cells; used only to verify
// a feasible assignment exists before costs are patched.
bool has_perfect_matching(const std::vector<std::vector<bool>>& allowed) {
  const int n = static_cast<int>(allowed.size());
  std::vector<int> match_col(n, -1);
  std::vector<char> visited(n);
  std::function<bool(int)> try_row = [&](int r) -> bool {
    for (int c = 0; c < n; ++c) {
      if (!allowed[r][c] || visited[c]) continue;
      visited[c] = 1;
      if (match_col[c] < 0 || try_row(match_col[c])) {
        match_col[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < n; ++r) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!try_row(r)) return false;
  }
  return true;
}

}  // namespace

std::vector<int> solve_assignment(
    const Eigen::MatrixXd& profit,
    const std::vector<std::pair<int, int>>& forbidden) {
  const int n = static_cast<int>(profit.rows());
  if (profit.cols() != n) throw std::invalid_argument("solve_assignment: profit must be square");
  if (n == 0) return {};
  if (!profit.allFinite()) throw std::invalid_argument("solve_assignment: non-finite profit");

  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, true));
  for (const auto& [i, j] : forbidden) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("solve_assignment: forbidden cell out of range");
    allowed[i][j] = false;
  }
  if (!forbidden.empty() && !has_perfect_matching(allowed))
    throw std::invalid_argument("solve_assignment: forbidden set admits no feasible assignment");

  // Minimize cost = -profit; forbidden cells get a cost no feasible
  // assignment can reach, so the optimum never uses them.
  const double max_abs = profit.cwiseAbs().maxCoeff();
  const double big = (2.0 * max_abs + 1.0) * (n + 1);
  Eigen::MatrixXd cost = -profit;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!allowed[i][j]) cost(i, j) = big;

  // Shortest augmenting paths with dual potentials, one row at a time.
  // Column scans run in index order, so ties resolve to the lowest column.
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> assigned_row(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    assigned_row[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = assigned_row[j0];
      int j1 = -1;
      double delta = inf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[assigned_row[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (assigned_row[j0] != 0);
    do {
      const int j1 = way[j0];
      assigned_row[j0] = assigned_row[j1];
      j0 = j1;
    } while (j0);
  }

  std::vector<int> sigma(n, -1);
  for (int j = 1; j <= n; ++j)
    if (assigned_row[j] > 0) sigma[assigned_row[j] - 1] = j - 1;
  for (int i = 0; i < n; ++i)
    if (!allowed[i][sigma[i]])
      throw std::logic_error("solve_assignment: optimum touched a forbidden cell");
  return sigma;
}

}  // namespace cutmatch
