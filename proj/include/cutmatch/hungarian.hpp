#pragma once

#include <utility>
#include <vector>

#include "cutmatch/types.hpp"

namespace cutmatch {

// Exact linear assignment: returns the permutation sigma maximizing
// sum_i profit(i, sigma(i)) over permutations avoiding the forbidden cells.
// Throws std::invalid_argument if no assignment avoids all forbidden cells.
// Deterministic; ties resolve toward lower column indices.
std::vector<int> solve_assignment(
    const Eigen::MatrixXd& profit,
    const std::vector<std::pair<int, int>>& forbidden = {});

}  // namespace cutmatch
