#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutmatch/synthetic.hpp"
#include "cutmatch/types.hpp"

namespace cutmatch {

// Label-flip-invariant agreement: max(#equal, #different) / n, in [0.5, 1].
double cut_accuracy(const Eigen::VectorXi& labels, const Eigen::VectorXi& gt);

// Fraction of nodes i with sigma(i) = gt(i).
double matching_accuracy(const std::vector<int>& sigma,
                         const std::vector<int>& gt);

// One sweep cell: a generator configuration plus the swept parameter name.
struct SweepCell {
  std::string protocol;  // "5.1" or "5.2"
  std::string param;     // swept axis name
  double value = 0;
  double lambda1 = 0;    // 5.2 only
  double lambda2 = 0;
  SyntheticConfig joint_cfg;  // 5.2
  GmPairConfig gm_cfg;        // 5.1
};

using SweepGrid = std::vector<SweepCell>;

// Paper-style default grids: each axis swept with the others at the
// reference setting, times three (lambda1, lambda2) pairs for 5.2.
SweepGrid default_grid_52();
SweepGrid default_grid_51();

struct SweepRow {
  std::string protocol, param;
  double value = 0;
  double lambda1 = 0, lambda2 = 0;
  std::string solver, metric;
  double mean = 0, stddev = 0;
  int n_trials = 0;
  double mean_runtime_ms = 0;
  std::vector<double> trial_values;
  bool failed = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// Runs every cell of the grid for `trials` seeds each. 5.2 cells run
// cutmatch, vanilla spectral cut, vanilla one-graph matching and balanced
// cut; 5.1 cells run the standard matcher. Cells execute on `jobs` threads;
// rows come back ordered by cell index, and identical seeds reproduce
// identical results. Per-cell failures yield NaN rows instead of aborting.
SweepResult run_sweep(const SweepGrid& grid, int trials, std::uint64_t seed,
                      int jobs = 1);

// header: protocol,param,value,lambda1,lambda2,solver,metric,mean,std,
//         n_trials,mean_runtime_ms
void write_sweep_csv(const SweepResult& result, const std::string& path);
// Same rows plus full per-trial values.
void write_sweep_json(const SweepResult& result, const std::string& path);

}  // namespace cutmatch
