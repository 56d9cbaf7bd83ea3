// Copyright 2026 The bp-lab developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file experiments.hpp
 * The two studies this project reproduces, as library entry points.
 *
 * Variance sweep: for each (initialization range, qubit count), draw many
 * random layered circuits with fresh uniform parameters, compute the
 * final-parameter gradient, and report the population variance over samples.
 * The fitted slope of log10(variance) versus qubit count measures how fast
 * the landscape flattens - the barren-plateau onset rate.
 *
 * Training study: train the alternating hardware-efficient ansatz toward
 * the |0...0> state with Adam, recording the cost trajectory per run; an
 * optional finite-shot mode adds measurement noise to the recorded cost.
 *
 * All entry points are deterministic functions of their config: per-sample
 * seeds are derived from (base_seed, range index, qubit count, sample index),
 * so results are identical whether samples run sequentially or in parallel.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bplab/circuit.hpp"
#include "bplab/config.hpp"
#include "bplab/linear_fit.hpp"

namespace bplab {

/// Gradient variance at one (range, qubit count) grid point.
struct VarianceResult {
    std::string range_label;
    double low = 0.0;
    double high = 0.0;
    std::size_t qubit_count = 0;
    std::size_t sample_count = 0;
    double variance = 0.0;
};

/// Least-squares fit of log10(variance) against qubit count for one range.
struct SlopeFit {
    std::string range_label;
    /// d log10(variance) / d qubit; negative when gradients decay.
    double slope = 0.0;
    double intercept = 0.0;
    /// The decay exponent of variance ~ exp(-alpha * n); equals -slope*ln10.
    double alpha = 0.0;
    double r_squared = 0.0;
};

/// Cost trajectories for one (range, qubit count) training cell.
struct TrainingTrace {
    std::string range_label;
    std::size_t qubit_count = 0;
    /// runs x steps; cost recorded after each optimizer step.
    std::vector<std::vector<double>> per_run_costs;
    /// Elementwise mean over runs, length = steps.
    std::vector<double> mean_costs;
};

/// Test hooks for the variance sweep; default-constructed means "off".
struct VarianceHooks {
    /// Force every rotation to one axis (all-Z makes every gradient zero).
    std::optional<RotationAxis> forced_axis;
    /// Reuse sample 0's seed for every sample, forcing identical draws.
    bool identical_samples = false;
};

/// Test hooks for the training study.
struct TrainingHooks {
    /// Start every run at exactly zero parameters (a stationary minimum).
    bool zero_initial_params = false;
};

std::vector<VarianceResult> run_variance_sweep(const VarianceSweepConfig& config,
                                               std::size_t workers = 1,
                                               const VarianceHooks& hooks = {});

/// Fits one range's results; requires >= 2 points, all variances > 0.
/// Throws NumericError naming the offending point on non-positive variance.
SlopeFit fit_slope(const std::vector<VarianceResult>& range_results);

/// 100 * (|steep.slope| - |shallow.slope|) / |steep.slope|.
/// Pre: both slopes negative (NumericError otherwise).
double relative_slope_improvement(const SlopeFit& shallow,
                                  const SlopeFit& steep);

/// Groups sweep results by range label (in config order) and fits each range
/// with >= 2 grid points; ranges with fewer points are skipped.
std::vector<SlopeFit> fit_all_slopes(const std::vector<VarianceResult>& results);

std::vector<TrainingTrace> run_training(const TrainingConfig& config,
                                        std::size_t workers = 1,
                                        const TrainingHooks& hooks = {});

/// Per-run traces for run-to-run dispersion studies: identical mechanics to
/// run_training but each returned trace holds a single run. Requires shots.
std::vector<TrainingTrace> run_noise_study(const TrainingConfig& config,
                                           std::size_t workers = 1);

} // namespace bplab
