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

#include "bplab/experiments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "bplab/adam.hpp"
#include "bplab/errors.hpp"
#include "bplab/gradient.hpp"
#include "bplab/observable.hpp"
#include "bplab/parallel.hpp"
#include "bplab/rng.hpp"
#include "bplab/state_vector.hpp"

namespace bplab {

namespace {

/// Population variance (divide by N), accumulated in index order so the
/// result is independent of how samples were scheduled across workers.
double population_variance(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) {
        mean += v;
    }
    mean /= static_cast<double>(values.size());
    double sum_sq = 0.0;
    for (double v : values) {
        sum_sq += (v - mean) * (v - mean);
    }
    return sum_sq / static_cast<double>(values.size());
}

std::vector<std::size_t> all_wires(std::size_t n_qubits) {
    std::vector<std::size_t> wires(n_qubits);
    for (std::size_t q = 0; q < n_qubits; ++q) {
        wires[q] = q;
    }
    return wires;
}

/// One training run: Adam on the identity-learning cost 1 - E(theta)^2 with
/// E the return probability |<0...0|U(theta)|0...0>|^2. The recorded cost is
/// exact, or — when `shots` is set — re-measured per step from a finite
/// Z-parity sample over all wires (1 - sampled_expval^2), while the gradient
/// stays exact unless `sampled_gradients` asks for noisy shifts too.
std::vector<double> train_one_run(const TrainingConfig& config,
                                  std::size_t range_index, std::size_t n,
                                  std::size_t run_index,
                                  const TrainingHooks& hooks) {
    const ParamRange& range = config.ranges[range_index];
    const CircuitSpec circuit = build_alternating_ansatz(n, config.layers);

    Rng init_rng(derive_seed(config.base_seed, {range_index, n, run_index}));
    std::vector<double> params =
        hooks.zero_initial_params
            ? std::vector<double>(circuit.n_params, 0.0)
            : draw_params(range, circuit.n_params, init_rng);

    // Separate streams so measurement noise and gradient noise never shift
    // each other's draws; the extra trailing index keeps them disjoint from
    // the init stream (lists of different lengths hash differently).
    Rng measure_rng(
        derive_seed(config.base_seed, {range_index, n, run_index, 1}));
    Rng gradient_rng(
        derive_seed(config.base_seed, {range_index, n, run_index, 2}));

    const Observable return_prob = Observable::return_probability();
    const std::vector<std::size_t> wires = all_wires(n);
    AdamOptimizer optimizer(circuit.n_params, config.learning_rate);
    StateVector state(n);

    std::vector<double> costs(config.steps, 0.0);
    // E for the first composite gradient; refreshed after every update.
    apply_circuit(circuit, params, state);
    double expectation = state.return_probability();

    for (std::size_t step = 0; step < config.steps; ++step) {
        std::vector<double> grad =
            config.sampled_gradients
                ? sampled_shift_gradient(circuit, params, return_prob,
                                         *config.shots, gradient_rng)
                : return_probability_shift_gradient(circuit, params);
        // Chain rule for C = 1 - E^2: dC/dk = -2 E dE/dk.
        for (double& g : grad) {
            g *= -2.0 * expectation;
        }
        optimizer.step(params, grad);

        state.reset();
        apply_circuit(circuit, params, state);
        expectation = state.return_probability();
        double cost;
        if (config.shots) {
            const double sampled =
                state.sample_expval_z(wires, *config.shots, measure_rng);
            cost = 1.0 - sampled * sampled;
        } else {
            cost = 1.0 - expectation * expectation;
        }
        if (!std::isfinite(cost)) {
            throw NumericError(
                "non-finite cost for range " + range.label + " at n=" +
                std::to_string(n) + ", run " + std::to_string(run_index) +
                ", step " + std::to_string(step));
        }
        costs[step] = cost;
    }
    return costs;
}

std::vector<TrainingTrace> run_training_impl(const TrainingConfig& config,
                                             std::size_t workers,
                                             const TrainingHooks& hooks) {
    validate(config);
    const std::size_t n_cells = config.ranges.size() * config.qubit_counts.size();
    std::vector<TrainingTrace> traces(n_cells);
    for (std::size_t r = 0; r < config.ranges.size(); ++r) {
        for (std::size_t qi = 0; qi < config.qubit_counts.size(); ++qi) {
            TrainingTrace& trace = traces[r * config.qubit_counts.size() + qi];
            trace.range_label = config.ranges[r].label;
            trace.qubit_count = config.qubit_counts[qi];
            trace.per_run_costs.assign(config.runs, {});
        }
    }
    // Runs are the parallel unit; each writes only its preallocated slot.
    parallel_for(n_cells * config.runs, workers, [&](std::size_t item) {
        const std::size_t cell = item / config.runs;
        const std::size_t run = item % config.runs;
        const std::size_t r = cell / config.qubit_counts.size();
        const std::size_t qi = cell % config.qubit_counts.size();
        traces[cell].per_run_costs[run] =
            train_one_run(config, r, config.qubit_counts[qi], run, hooks);
    });
    for (TrainingTrace& trace : traces) {
        trace.mean_costs.assign(config.steps, 0.0);
        for (const auto& run_costs : trace.per_run_costs) {
            for (std::size_t t = 0; t < config.steps; ++t) {
                trace.mean_costs[t] += run_costs[t];
            }
        }
        for (double& m : trace.mean_costs) {
            m /= static_cast<double>(config.runs);
        }
    }
    return traces;
}

} // namespace

std::vector<VarianceResult> run_variance_sweep(const VarianceSweepConfig& config,
                                               std::size_t workers,
                                               const VarianceHooks& hooks) {
    validate(config);
    const std::size_t n_cells = config.ranges.size() * config.qubit_counts.size();
    std::vector<VarianceResult> results(n_cells);
    // Grid cells are the parallel unit; samples inside a cell run in index
    // order so the variance accumulation is reproducible.
    parallel_for(n_cells, workers, [&](std::size_t cell) {
        const std::size_t r = cell / config.qubit_counts.size();
        const std::size_t qi = cell % config.qubit_counts.size();
        const ParamRange& range = config.ranges[r];
        const std::size_t n = config.qubit_counts[qi];
        const Observable observable = Observable::pauli_z_all(n);

        std::vector<double> gradients(config.samples_per_point, 0.0);
        for (std::size_t s = 0; s < config.samples_per_point; ++s) {
            const std::size_t seed_index = hooks.identical_samples ? 0 : s;
            Rng rng(derive_seed(config.base_seed, {r, n, seed_index}));
            const std::vector<RotationAxis> axes =
                hooks.forced_axis
                    ? std::vector<RotationAxis>(n, *hooks.forced_axis)
                    : draw_axes(n, rng);
            const CircuitSpec circuit =
                build_random_bp_circuit(n, axes, config.repetitions);
            const std::vector<double> params =
                draw_params(range, circuit.n_params, rng);
            gradients[s] = last_param_gradient(circuit, params, observable);
        }
        VarianceResult& result = results[cell];
        result.range_label = range.label;
        result.low = range.low;
        result.high = range.high;
        result.qubit_count = n;
        result.sample_count = config.samples_per_point;
        result.variance = population_variance(gradients);
    });
    return results;
}

SlopeFit fit_slope(const std::vector<VarianceResult>& range_results) {
    if (range_results.size() < 2) {
        throw NumericError("slope fit needs at least 2 grid points, got " +
                           std::to_string(range_results.size()));
    }
    std::vector<double> xs, ys;
    xs.reserve(range_results.size());
    ys.reserve(range_results.size());
    for (const VarianceResult& point : range_results) {
        if (!(point.variance > 0.0)) {
            throw NumericError(
                "cannot fit log10(variance): non-positive variance " +
                std::to_string(point.variance) + " for range " +
                point.range_label + " at n=" +
                std::to_string(point.qubit_count));
        }
        xs.push_back(static_cast<double>(point.qubit_count));
        ys.push_back(std::log10(point.variance));
    }
    const LineFit line = fit_line(xs, ys);
    SlopeFit fit;
    fit.range_label = range_results.front().range_label;
    fit.slope = line.slope;
    fit.intercept = line.intercept;
    fit.alpha = -line.slope * std::numbers::ln10;
    fit.r_squared = line.r_squared;
    return fit;
}

double relative_slope_improvement(const SlopeFit& shallow,
                                  const SlopeFit& steep) {
    if (!(shallow.slope < 0.0) || !(steep.slope < 0.0)) {
        throw NumericError(
            "relative improvement requires two negative slopes, got " +
            std::to_string(shallow.slope) + " and " +
            std::to_string(steep.slope));
    }
    return 100.0 * (std::abs(steep.slope) - std::abs(shallow.slope)) /
           std::abs(steep.slope);
}

std::vector<SlopeFit> fit_all_slopes(const std::vector<VarianceResult>& results) {
    std::vector<std::string> order;
    for (const VarianceResult& result : results) {
        bool seen = false;
        for (const std::string& label : order) {
            if (label == result.range_label) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            order.push_back(result.range_label);
        }
    }
    std::vector<SlopeFit> fits;
    for (const std::string& label : order) {
        std::vector<VarianceResult> group;
        for (const VarianceResult& result : results) {
            if (result.range_label == label) {
                group.push_back(result);
            }
        }
        if (group.size() >= 2) {
            fits.push_back(fit_slope(group));
        }
    }
    return fits;
}

std::vector<TrainingTrace> run_training(const TrainingConfig& config,
                                        std::size_t workers,
                                        const TrainingHooks& hooks) {
    return run_training_impl(config, workers, hooks);
}

std::vector<TrainingTrace> run_noise_study(const TrainingConfig& config,
                                           std::size_t workers) {
    if (!config.shots) {
        throw ConfigError("the noise study requires `shots` in the config");
    }
    const std::vector<TrainingTrace> averaged =
        run_training_impl(config, workers, {});
    // Re-emit per run so run-to-run dispersion stays visible downstream.
    std::vector<TrainingTrace> per_run;
    per_run.reserve(averaged.size() * config.runs);
    for (const TrainingTrace& trace : averaged) {
        for (std::size_t run = 0; run < trace.per_run_costs.size(); ++run) {
            TrainingTrace single;
            single.range_label = trace.range_label;
            single.qubit_count = trace.qubit_count;
            single.per_run_costs = {trace.per_run_costs[run]};
            single.mean_costs = trace.per_run_costs[run];
            per_run.push_back(std::move(single));
        }
    }
    return per_run;
}

} // namespace bplab
