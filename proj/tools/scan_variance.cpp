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

// Exploration tool for the variance study's design space: sweeps circuit
// depth / parameter-sharing / gradient-pooling variants and prints the
// fitted log10-variance slope per initialization range.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "bplab/circuit.hpp"
#include "bplab/gradient.hpp"
#include "bplab/linear_fit.hpp"
#include "bplab/observable.hpp"
#include "bplab/rng.hpp"

using namespace bplab;

namespace {

double population_variance(const std::vector<double>& values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    return var / static_cast<double>(values.size());
}

std::vector<RotationAxis> draw_axes_subset(std::size_t n, Rng& rng, bool with_z) {
    static constexpr RotationAxis kAll[3] = {RotationAxis::X, RotationAxis::Y,
                                             RotationAxis::Z};
    std::vector<RotationAxis> axes(n);
    for (auto& a : axes) a = kAll[rng.bounded_int(with_z ? 3 : 2)];
    return axes;
}

} // namespace

int main(int argc, char** argv) {
    std::size_t reps = 2;
    bool shared = false;
    bool with_z = true;
    bool use_p0 = true;
    bool prologue = false;
    bool alternating = false;
    bool randomize_axes = false;
    std::size_t samples = 500;
    std::uint64_t seed = 1;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--reps")) reps = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--shared")) shared = true;
        else if (!std::strcmp(argv[i], "--no-z")) with_z = false;
        else if (!std::strcmp(argv[i], "--zall")) use_p0 = false;
        else if (!std::strcmp(argv[i], "--prologue")) prologue = true;
        else if (!std::strcmp(argv[i], "--alt")) alternating = true;
        else if (!std::strcmp(argv[i], "--alt-rand")) { alternating = true; randomize_axes = true; }
        else if (!std::strcmp(argv[i], "--samples")) samples = std::strtoull(argv[++i], nullptr, 10);
        else if (!std::strcmp(argv[i], "--seed")) seed = std::strtoull(argv[++i], nullptr, 10);
        else { std::fprintf(stderr, "unknown arg %s\n", argv[i]); return 2; }
    }
    const std::vector<std::size_t> qubits = {5, 7, 9, 11, 13, 15};
    std::printf("# layout=%s reps=%zu sharing=%s axes=%s obs=%s prologue=%d samples=%zu seed=%llu\n",
                alternating ? (randomize_axes ? "alt-rand" : "alt-ry") : "bp",
                reps, shared ? "shared" : "indep", with_z ? "xyz" : "xy",
                use_p0 ? "p0" : "zall", prologue ? 1 : 0, samples,
                static_cast<unsigned long long>(seed));
    const auto& ranges = default_ranges();
    for (std::size_t r = 0; r < ranges.size(); ++r) {
        std::vector<double> log_var_last, log_var_layer, log_var_all;
        std::vector<double> xs;
        for (std::size_t n : qubits) {
            std::vector<double> pool_last, pool_layer, pool_all;
            for (std::size_t s = 0; s < samples; ++s) {
                Rng rng(derive_seed(seed, {r, n, s}));
                CircuitSpec circuit;
                if (alternating) {
                    circuit = build_alternating_ansatz(n, reps);
                    if (randomize_axes) {
                        static constexpr GateKind kRot[3] = {
                            GateKind::RX, GateKind::RY, GateKind::RZ};
                        for (auto& g : circuit.gates)
                            if (g.kind != GateKind::CZ)
                                g.kind = kRot[rng.bounded_int(with_z ? 3 : 2)];
                    }
                } else {
                    const auto axes = draw_axes_subset(n, rng, with_z);
                    circuit = build_random_bp_circuit(
                        n, axes, reps,
                        shared ? ParamSharing::kSharedAcrossRepetitions
                               : ParamSharing::kPerRepetition,
                        prologue);
                }
                const auto params = draw_params(ranges[r], circuit.n_params, rng);
                const Observable obs = use_p0 ? Observable::return_probability()
                                              : Observable::pauli_z_all(n);
                const auto grad =
                    use_p0 ? return_probability_shift_gradient(circuit, params)
                           : parameter_shift_gradient(circuit, params, obs);
                pool_last.push_back(grad.back());
                const std::size_t layer_begin = circuit.n_params - n;
                for (std::size_t k = layer_begin; k < circuit.n_params; ++k)
                    pool_layer.push_back(grad[k]);
                for (double g : grad) pool_all.push_back(g);
            }
            xs.push_back(static_cast<double>(n));
            log_var_last.push_back(std::log10(population_variance(pool_last)));
            log_var_layer.push_back(std::log10(population_variance(pool_layer)));
            log_var_all.push_back(std::log10(population_variance(pool_all)));
        }
        const LineFit f_last = fit_line(xs, log_var_last);
        const LineFit f_layer = fit_line(xs, log_var_layer);
        const LineFit f_all = fit_line(xs, log_var_all);
        std::printf("%-9s last %+.3f (r2 %.3f) | layer %+.3f (r2 %.3f) | all %+.3f (r2 %.3f)\n",
                    ranges[r].label.c_str(), f_last.slope, f_last.r_squared,
                    f_layer.slope, f_layer.r_squared, f_all.slope,
                    f_all.r_squared);
        std::printf("          lv_last:");
        for (double v : log_var_last) std::printf(" %.2f", v);
        std::printf("  lv_layer:");
        for (double v : log_var_layer) std::printf(" %.2f", v);
        std::printf("\n");
        std::fflush(stdout);
    }
    return 0;
}
