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
 * @file config.hpp
 * Experiment configuration types and their JSON serialization.
 *
 * Each command consumes a single JSON document with explicit keys mirroring
 * these structs; reference configs ship in configs/. All validation errors
 * name the offending key.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bplab/circuit.hpp"

namespace bplab {

/// Configuration of the gradient-variance sweep (the slope experiment).
struct VarianceSweepConfig {
    std::vector<std::size_t> qubit_counts = {5, 7, 9, 11, 13, 15};
    std::size_t samples_per_point = 200;
    std::vector<ParamRange> ranges = default_ranges();
    std::size_t repetitions = 2;
    std::uint64_t base_seed = 20240915;

    bool operator==(const VarianceSweepConfig&) const = default;
};

/// Configuration of the identity-training study (exact or finite shots).
struct TrainingConfig {
    std::vector<std::size_t> qubit_counts = {5, 10, 15};
    std::size_t layers = 2;
    std::size_t steps = 50;
    std::size_t runs = 10;
    double learning_rate = 0.1;
    std::vector<ParamRange> ranges = default_ranges();
    /// Finite shot count for the *recorded* cost; absent means exact.
    std::optional<std::uint64_t> shots;
    /// When true, gradient evaluations are also shot-sampled (exploration
    /// mode, off by default; gradients stay exact otherwise).
    bool sampled_gradients = false;
    std::uint64_t base_seed = 20240915;

    bool operator==(const TrainingConfig&) const = default;
};

/// Throws ConfigError (naming the key) if invariants are violated.
void validate(const VarianceSweepConfig& config);
void validate(const TrainingConfig& config);

/// JSON text <-> config structs. Parsing rejects unknown keys so typos in
/// config files fail loudly instead of silently using defaults.
VarianceSweepConfig parse_variance_config(const std::string& json_text);
TrainingConfig parse_training_config(const std::string& json_text);
std::string to_json(const VarianceSweepConfig& config);
std::string to_json(const TrainingConfig& config);

/// Loads and parses a config file; ConfigError on missing/unreadable file.
std::string read_text_file(const std::string& path);

} // namespace bplab
