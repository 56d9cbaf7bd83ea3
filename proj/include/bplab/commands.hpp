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
 * @file commands.hpp
 * The three CLI commands as library functions returning process exit codes.
 *
 * Each command reads a JSON config, runs the corresponding experiment, and
 * writes CSV outputs plus a `manifest.json` into the output directory.
 * Exit codes: 0 success, 2 configuration error, 3 resource/capacity error,
 * 4 internal numerical error. On failure every file the run had already
 * written is removed, so an output directory never holds partial results.
 *
 * The environment variable BP_LAB_SEED (decimal 64-bit integer), when set
 * and non-empty, overrides the config's base_seed; the manifest records the
 * value actually used.
 */
#pragma once

#include <cstddef>
#include <filesystem>
#include <string>

namespace bplab {

/// Writes variance.csv, slopes.csv, manifest.json. With fewer than two
/// qubit counts, slopes.csv holds only the header and a warning is printed.
int cmd_variance(const std::string& config_path,
                 const std::filesystem::path& out_dir, std::size_t workers);

/// Writes training.csv, training_mean.csv, manifest.json.
int cmd_train(const std::string& config_path,
              const std::filesystem::path& out_dir, std::size_t workers);

/// Writes noise_runs.csv, manifest.json. Requires `shots` in the config.
int cmd_noise(const std::string& config_path,
              const std::filesystem::path& out_dir, std::size_t workers);

} // namespace bplab
