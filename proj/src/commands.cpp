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

#include "bplab/commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <vector>

#include "bplab/config.hpp"
#include "bplab/csv.hpp"
#include "bplab/errors.hpp"
#include "bplab/experiments.hpp"
#include "bplab/manifest.hpp"
#include "bplab/version.hpp"

namespace bplab {

namespace {

/// Applies the BP_LAB_SEED override (decimal 64-bit); empty/unset is a no-op.
void apply_seed_override(std::uint64_t& base_seed) {
    const char* text = std::getenv("BP_LAB_SEED");
    if (text == nullptr || *text == '\0') {
        return;
    }
    std::uint64_t value = 0;
    const char* end = text;
    while (*end != '\0') {
        ++end;
    }
    const auto result = std::from_chars(text, end, value, 10);
    if (result.ec != std::errc{} || result.ptr != end) {
        throw ConfigError(std::string("BP_LAB_SEED is not a decimal 64-bit "
                                      "integer: '") +
                          text + "'");
    }
    base_seed = value;
}

/// Tracks files written by one command run and removes them all on failure,
/// so output directories never hold partial results.
class OutputSet {
  public:
    explicit OutputSet(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::filesystem::path path_for(const std::string& name) {
        names_.push_back(name);
        return dir_ / name;
    }

    const std::vector<std::string>& names() const { return names_; }

    void remove_all() {
        for (const std::string& name : names_) {
            std::error_code ignored;
            std::filesystem::remove(dir_ / name, ignored);
        }
    }

  private:
    std::filesystem::path dir_;
    std::vector<std::string> names_;
};

void write_manifest(OutputSet& outputs, const std::string& command,
                    const std::string& config_json, std::uint64_t base_seed,
                    const std::string& expectation_mode,
                    const std::string& started_at) {
    RunManifest manifest;
    manifest.command = command;
    manifest.config_json = config_json;
    manifest.tool_version = kVersion;
    manifest.base_seed = base_seed;
    manifest.expectation_mode = expectation_mode;
    manifest.started_at = started_at;
    manifest.finished_at = utc_timestamp();
    const std::filesystem::path path = outputs.path_for("manifest.json");
    manifest.output_paths = outputs.names();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("cannot open " + path.string() + " for writing");
    }
    out << to_json(manifest);
    out.flush();
    if (!out) {
        throw ConfigError("I/O error while writing " + path.string());
    }
}

std::string shots_mode(const TrainingConfig& config) {
    return config.shots ? "shots=" + std::to_string(*config.shots) : "exact";
}

/// Shared run/cleanup/exit-code scaffold for the three commands.
int run_command(const std::filesystem::path& out_dir,
                const std::function<void(OutputSet&)>& body) {
    try {
        OutputSet outputs(out_dir);
        try {
            body(outputs);
        } catch (...) {
            outputs.remove_all();
            throw;
        }
        return 0;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const CapacityError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const NumericError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}

} // namespace

int cmd_variance(const std::string& config_path,
                 const std::filesystem::path& out_dir, std::size_t workers) {
    return run_command(out_dir, [&](OutputSet& outputs) {
        VarianceSweepConfig config =
            parse_variance_config(read_text_file(config_path));
        apply_seed_override(config.base_seed);
        const std::string started_at = utc_timestamp();

        const std::vector<VarianceResult> results =
            run_variance_sweep(config, workers);

        CsvFile variance_csv(outputs.path_for("variance.csv"),
                             {"range_label", "low", "high", "n_qubits",
                              "samples", "variance", "log10_variance"});
        for (const VarianceResult& r : results) {
            variance_csv.row({r.range_label, format_double(r.low),
                              format_double(r.high), format_u64(r.qubit_count),
                              format_u64(r.sample_count),
                              format_double(r.variance),
                              format_double(std::log10(r.variance))});
        }
        variance_csv.close();

        const std::vector<SlopeFit> fits = fit_all_slopes(results);
        CsvFile slopes_csv(
            outputs.path_for("slopes.csv"),
            {"range_label", "slope", "alpha", "intercept", "r_squared"});
        for (const SlopeFit& fit : fits) {
            slopes_csv.row({fit.range_label, format_double(fit.slope),
                            format_double(fit.alpha),
                            format_double(fit.intercept),
                            format_double(fit.r_squared)});
        }
        slopes_csv.close();
        if (fits.empty()) {
            std::fprintf(stderr,
                         "warning: fewer than 2 qubit counts per range; "
                         "slopes.csv contains no fits\n");
        }

        write_manifest(outputs, "variance", to_json(config), config.base_seed,
                       "exact", started_at);
    });
}

int cmd_train(const std::string& config_path,
              const std::filesystem::path& out_dir, std::size_t workers) {
    return run_command(out_dir, [&](OutputSet& outputs) {
        TrainingConfig config =
            parse_training_config(read_text_file(config_path));
        apply_seed_override(config.base_seed);
        const std::string started_at = utc_timestamp();

        const std::vector<TrainingTrace> traces = run_training(config, workers);

        CsvFile training_csv(
            outputs.path_for("training.csv"),
            {"range_label", "n_qubits", "run_index", "step", "cost"});
        for (const TrainingTrace& trace : traces) {
            for (std::size_t run = 0; run < trace.per_run_costs.size(); ++run) {
                const auto& costs = trace.per_run_costs[run];
                for (std::size_t step = 0; step < costs.size(); ++step) {
                    training_csv.row({trace.range_label,
                                      format_u64(trace.qubit_count),
                                      format_u64(run), format_u64(step),
                                      format_double(costs[step])});
                }
            }
        }
        training_csv.close();

        CsvFile mean_csv(outputs.path_for("training_mean.csv"),
                         {"range_label", "n_qubits", "step", "mean_cost"});
        for (const TrainingTrace& trace : traces) {
            for (std::size_t step = 0; step < trace.mean_costs.size(); ++step) {
                mean_csv.row({trace.range_label, format_u64(trace.qubit_count),
                              format_u64(step),
                              format_double(trace.mean_costs[step])});
            }
        }
        mean_csv.close();

        write_manifest(outputs, "train", to_json(config), config.base_seed,
                       shots_mode(config), started_at);
    });
}

int cmd_noise(const std::string& config_path,
              const std::filesystem::path& out_dir, std::size_t workers) {
    return run_command(out_dir, [&](OutputSet& outputs) {
        TrainingConfig config =
            parse_training_config(read_text_file(config_path));
        apply_seed_override(config.base_seed);
        if (!config.shots) {
            throw ConfigError("the noise command requires `shots` in the "
                              "config (key: shots)");
        }
        const std::string started_at = utc_timestamp();

        const std::vector<TrainingTrace> traces =
            run_noise_study(config, workers);

        CsvFile noise_csv(outputs.path_for("noise_runs.csv"),
                          {"range_label", "n_qubits", "shots", "run_index",
                           "step", "cost"});
        // run_noise_study emits one trace per run, grouped per (range, n)
        // in config order; recover the run index from that grouping.
        std::size_t run_in_cell = 0;
        std::string cell_label;
        std::size_t cell_qubits = 0;
        for (const TrainingTrace& trace : traces) {
            if (trace.range_label != cell_label ||
                trace.qubit_count != cell_qubits) {
                cell_label = trace.range_label;
                cell_qubits = trace.qubit_count;
                run_in_cell = 0;
            }
            const auto& costs = trace.per_run_costs.front();
            for (std::size_t step = 0; step < costs.size(); ++step) {
                noise_csv.row({trace.range_label,
                               format_u64(trace.qubit_count),
                               format_u64(*config.shots),
                               format_u64(run_in_cell), format_u64(step),
                               format_double(costs[step])});
            }
            ++run_in_cell;
        }
        noise_csv.close();

        write_manifest(outputs, "noise", to_json(config), config.base_seed,
                       shots_mode(config), started_at);
    });
}

} // namespace bplab
