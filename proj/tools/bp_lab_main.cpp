// Copyright 2026 The bp-lab developers.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file bp_lab_main.cpp
 * Command-line front end for the barren-plateau experiment harness.
 *
 * Usage:
 *   bp-lab variance --config <path> --out <dir> [--workers N]
 *   bp-lab train    --config <path> --out <dir> [--workers N]
 *   bp-lab noise    --config <path> --out <dir> [--workers N]
 *   bp-lab --version
 *
 * Exit codes: 0 on success (including `--help`/`--version`), 2 for
 * command-line or configuration errors, 3 when a requested simulation
 * exceeds the supported capacity, 4 for numeric failures.
 */
#include <cstdio>
#include <filesystem>
#include <string>

#include <CLI11.hpp>

#include "bplab/commands.hpp"
#include "bplab/parallel.hpp"
#include "bplab/version.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Barren-plateau variance, training, and shot-noise experiments"};
    app.set_version_flag("--version", std::string(bplab::kVersion));
    app.require_subcommand(1);

    struct SubcommandArgs {
        std::string config_path;
        std::string out_dir;
        std::size_t workers = bplab::default_workers();
    };
    SubcommandArgs variance_args, train_args, noise_args;

    const auto add_common = [](CLI::App* sub, SubcommandArgs& args) {
        sub->add_option("--config", args.config_path, "Path to the JSON experiment config")
            ->required();
        sub->add_option("--out", args.out_dir, "Directory for CSV and manifest outputs")
            ->required();
        sub->add_option("--workers", args.workers, "Worker threads (default: available parallelism)")
            ->capture_default_str();
    };

    CLI::App* variance =
        app.add_subcommand("variance", "Sweep gradient variance across qubit counts and fit decay slopes");
    add_common(variance, variance_args);
    CLI::App* train = app.add_subcommand("train", "Train the layered ansatz and record cost trajectories");
    add_common(train, train_args);
    CLI::App* noise =
        app.add_subcommand("noise", "Repeat the training study with finite measurement shots");
    add_common(noise, noise_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // CLI11 returns 0 for --help/--version; collapse every genuine
        // parse failure onto the configuration-error exit code.
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (variance->parsed()) {
        return bplab::cmd_variance(variance_args.config_path,
                                   std::filesystem::path(variance_args.out_dir), variance_args.workers);
    }
    if (train->parsed()) {
        return bplab::cmd_train(train_args.config_path, std::filesystem::path(train_args.out_dir),
                                train_args.workers);
    }
    if (noise->parsed()) {
        return bplab::cmd_noise(noise_args.config_path, std::filesystem::path(noise_args.out_dir),
                                noise_args.workers);
    }
    std::fprintf(stderr, "error: no subcommand selected\n");
    return 2;
}
