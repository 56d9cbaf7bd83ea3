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
 * @file test_cli.cpp
 * Command-level tests: output files, exit codes, determinism, seed override.
 */
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include <doctest.h>

#include "bplab/commands.hpp"
#include "bplab/config.hpp"
#include "bplab/manifest.hpp"
#include "bplab/version.hpp"

using namespace bplab;
namespace fs = std::filesystem;

namespace {

/// Unique scratch directory, removed on destruction.
struct ScratchDir {
    fs::path root;
    explicit ScratchDir(const char* tag) {
        root = fs::temp_directory_path() /
               (std::string("bplab_cli_") + tag + "_" +
                std::to_string(::getpid()));
        fs::remove_all(root);
        fs::create_directories(root);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(root, ec);
    }
    fs::path file(const std::string& name) const { return root / name; }
};

/// Scoped BP_LAB_SEED setter; restores "unset" on destruction.
struct SeedEnvGuard {
    explicit SeedEnvGuard(const char* value) {
        ::setenv("BP_LAB_SEED", value, 1);
    }
    ~SeedEnvGuard() { ::unsetenv("BP_LAB_SEED"); }
};

std::string write_config(const fs::path& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    out.close();
    return path.string();
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::size_t line_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text) {
        if (c == '\n') {
            ++lines;
        }
    }
    return lines;
}

const char* kSmallVariance =
    R"({"qubit_counts": [2, 3, 4], "samples_per_point": 6,
        "repetitions": 1, "base_seed": 77,
        "ranges": [{"label": "N", "low": 0.0, "high": 1.0},
                   {"label": "W", "low": 0.0, "high": 6.283185307179586}]})";

const char* kSmallTraining =
    R"({"qubit_counts": [3], "layers": 1, "steps": 3, "runs": 2,
        "learning_rate": 0.1, "base_seed": 5,
        "ranges": [{"label": "N", "low": 0.0, "high": 1.0}]})";

} // namespace

TEST_CASE("cmd_variance writes the three documented outputs") {
    ScratchDir dir("var");
    const auto config = write_config(dir.file("c.json"), kSmallVariance);
    const fs::path out = dir.file("out");
    REQUIRE(cmd_variance(config, out, 1) == 0);

    const std::string variance_csv = slurp(out / "variance.csv");
    CHECK(variance_csv.rfind("range_label,low,high,n_qubits,samples,"
                             "variance,log10_variance\n", 0) == 0);
    CHECK(line_count(variance_csv) == 1 + 2 * 3);

    const std::string slopes_csv = slurp(out / "slopes.csv");
    CHECK(slopes_csv.rfind("range_label,slope,alpha,intercept,r_squared\n",
                           0) == 0);
    CHECK(line_count(slopes_csv) == 1 + 2);

    const RunManifest manifest = parse_manifest(slurp(out / "manifest.json"));
    CHECK(manifest.command == "variance");
    CHECK(manifest.tool_version == std::string(kVersion));
    CHECK(manifest.base_seed == 77);
    CHECK(manifest.expectation_mode == "exact");
    CHECK(manifest.config_json ==
          to_json(parse_variance_config(slurp(dir.file("c.json")))));
    REQUIRE(manifest.output_paths.size() == 3);
    for (const auto& name : manifest.output_paths) {
        CHECK(fs::exists(out / name));
    }
    CHECK(manifest.started_at.size() == 20);
    CHECK(manifest.finished_at.size() == 20);
}

TEST_CASE("cmd_variance output is bytewise identical across reruns and workers") {
    ScratchDir dir("det");
    const auto config = write_config(dir.file("c.json"), kSmallVariance);
    REQUIRE(cmd_variance(config, dir.file("a"), 1) == 0);
    REQUIRE(cmd_variance(config, dir.file("b"), 3) == 0);
    CHECK(slurp(dir.file("a") / "variance.csv") ==
          slurp(dir.file("b") / "variance.csv"));
    CHECK(slurp(dir.file("a") / "slopes.csv") ==
          slurp(dir.file("b") / "slopes.csv"));
}

TEST_CASE("a single qubit count yields an empty slope table") {
    ScratchDir dir("single");
    const auto config = write_config(
        dir.file("c.json"),
        R"({"qubit_counts": [3], "samples_per_point": 4, "base_seed": 1})");
    const fs::path out = dir.file("out");
    REQUIRE(cmd_variance(config, out, 1) == 0);
    CHECK(slurp(out / "slopes.csv") ==
          "range_label,slope,alpha,intercept,r_squared\n");
    CHECK(line_count(slurp(out / "variance.csv")) == 1 + 5);
}

TEST_CASE("missing or invalid configs exit 2 and leave no outputs") {
    ScratchDir dir("bad");
    const fs::path out = dir.file("out");
    SUBCASE("missing file") {
        CHECK(cmd_variance(dir.file("absent.json").string(), out, 1) == 2);
    }
    SUBCASE("unparseable document") {
        const auto config = write_config(dir.file("c.json"), "{oops");
        CHECK(cmd_variance(config, out, 1) == 2);
    }
    SUBCASE("invariant violation: steps=0") {
        const auto config = write_config(
            dir.file("c.json"),
            R"({"qubit_counts": [3], "steps": 0, "base_seed": 1})");
        CHECK(cmd_train(config, out, 1) == 2);
    }
    SUBCASE("unknown key") {
        const auto config = write_config(
            dir.file("c.json"), R"({"qubits": [3]})");
        CHECK(cmd_variance(config, out, 1) == 2);
    }
    CHECK_FALSE(fs::exists(out / "variance.csv"));
    CHECK_FALSE(fs::exists(out / "training.csv"));
    CHECK_FALSE(fs::exists(out / "manifest.json"));
}

TEST_CASE("cmd_train writes per-run and mean trajectories") {
    ScratchDir dir("train");
    const auto config = write_config(dir.file("c.json"), kSmallTraining);
    const fs::path out = dir.file("out");
    REQUIRE(cmd_train(config, out, 1) == 0);

    const std::string training_csv = slurp(out / "training.csv");
    CHECK(training_csv.rfind("range_label,n_qubits,run_index,step,cost\n",
                             0) == 0);
    CHECK(line_count(training_csv) == 1 + 2 * 3);

    const std::string mean_csv = slurp(out / "training_mean.csv");
    CHECK(mean_csv.rfind("range_label,n_qubits,step,mean_cost\n", 0) == 0);
    CHECK(line_count(mean_csv) == 1 + 3);

    const RunManifest manifest = parse_manifest(slurp(out / "manifest.json"));
    CHECK(manifest.command == "train");
    CHECK(manifest.expectation_mode == "exact");

    SUBCASE("rerun with a different worker count is bytewise identical") {
        REQUIRE(cmd_train(config, dir.file("again"), 2) == 0);
        CHECK(slurp(dir.file("again") / "training.csv") == training_csv);
        CHECK(slurp(dir.file("again") / "training_mean.csv") == mean_csv);
    }
}

TEST_CASE("cmd_noise needs shots and records the shot count") {
    ScratchDir dir("noise");
    SUBCASE("shots present") {
        const auto config = write_config(
            dir.file("c.json"),
            R"({"qubit_counts": [3], "layers": 1, "steps": 3, "runs": 2,
                "learning_rate": 0.1, "base_seed": 5, "shots": 50,
                "ranges": [{"label": "N", "low": 0.0, "high": 1.0}]})");
        const fs::path out = dir.file("out");
        REQUIRE(cmd_noise(config, out, 1) == 0);
        const std::string csv = slurp(out / "noise_runs.csv");
        CHECK(csv.rfind("range_label,n_qubits,shots,run_index,step,cost\n",
                        0) == 0);
        CHECK(line_count(csv) == 1 + 2 * 3);
        CHECK(csv.find("N,3,50,0,0,") != std::string::npos);
        CHECK(csv.find("N,3,50,1,2,") != std::string::npos);
        const RunManifest manifest =
            parse_manifest(slurp(out / "manifest.json"));
        CHECK(manifest.command == "noise");
        CHECK(manifest.expectation_mode == "shots=50");
    }
    SUBCASE("shots absent exits 2 with no outputs") {
        const auto config = write_config(dir.file("c.json"), kSmallTraining);
        const fs::path out = dir.file("out");
        CHECK(cmd_noise(config, out, 1) == 2);
        CHECK_FALSE(fs::exists(out / "noise_runs.csv"));
        CHECK_FALSE(fs::exists(out / "manifest.json"));
    }
}

TEST_CASE("BP_LAB_SEED overrides the configured base seed") {
    ScratchDir dir("seed");
    const auto config = write_config(dir.file("c.json"), kSmallVariance);
    REQUIRE(cmd_variance(config, dir.file("base"), 1) == 0);

    SUBCASE("a decimal value replaces the seed and changes results") {
        SeedEnvGuard guard("123456");
        REQUIRE(cmd_variance(config, dir.file("over"), 1) == 0);
        const RunManifest manifest =
            parse_manifest(slurp(dir.file("over") / "manifest.json"));
        CHECK(manifest.base_seed == 123456);
        CHECK(manifest.config_json.find("123456") != std::string::npos);
        CHECK(slurp(dir.file("over") / "variance.csv") !=
              slurp(dir.file("base") / "variance.csv"));
    }
    SUBCASE("an empty value means unset") {
        SeedEnvGuard guard("");
        REQUIRE(cmd_variance(config, dir.file("empty"), 1) == 0);
        const RunManifest manifest =
            parse_manifest(slurp(dir.file("empty") / "manifest.json"));
        CHECK(manifest.base_seed == 77);
        CHECK(slurp(dir.file("empty") / "variance.csv") ==
              slurp(dir.file("base") / "variance.csv"));
    }
    SUBCASE("a non-decimal value exits 2") {
        SeedEnvGuard guard("0x12");
        CHECK(cmd_variance(config, dir.file("bad"), 1) == 2);
    }
}

TEST_CASE("nested output directories are created on demand") {
    ScratchDir dir("nested");
    const auto config = write_config(dir.file("c.json"), kSmallTraining);
    const fs::path out = dir.root / "x" / "y" / "z";
    REQUIRE(cmd_train(config, out, 1) == 0);
    CHECK(fs::exists(out / "training.csv"));
}
