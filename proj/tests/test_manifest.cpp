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
 * @file test_manifest.cpp
 * Round-trip and formatting tests for the run manifest.
 */
#include <cctype>
#include <string>

#include <doctest.h>

#include "bplab/config.hpp"
#include "bplab/errors.hpp"
#include "bplab/manifest.hpp"
#include "bplab/version.hpp"

using namespace bplab;

namespace {

RunManifest example_manifest() {
    RunManifest m;
    m.command = "variance";
    m.config_json = to_json(VarianceSweepConfig{});
    m.tool_version = std::string(kVersion);
    m.base_seed = 20240915;
    m.expectation_mode = "exact";
    m.started_at = "2026-02-11T09:31:07Z";
    m.finished_at = "2026-02-11T09:45:12Z";
    m.output_paths = {"variance.csv", "slopes.csv", "manifest.json"};
    return m;
}

} // namespace

TEST_CASE("manifest round-trips losslessly") {
    const RunManifest m = example_manifest();
    CHECK(parse_manifest(to_json(m)) == m);

    RunManifest shots = m;
    shots.command = "noise";
    shots.expectation_mode = "shots=100";
    shots.base_seed = 1;
    shots.output_paths = {"noise_runs.csv", "manifest.json"};
    CHECK(parse_manifest(to_json(shots)) == shots);
}

TEST_CASE("manifest parsing rejects malformed documents") {
    CHECK_THROWS_AS(parse_manifest("not json"), ConfigError);
    CHECK_THROWS_AS(parse_manifest("[]"), ConfigError);
    CHECK_THROWS_AS(parse_manifest(R"({"command": "variance"})"), ConfigError);
}

TEST_CASE("utc_timestamp has the ISO 8601 Z-suffixed shape") {
    const std::string ts = utc_timestamp();
    REQUIRE(ts.size() == 20);
    // YYYY-MM-DDTHH:MM:SSZ
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u, 11u, 12u, 14u, 15u,
                          17u, 18u}) {
        CHECK(std::isdigit(static_cast<unsigned char>(ts[i])));
    }
    CHECK(ts[4] == '-');
    CHECK(ts[7] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts[13] == ':');
    CHECK(ts[16] == ':');
    CHECK(ts[19] == 'Z');
}
