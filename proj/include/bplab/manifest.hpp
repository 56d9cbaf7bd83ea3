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
 * @file manifest.hpp
 * Run manifest written next to every command's CSV outputs.
 *
 * The manifest records what was run (command, embedded config, tool version,
 * seed) and what it produced, so an output directory is self-describing.
 * Serialization round-trips losslessly: parse(write(m)) == m.
 */
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bplab {

struct RunManifest {
    /// One of "variance", "train", "noise".
    std::string command;
    /// The full config document the run used, as canonical JSON text.
    std::string config_json;
    std::string tool_version;
    std::uint64_t base_seed = 0;
    /// "exact" or "shots=<N>"; variance runs record "exact".
    std::string expectation_mode;
    /// ISO 8601 UTC timestamps.
    std::string started_at;
    std::string finished_at;
    /// File names (relative to the output directory) this run wrote.
    std::vector<std::string> output_paths;

    bool operator==(const RunManifest&) const = default;
};

std::string to_json(const RunManifest& manifest);
RunManifest parse_manifest(const std::string& json_text);

/// Current time as an ISO 8601 UTC string (e.g. "2026-02-11T09:31:07Z").
std::string utc_timestamp();

} // namespace bplab
