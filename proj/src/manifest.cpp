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

#include "bplab/manifest.hpp"

#include <ctime>

#include "json.hpp"

#include "bplab/errors.hpp"

namespace bplab {

namespace {
using nlohmann::json;
}

std::string to_json(const RunManifest& manifest) {
    json doc = {{"command", manifest.command},
                {"config", json::parse(manifest.config_json)},
                {"tool_version", manifest.tool_version},
                {"base_seed", manifest.base_seed},
                {"expectation_mode", manifest.expectation_mode},
                {"started_at", manifest.started_at},
                {"finished_at", manifest.finished_at},
                {"output_paths", manifest.output_paths}};
    return doc.dump(2) + "\n";
}

RunManifest parse_manifest(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded() || !doc.is_object()) {
        throw ConfigError("manifest is not a JSON object");
    }
    RunManifest manifest;
    try {
        manifest.command = doc.at("command").get<std::string>();
        manifest.config_json = doc.at("config").dump(2) + "\n";
        manifest.tool_version = doc.at("tool_version").get<std::string>();
        manifest.base_seed = doc.at("base_seed").get<std::uint64_t>();
        manifest.expectation_mode =
            doc.at("expectation_mode").get<std::string>();
        manifest.started_at = doc.at("started_at").get<std::string>();
        manifest.finished_at = doc.at("finished_at").get<std::string>();
        manifest.output_paths =
            doc.at("output_paths").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw ConfigError(std::string("manifest field error: ") + e.what());
    }
    return manifest;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buffer;
}

} // namespace bplab
