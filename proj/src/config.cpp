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

#include "bplab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "bplab/errors.hpp"
#include "bplab/state_vector.hpp"

namespace bplab {

namespace {

using nlohmann::json;

/// Rejects keys that none of the parsers consumed, so a misspelled option
/// cannot silently fall back to its default value.
void reject_unknown_keys(const json& doc, const std::set<std::string>& known) {
    for (const auto& item : doc.items()) {
        if (!known.contains(item.key())) {
            throw ConfigError("unknown config key: \"" + item.key() + "\"");
        }
    }
}

json require_object(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) {
        throw ConfigError("config is not valid JSON");
    }
    if (!doc.is_object()) {
        throw ConfigError("config root must be a JSON object");
    }
    return doc;
}

template <typename T>
void read_field(const json& doc, const char* key, T& out) {
    if (!doc.contains(key)) {
        return;
    }
    try {
        out = doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config key \"") + key +
                          "\" has the wrong type");
    }
}

std::vector<ParamRange> read_ranges(const json& doc) {
    std::vector<ParamRange> ranges;
    const json& arr = doc.at("ranges");
    if (!arr.is_array() || arr.empty()) {
        throw ConfigError("config key \"ranges\" must be a non-empty array");
    }
    for (const json& entry : arr) {
        if (!entry.is_object() || !entry.contains("label") ||
            !entry.contains("low") || !entry.contains("high")) {
            throw ConfigError("config key \"ranges\" entries need "
                              "\"label\", \"low\" and \"high\"");
        }
        ParamRange range;
        try {
            range.label = entry.at("label").get<std::string>();
            range.low = entry.at("low").get<double>();
            range.high = entry.at("high").get<double>();
        } catch (const json::exception&) {
            throw ConfigError("config key \"ranges\" has a wrongly typed entry");
        }
        ranges.push_back(range);
    }
    return ranges;
}

json ranges_to_json(const std::vector<ParamRange>& ranges) {
    json arr = json::array();
    for (const ParamRange& range : ranges) {
        arr.push_back({{"label", range.label},
                       {"low", range.low},
                       {"high", range.high}});
    }
    return arr;
}

void validate_common(const std::vector<std::size_t>& qubit_counts,
                     const std::vector<ParamRange>& ranges) {
    if (qubit_counts.empty()) {
        throw ConfigError("config key \"qubit_counts\" must be non-empty");
    }
    for (std::size_t n : qubit_counts) {
        if (n < 1 || n > StateVector::kMaxQubits) {
            throw ConfigError("config key \"qubit_counts\" entries must lie in "
                              "[1, " + std::to_string(StateVector::kMaxQubits) +
                              "]");
        }
    }
    if (ranges.empty()) {
        throw ConfigError("config key \"ranges\" must be non-empty");
    }
    std::set<std::string> labels;
    for (const ParamRange& range : ranges) {
        if (range.label.empty()) {
            throw ConfigError("config key \"ranges\" labels must be non-empty");
        }
        if (!(range.low < range.high)) {
            throw ConfigError("config key \"ranges\" requires low < high");
        }
        if (!labels.insert(range.label).second) {
            throw ConfigError("config key \"ranges\" labels must be unique");
        }
    }
}

} // namespace

void validate(const VarianceSweepConfig& config) {
    validate_common(config.qubit_counts, config.ranges);
    if (config.samples_per_point < 2) {
        throw ConfigError("config key \"samples_per_point\" must be >= 2");
    }
    if (config.repetitions < 1) {
        throw ConfigError("config key \"repetitions\" must be >= 1");
    }
}

void validate(const TrainingConfig& config) {
    validate_common(config.qubit_counts, config.ranges);
    if (config.layers < 1) {
        throw ConfigError("config key \"layers\" must be >= 1");
    }
    if (config.steps < 1) {
        throw ConfigError("config key \"steps\" must be >= 1");
    }
    if (config.runs < 1) {
        throw ConfigError("config key \"runs\" must be >= 1");
    }
    if (!(config.learning_rate > 0.0)) {
        throw ConfigError("config key \"learning_rate\" must be > 0");
    }
    if (config.shots.has_value() && *config.shots == 0) {
        throw ConfigError("config key \"shots\" must be >= 1 when present");
    }
    if (config.sampled_gradients && !config.shots.has_value()) {
        throw ConfigError("config key \"sampled_gradients\" requires \"shots\"");
    }
}

VarianceSweepConfig parse_variance_config(const std::string& json_text) {
    json doc = require_object(json_text);
    reject_unknown_keys(doc, {"qubit_counts", "samples_per_point", "ranges",
                              "repetitions", "base_seed"});
    VarianceSweepConfig config;
    read_field(doc, "qubit_counts", config.qubit_counts);
    read_field(doc, "samples_per_point", config.samples_per_point);
    read_field(doc, "repetitions", config.repetitions);
    read_field(doc, "base_seed", config.base_seed);
    if (doc.contains("ranges")) {
        config.ranges = read_ranges(doc);
    }
    validate(config);
    return config;
}

TrainingConfig parse_training_config(const std::string& json_text) {
    json doc = require_object(json_text);
    reject_unknown_keys(doc, {"qubit_counts", "layers", "steps", "runs",
                              "learning_rate", "ranges", "shots",
                              "sampled_gradients", "base_seed"});
    TrainingConfig config;
    read_field(doc, "qubit_counts", config.qubit_counts);
    read_field(doc, "layers", config.layers);
    read_field(doc, "steps", config.steps);
    read_field(doc, "runs", config.runs);
    read_field(doc, "learning_rate", config.learning_rate);
    read_field(doc, "base_seed", config.base_seed);
    read_field(doc, "sampled_gradients", config.sampled_gradients);
    if (doc.contains("shots")) {
        std::uint64_t shots = 0;
        read_field(doc, "shots", shots);
        config.shots = shots;
    }
    if (doc.contains("ranges")) {
        config.ranges = read_ranges(doc);
    }
    validate(config);
    return config;
}

std::string to_json(const VarianceSweepConfig& config) {
    json doc = {{"qubit_counts", config.qubit_counts},
                {"samples_per_point", config.samples_per_point},
                {"ranges", ranges_to_json(config.ranges)},
                {"repetitions", config.repetitions},
                {"base_seed", config.base_seed}};
    return doc.dump(2) + "\n";
}

std::string to_json(const TrainingConfig& config) {
    json doc = {{"qubit_counts", config.qubit_counts},
                {"layers", config.layers},
                {"steps", config.steps},
                {"runs", config.runs},
                {"learning_rate", config.learning_rate},
                {"ranges", ranges_to_json(config.ranges)},
                {"sampled_gradients", config.sampled_gradients},
                {"base_seed", config.base_seed}};
    if (config.shots.has_value()) {
        doc["shots"] = *config.shots;
    }
    return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (!in.good() && !in.eof()) {
        throw ConfigError("cannot read file: " + path);
    }
    return buffer.str();
}

} // namespace bplab
