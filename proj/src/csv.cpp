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

#include "bplab/csv.hpp"

#include <charconv>
#include <system_error>

#include "bplab/errors.hpp"

namespace bplab {

std::string format_double(double value) {
    char buffer[64];
    const auto result =
        std::to_chars(buffer, buffer + sizeof(buffer), value,
                      std::chars_format::scientific, 16);
    if (result.ec != std::errc{}) {
        throw NumericError("failed to format double for CSV output");
    }
    return std::string(buffer, result.ptr);
}

std::string format_u64(std::uint64_t value) {
    return std::to_string(value);
}

CsvFile::CsvFile(const std::filesystem::path& path,
                 const std::vector<std::string>& header)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc),
      n_columns_(header.size()) {
    if (!out_) {
        throw ConfigError("cannot open " + path.string() + " for writing");
    }
    write_line(header);
}

void CsvFile::row(const std::vector<std::string>& fields) {
    if (fields.size() != n_columns_) {
        throw ConfigError("CSV row for " + path_.string() + " has " +
                          std::to_string(fields.size()) + " fields, header has " +
                          std::to_string(n_columns_));
    }
    write_line(fields);
}

void CsvFile::write_line(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        if (f.find_first_of(",\"\n\r") != std::string::npos) {
            throw ConfigError("CSV field '" + f + "' requires quoting, which "
                              "this writer does not support");
        }
        if (i > 0) {
            out_ << ',';
        }
        out_ << f;
    }
    out_ << '\n';
}

void CsvFile::close() {
    out_.flush();
    if (!out_) {
        throw ConfigError("I/O error while writing " + path_.string());
    }
    out_.close();
}

} // namespace bplab
