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
 * @file csv.hpp
 * Minimal CSV writing with locale-independent, reproducible numbers.
 *
 * Doubles are rendered by std::to_chars in scientific notation with 17
 * significant digits — enough to round-trip any double exactly, which is
 * what makes bytewise file comparison a meaningful determinism check.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace bplab {

/// Shortest-exact decimal is deliberately avoided: fixed 17-significant-digit
/// scientific form keeps columns uniform and still round-trips exactly.
std::string format_double(double value);

/// Decimal rendering for integer-valued fields.
std::string format_u64(std::uint64_t value);

/**
 * Line-oriented CSV file writer. Fields must not contain commas, quotes, or
 * newlines (all labels in this project are of the form "R1".."R5"); the
 * writer enforces that rather than implementing quoting rules.
 */
class CsvFile {
  public:
    /// Opens for writing (truncates) and writes the header row.
    CsvFile(const std::filesystem::path& path,
            const std::vector<std::string>& header);

    /// Writes one row; field count must match the header.
    void row(const std::vector<std::string>& fields);

    /// Flushes and closes; throws on I/O failure.
    void close();

  private:
    void write_line(const std::vector<std::string>& fields);

    std::filesystem::path path_;
    std::ofstream out_;
    std::size_t n_columns_;
};

} // namespace bplab
