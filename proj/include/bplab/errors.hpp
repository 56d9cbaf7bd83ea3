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
 * @file errors.hpp
 * Error taxonomy shared by all modules.
 *
 * Each exception class maps onto one process exit code so the CLI can
 * translate failures uniformly:
 *
 *   ConfigError   -> exit 2 (bad configuration / malformed input)
 *   CapacityError -> exit 3 (resource limits: qubit count, memory)
 *   NumericError  -> exit 4 (internal numerical failure: NaN cost, ...)
 */
#pragma once

#include <stdexcept>
#include <string>

namespace bplab {

/// Invalid or inconsistent configuration, including malformed config files.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds resource limits (e.g. qubit count above the memory guard).
class CapacityError : public std::runtime_error {
  public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal numerical failure (non-finite cost, degenerate fit data, ...).
class NumericError : public std::runtime_error {
  public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Process exit codes used by the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitCapacity = 3,
    kExitNumeric = 4,
};

} // namespace bplab
