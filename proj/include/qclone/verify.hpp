// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Verification suites behind the command-line driver. Each suite returns a
// Report; all randomness flows from RunConfig::seed, so equal configs give
// byte-identical reports.

#include <cstdint>
#include <optional>
#include <string>

#include "qclone/report.hpp"

namespace qclone {

enum class Command { kBounds, kClone, kEstimate, kConcat, kVerifyAll };
enum class OutputFormat { kJson, kCsv, kTable };

const char* to_string(Command c);
const char* to_string(OutputFormat f);

struct Tolerances {
    double structural = 1e-12;
    double physics = 1e-9;
    double estimation = 1e-8;
    /// Monte Carlo agreement, in standard errors.
    double mc_sigmas = 4.0;
};

struct RunConfig {
    Command command = Command::kVerifyAll;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> l;
    std::optional<int> samples;
    std::uint64_t seed = 1;
    OutputFormat format = OutputFormat::kJson;
    std::optional<std::string> output_path;
    Tolerances tol;
    bool timing = false;
};

/// Throws ArgumentError for configs no suite can run (ordering, ranges,
/// missing required parameters).
void validate(const RunConfig& cfg);

Report run_bounds(const RunConfig& cfg);
Report run_clone(const RunConfig& cfg);
Report run_estimate(const RunConfig& cfg);
Report run_concat(const RunConfig& cfg);
Report run_verify_all(const RunConfig& cfg);

/// Validates and dispatches on cfg.command.
Report run(const RunConfig& cfg);

void write_report(const Report& report, OutputFormat format, std::ostream& os, bool color);

}  // namespace qclone
