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

// Run reports: a list of named checks plus free-form result records, written
// as JSON, CSV or an aligned text table.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qclone/bounds.hpp"
#include "json.hpp"

namespace qclone {

enum class Relation {
    kClose,    // |actual - expected| < tolerance
    kBelow,    // actual < tolerance (expected is 0)
    kAtLeast,  // actual >= expected
    kExact,    // exact identity; actual is 1 when it holds
};

struct Check {
    std::string name;
    /// The formula or property being checked.
    std::string anchor;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> l;
    double expected = 0.0;
    std::optional<std::string> expected_exact;
    double actual = 0.0;
    double tolerance = 0.0;
    Relation relation = Relation::kClose;
    bool pass = false;

    double abs_error() const;
};

Check check_close(std::string name, std::string anchor, double expected, double actual, double tol);
Check check_close(std::string name, std::string anchor, const Rational& expected, double actual, double tol);
Check check_below(std::string name, std::string anchor, double actual, double tol);
Check check_at_least(std::string name, std::string anchor, double actual, double threshold);
Check check_exact(std::string name, std::string anchor, bool holds);

class Report {
   public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    Check& add(Check c);
    void add_result(nlohmann::ordered_json record) { results_.push_back(std::move(record)); }
    void set_config(nlohmann::ordered_json config) { config_ = std::move(config); }
    void set_wall_seconds(double s) { wall_seconds_ = s; }

    const std::string& command() const { return command_; }
    const std::vector<Check>& checks() const { return checks_; }
    const nlohmann::ordered_json& results() const { return results_; }
    bool all_pass() const;
    std::vector<const Check*> failures() const;

    nlohmann::ordered_json to_json() const;
    void write_json(std::ostream& os) const;
    void write_csv(std::ostream& os) const;
    void write_table(std::ostream& os, bool color) const;

   private:
    std::string command_;
    nlohmann::ordered_json config_ = nlohmann::ordered_json::object();
    nlohmann::ordered_json results_ = nlohmann::ordered_json::array();
    std::vector<Check> checks_;
    std::optional<double> wall_seconds_;
};

/// Decimal rendering with 12 significant digits.
std::string format_g12(double x);

}  // namespace qclone
