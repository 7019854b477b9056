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

#include "qclone/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>

namespace qclone {

namespace {

const char* relation_name(Relation r) {
    switch (r) {
        case Relation::kClose:
            return "abs_diff_below";
        case Relation::kBelow:
            return "below";
        case Relation::kAtLeast:
            return "at_least";
        case Relation::kExact:
            return "exact";
    }
    return "?";
}

nlohmann::ordered_json finite_or_null(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return nullptr;
}

std::string opt_int(const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string cell_text(const nlohmann::ordered_json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        return format_g12(v.get<double>());
    }
    return v.dump();
}

// Consecutive records sharing the same keys form one block under one header.
void write_results_table(std::ostream& os, const nlohmann::ordered_json& results) {
    std::vector<std::string> header;
    for (const auto& rec : results) {
        if (!rec.is_object()) {
            continue;
        }
        std::vector<std::string> keys;
        for (const auto& item : rec.items()) {
            keys.push_back(item.key());
        }
        std::vector<std::string> cells;
        for (const auto& item : rec.items()) {
            cells.push_back(cell_text(item.value()));
        }
        if (keys != header) {
            if (!header.empty()) {
                os << '\n';
            }
            header = keys;
            for (std::size_t i = 0; i < keys.size(); ++i) {
                os << (i ? "  " : "") << keys[i];
            }
            os << '\n';
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "  " : "") << cells[i];
        }
        os << '\n';
    }
    if (!header.empty()) {
        os << '\n';
    }
}

}  // namespace

std::string format_g12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double Check::abs_error() const {
    switch (relation) {
        case Relation::kClose:
            return std::abs(actual - expected);
        case Relation::kBelow:
            return std::abs(actual);
        case Relation::kAtLeast:
            return actual >= expected ? 0.0 : expected - actual;
        case Relation::kExact:
            return pass ? 0.0 : 1.0;
    }
    return 0.0;
}

Check check_close(std::string name, std::string anchor, double expected, double actual, double tol) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = expected;
    c.actual = actual;
    c.tolerance = tol;
    c.relation = Relation::kClose;
    c.pass = std::abs(actual - expected) < tol;
    return c;
}

Check check_close(std::string name, std::string anchor, const Rational& expected, double actual, double tol) {
    Check c = check_close(std::move(name), std::move(anchor), to_double(expected), actual, tol);
    c.expected_exact = to_string(expected);
    c.pass = cross_check(actual, expected, tol);
    return c;
}

Check check_below(std::string name, std::string anchor, double actual, double tol) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = 0.0;
    c.actual = actual;
    c.tolerance = tol;
    c.relation = Relation::kBelow;
    c.pass = actual < tol;
    return c;
}

Check check_at_least(std::string name, std::string anchor, double actual, double threshold) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = threshold;
    c.actual = actual;
    c.tolerance = 0.0;
    c.relation = Relation::kAtLeast;
    c.pass = actual >= threshold;
    return c;
}

Check check_exact(std::string name, std::string anchor, bool holds) {
    Check c;
    c.name = std::move(name);
    c.anchor = std::move(anchor);
    c.expected = 1.0;
    c.expected_exact = "true";
    c.actual = holds ? 1.0 : 0.0;
    c.relation = Relation::kExact;
    c.pass = holds;
    return c;
}

Check& Report::add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
}

bool Report::all_pass() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::vector<const Check*> Report::failures() const {
    std::vector<const Check*> out;
    for (const Check& c : checks_) {
        if (!c.pass) {
            out.push_back(&c);
        }
    }
    return out;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json doc;
    doc["command"] = command_;
    doc["config"] = config_;
    doc["results"] = results_;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : checks_) {
        nlohmann::ordered_json j;
        j["name"] = c.name;
        j["paper_anchor"] = c.anchor;
        j["n"] = c.n ? nlohmann::ordered_json(*c.n) : nullptr;
        j["m"] = c.m ? nlohmann::ordered_json(*c.m) : nullptr;
        j["l"] = c.l ? nlohmann::ordered_json(*c.l) : nullptr;
        if (c.expected_exact) {
            j["expected"] = *c.expected_exact;
            j["expected_float"] = finite_or_null(c.expected);
        } else {
            j["expected"] = finite_or_null(c.expected);
        }
        j["actual"] = finite_or_null(c.actual);
        j["tolerance"] = c.tolerance;
        j["relation"] = relation_name(c.relation);
        j["pass"] = c.pass;
        checks.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"checks", checks_.size()}, {"failed", failures().size()}, {"pass", all_pass()}};
    if (wall_seconds_) {
        doc["timing"] = {{"wall_seconds", *wall_seconds_}};
    } else {
        doc["timing"] = nullptr;
    }
    return doc;
}

void Report::write_json(std::ostream& os) const {
    os << to_json().dump(2) << '\n';
}

void Report::write_csv(std::ostream& os) const {
    os << "n,m,l,quantity,expected,actual,abs_error,pass\n";
    for (const Check& c : checks_) {
        std::string quantity = c.name;
        if (quantity.find_first_of(",\"") != std::string::npos) {
            std::string escaped = "\"";
            for (char ch : quantity) {
                escaped += ch;
                if (ch == '"') {
                    escaped += '"';
                }
            }
            quantity = escaped + "\"";
        }
        os << opt_int(c.n) << ',' << opt_int(c.m) << ',' << opt_int(c.l) << ',' << quantity << ','
           << format_g12(c.expected) << ',' << format_g12(c.actual) << ',' << format_g12(c.abs_error()) << ','
           << (c.pass ? "true" : "false") << '\n';
    }
}

void Report::write_table(std::ostream& os, bool color) const {
    std::size_t name_w = 5;
    for (const Check& c : checks_) {
        name_w = std::max(name_w, c.name.size());
    }
    auto row = [&](const std::string& name, const std::string& n, const std::string& m, const std::string& l,
                   const std::string& expected, const std::string& actual, const std::string& tol,
                   const std::string& verdict) {
        os << std::left << std::setw(static_cast<int>(name_w)) << name << "  " << std::right << std::setw(3) << n
           << ' ' << std::setw(3) << m << ' ' << std::setw(3) << l << "  " << std::setw(20) << expected << "  "
           << std::setw(20) << actual << "  " << std::setw(8) << tol << "  " << verdict << '\n';
    };
    write_results_table(os, results_);
    row("check", "n", "m", "l", "expected", "actual", "tol", "result");
    for (const Check& c : checks_) {
        const std::string expected = c.expected_exact ? *c.expected_exact : format_g12(c.expected);
        std::string verdict = c.pass ? "PASS" : "FAIL";
        if (color) {
            verdict = (c.pass ? "\033[32m" : "\033[31m") + verdict + "\033[0m";
        }
        std::ostringstream tol;
        tol << std::setprecision(2) << c.tolerance;
        row(c.name, opt_int(c.n), opt_int(c.m), opt_int(c.l), expected, format_g12(c.actual),
            c.relation == Relation::kExact || c.relation == Relation::kAtLeast ? "-" : tol.str(), verdict);
    }
    os << checks_.size() << " checks, " << failures().size() << " failed\n";
}

}  // namespace qclone
