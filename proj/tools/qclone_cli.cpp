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

// qclone_cli: runs the cloning / estimation verification suites.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 invalid arguments,
// 3 I/O failure.

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "qclone/errors.hpp"
#include "qclone/verify.hpp"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void add_common_options(CLI::App* sub, qclone::RunConfig& cfg, bool with_nml) {
    if (with_nml) {
        sub->add_option("--n", cfg.n, "number of original qubits N");
        sub->add_option("--m", cfg.m, "number of clones / measured copies M");
        sub->add_option("--l", cfg.l, "final clone count L of a chain");
    }
    sub->add_option("--samples", cfg.samples, "random inputs (clone) or Monte Carlo shots (estimate)");
    sub->add_option("--seed", cfg.seed, "64-bit seed; all randomness derives from it")->default_val(1);
    static const std::map<std::string, qclone::OutputFormat> formats{
        {"json", qclone::OutputFormat::kJson},
        {"csv", qclone::OutputFormat::kCsv},
        {"table", qclone::OutputFormat::kTable},
    };
    sub->add_option("--format", cfg.format, "json | csv | table")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("json");
    sub->add_option("--output,-o", cfg.output_path, "write the report here instead of stdout");
    sub->add_option("--tol-physics", cfg.tol.physics, "simulated vs closed-form tolerance")->default_val(1e-9);
    sub->add_option("--tol-structural", cfg.tol.structural, "trace / normalization tolerance")->default_val(1e-12);
    sub->add_option("--tol-estimation", cfg.tol.estimation, "estimation fidelity tolerance")->default_val(1e-8);
    sub->add_option("--mc-sigmas", cfg.tol.mc_sigmas, "Monte Carlo agreement band in standard errors")
        ->default_val(4.0);
    sub->add_flag("--timing", cfg.timing, "record wall time in the report (breaks byte-identical output)");
}

bool want_color(const qclone::RunConfig& cfg) {
    return !cfg.output_path && std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal universal qubit cloning and state estimation: simulator and verification suite"};
    app.require_subcommand(1);
    qclone::RunConfig cfg;

    struct Entry {
        const char* name;
        qclone::Command command;
        const char* help;
        bool with_nml;
    };
    const Entry entries[] = {
        {"bounds", qclone::Command::kBounds, "exact closed-form ledger (grid, or one (n,m[,l]) cell)", true},
        {"clone", qclone::Command::kClone, "simulate the N->M cloner and certify its shrinking factor", true},
        {"estimate", qclone::Command::kEstimate, "exact-quadrature and Monte Carlo state estimation", true},
        {"concat", qclone::Command::kConcat, "verify N->M->L chain multiplicativity", true},
        {"verify-all", qclone::Command::kVerifyAll, "run the full verification grid", false},
    };
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(e.name, e.help);
        add_common_options(sub, cfg, e.with_nml);
        const qclone::Command command = e.command;
        sub->callback([&cfg, command] { cfg.command = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    qclone::Report report("");
    try {
        report = qclone::run(cfg);
    } catch (const qclone::ArgumentError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        for (CLI::App* sub : app.get_subcommands()) {
            std::cerr << sub->help();
        }
        return kExitUsage;
    }

    std::ostringstream buffer;
    qclone::write_report(report, cfg.format, buffer, want_color(cfg));
    if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        out << buffer.str();
        out.flush();
        if (!out) {
            std::cerr << "error: cannot write " << *cfg.output_path << '\n';
            return kExitIo;
        }
    } else {
        std::cout << buffer.str();
        std::cout.flush();
        if (!std::cout) {
            return kExitIo;
        }
    }

    if (!report.all_pass()) {
        std::cerr << "FAILED checks:\n";
        for (const qclone::Check* c : report.failures()) {
            std::cerr << "  " << c->name;
            if (c->n || c->m || c->l) {
                std::cerr << " (n=" << (c->n ? std::to_string(*c->n) : "-") << " m="
                          << (c->m ? std::to_string(*c->m) : "-") << " l=" << (c->l ? std::to_string(*c->l) : "-")
                          << ")";
            }
            std::cerr << ": expected " << (c->expected_exact ? *c->expected_exact : std::to_string(c->expected))
                      << ", actual " << c->actual << ", tolerance " << c->tolerance << '\n';
        }
        return kExitFailedCheck;
    }
    return 0;
}
