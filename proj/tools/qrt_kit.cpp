// Copyright 2026 The qrt-kit Authors
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

#include "qrtkit/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

namespace {

using qrtkit::cli::CliConfig;
using qrtkit::cli::Command;
using qrtkit::cli::Format;

void add_transform_options(CLI::App* sub, CliConfig& cfg, std::string& format) {
    sub->add_option("-t,--transform", cfg.transform, "Transform or gadget name")->required();
    sub->add_option("-o,--output", cfg.output_path, "Write to this file instead of stdout");
    sub->add_option("-f,--format", format, "text-gates or json")
        ->check(CLI::IsMember({"text-gates", "json"}));
    sub->add_flag("--incorrect-d2", cfg.incorrect_d2, "Use the uncorrected D2 (qct4/qst4 only)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qrt-kit: circuits for quantum Hartley, cosine and sine transforms"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format = "text-gates";
    std::string range;

    auto* build = app.add_subcommand("build", "Export a circuit");
    add_transform_options(build, cfg, format);
    build->add_option("-n,--n", cfg.n, "Data qubits")->required();

    auto* verify = app.add_subcommand("verify", "Simulate a circuit and compare against the reference matrix");
    add_transform_options(verify, cfg, format);
    verify->add_option("-n,--n", cfg.n, "Data qubits")->required();
    verify->add_option("--tolerance", cfg.tolerance, "Max-entry error bound")->capture_default_str();

    auto* counts = app.add_subcommand("counts", "Gate counts");
    add_transform_options(counts, cfg, format);
    auto* n_opt = counts->add_option("-n,--n", cfg.n, "Data qubits");
    counts->add_option("--n-range", range, "Inclusive range A..B")->excludes(n_opt);

    auto* table1 = app.add_subcommand("table1", "Recursive vs LCU Hartley gate counts with quadratic fits");
    table1->add_option("--n-range", range, "Inclusive range A..B (default 6..14)");
    table1->add_option("-o,--output", cfg.output_path, "Write to this file instead of stdout");
    table1->add_option("-f,--format", format, "text-gates or json")->check(CLI::IsMember({"text-gates", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : qrtkit::cli::kExitUsage;
    }

    if (*build) cfg.command = Command::Build;
    if (*verify) cfg.command = Command::Verify;
    if (*counts) cfg.command = Command::Counts;
    if (*table1) cfg.command = Command::Table1;
    cfg.format = format == "json" ? Format::Json : Format::TextGates;

    try {
        if (!range.empty()) cfg.n_range = qrtkit::cli::parse_range(range);
    } catch (const qrtkit::cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return qrtkit::cli::kExitUsage;
    }

    const auto result = qrtkit::cli::run(cfg);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
