// Copyright 2026 The qwitness Authors
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

// Command-line front end: witness, sweep, swap-tomography, nogo, toy-sweep.
//
// Exit codes report execution health only: 0 ran to completion (whatever the
// verdict), 2 invalid configuration, 3 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwitness/report.hpp"

namespace {

constexpr int exit_config = 2;
constexpr int exit_io = 3;

struct Options {
    std::string backend = "unitary-cnot";
    double lambda = 0.0;
    double t = std::numbers::pi / 2;
    std::optional<std::uint64_t> shots;
    bool exact = false;
    std::uint64_t seed = 0;
    double tolerance = 1e-9;
    double significance = 5.0;
    std::string out;
    std::size_t channels = 1000;
    std::string grid;
};

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--backend", o.backend,
                    "unitary-cnot | dephased-cnot | classical-rotation | twirled-random | toy-model");
    cmd->add_option("--lambda", o.lambda, "control dephasing strength for dephased-cnot");
    cmd->add_option("--t", o.t, "rotation angle (radians) for classical-rotation");
    cmd->add_option("--shots", o.shots, "shots per correlator (omit for exact)");
    cmd->add_flag("--exact", o.exact, "exact expectation values");
    cmd->add_option("--seed", o.seed, "root RNG seed");
    cmd->add_option("--tolerance", o.tolerance, "absolute tolerance for condition checks");
    cmd->add_option("--significance", o.significance, "z-test threshold in standard errors");
    cmd->add_option("--out", o.out, "report path (stdout when omitted)");
}

qwit::cli::RunConfig resolve(const Options &o) {
    qwit::cli::RunConfig c;
    c.backend = qwit::cli::parse_backend(o.backend);
    c.lambda = o.lambda;
    c.t = o.t;
    if (o.exact && o.shots) {
        throw qwit::cli::ConfigError("shots", "--shots and --exact are mutually exclusive");
    }
    if (o.shots) {
        if (*o.shots == 0) {
            throw qwit::cli::ConfigError("shots", "must be at least 1");
        }
        c.shots = qwit::Shots::count(*o.shots);
    }
    c.seed = o.seed;
    c.tolerance = o.tolerance;
    c.significance = o.significance;
    c.output_path = o.out;
    if (o.channels == 0) {
        throw qwit::cli::ConfigError("channels", "must be at least 1");
    }
    c.channels = o.channels;
    if (!o.grid.empty()) {
        c.grid = qwit::cli::parse_grid(o.grid);
    }
    qwit::cli::validate(c);
    return c;
}

bool emit(const std::string &path, const std::string &payload) {
    if (path.empty()) {
        std::cout << payload;
        return static_cast<bool>(std::cout);
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        return false;
    }
    f << payload;
    return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulates the single-observable non-classicality witness protocols."};
    app.require_subcommand(1);
    Options o;

    auto *witness = app.add_subcommand("witness", "run both copy stages and evaluate C1-C4");
    auto *sweep = app.add_subcommand("sweep", "witness over a lambda or t grid, CSV output");
    auto *swap = app.add_subcommand("swap-tomography", "induce alpha states, swap out, tomography");
    auto *nogo = app.add_subcommand("nogo", "no-go check over random dephasing-covariant channels");
    auto *toy_sweep = app.add_subcommand("toy-sweep", "witness protocol over toy-model copy dynamics");
    for (auto *cmd : {witness, sweep, swap, nogo, toy_sweep}) {
        add_common(cmd, o);
    }
    sweep->add_option("--grid", o.grid, "comma-separated parameter values")->required();
    nogo->add_option("--channels", o.channels, "number of sampled channels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_config;
    }

    std::string payload;
    try {
        auto config = resolve(o);
        if (witness->parsed()) {
            payload = qwit::cli::witness_json(config).dump(2) + "\n";
        } else if (sweep->parsed()) {
            payload = qwit::cli::sweep_csv(config);
        } else if (swap->parsed()) {
            payload = qwit::cli::swap_tomography_json(config).dump(2) + "\n";
        } else if (nogo->parsed()) {
            payload = qwit::cli::nogo_json(config).dump(2) + "\n";
        } else {
            payload = qwit::cli::toy_sweep_json(config).dump(2) + "\n";
        }
        if (!emit(config.output_path, payload)) {
            std::cerr << "error: cannot write report to '" << config.output_path << "'\n";
            return exit_io;
        }
    } catch (const qwit::cli::ConfigError &e) {
        std::cerr << "error: " << e.what() << " (field: " << e.field << ")\n";
        return exit_config;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: invalid configuration: " << e.what() << "\n";
        return exit_config;
    }
    return 0;
}
