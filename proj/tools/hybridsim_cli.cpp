// Copyright 2026 The hybridsim Authors
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

// Benchmark driver: `run` a single configuration, `sweep` a parameter grid,
// or `report` speedups and compile-time ratios from recorded results.
//
// Exit status: 0 success, 1 configuration error, 2 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hybridsim/bench.hpp"
#include "hybridsim/kernels.hpp"

namespace {

using namespace hybridsim;
using namespace hybridsim::bench;

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct CommonOptions {
    std::vector<std::string> backends{"baseline", "hybrid"};
    std::uint64_t seed = 0;
    double t = 1.0;
    std::size_t m = 1;
    std::size_t repetitions = 3;
    std::size_t warmups = 1;
    std::size_t max_qubits = 26;
    bool serial = false;
    bool no_verify = false;
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--backends", o.backends, "Backends to run")
        ->delimiter(',')
        ->check(CLI::IsMember({"baseline", "hybrid"}))
        ->capture_default_str();
    cmd->add_option("--seed", o.seed, "Seed for Hamiltonian generation and measurement sampling")
        ->capture_default_str();
    cmd->add_option("--time,-t", o.t, "Evolution time")->capture_default_str();
    cmd->add_option("--steps,-m", o.m, "Trotter steps")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--reps", o.repetitions, "Timed repetitions")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--warmups", o.warmups, "Untimed warmup repetitions")->capture_default_str();
    cmd->add_option("--max-qubits", o.max_qubits, "Refuse larger problems")->capture_default_str();
    cmd->add_flag("--serial", o.serial, "Use the serial reference kernels");
    cmd->add_flag("--no-verify", o.no_verify, "Skip the hybrid/baseline probability check");
}

BenchConfig config_from(const CommonOptions& o) {
    BenchConfig cfg;
    cfg.backends.clear();
    for (const auto& b : o.backends) cfg.backends.push_back(*backend_from_name(b));
    cfg.seed = o.seed;
    cfg.t = o.t;
    cfg.m = o.m;
    cfg.repetitions = o.repetitions;
    cfg.warmups = o.warmups;
    cfg.max_qubits = o.max_qubits;
    cfg.mode = o.serial ? ExecutionMode::Serial : ExecutionMode::Parallel;
    cfg.verify = !o.no_verify;
    return cfg;
}

OutputFormat parse_format(const std::string& s) { return s == "jsonl" ? OutputFormat::Jsonl : OutputFormat::Csv; }

void apply_thread_override() {
    const char* env = std::getenv("HYBRIDSIM_NUM_THREADS");
    if (!env || !*env) return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw ConfigError("HYBRIDSIM_NUM_THREADS must be a positive integer");
    kernels::set_num_threads(static_cast<int>(v));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Baseline vs Clifford-frame hybrid state-vector benchmark"};
    app.require_subcommand(1);

    CommonOptions run_opts;
    std::size_t n = 0, k = 0, terms = 0;
    std::string ham_path, run_output, run_format = "csv";
    auto* run = app.add_subcommand("run", "Benchmark one Hamiltonian on the selected backends");
    add_common(run, run_opts);
    auto* src_file = run->add_option("--hamiltonian", ham_path, "Hamiltonian text file")->check(CLI::ExistingFile);
    auto* src_n = run->add_option("--qubits,-n", n, "Random source: qubit count");
    run->add_option("--locality,-k", k, "Random source: exact term weight")->needs(src_n);
    run->add_option("--terms", terms, "Random source: term count")->needs(src_n);
    src_file->excludes(src_n);
    run->add_option("--output,-o", run_output, "Write records here instead of stdout");
    run->add_option("--format", run_format, "Record format")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();

    CommonOptions sweep_opts;
    SweepGrid grid;
    std::string sweep_output;
    auto* sweep = app.add_subcommand("sweep", "Run a (qubits, locality, terms) grid, resumable");
    add_common(sweep, sweep_opts);
    sweep->add_option("--n-min", grid.n_min, "Smallest qubit count")->capture_default_str();
    sweep->add_option("--n-max", grid.n_max, "Largest qubit count")->capture_default_str();
    sweep->add_option("--n-step", grid.n_step, "Qubit count step")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--k-min", grid.k_min, "Smallest locality; the largest is n")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--k-step", grid.k_step, "Locality step")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_option("--terms", grid.terms, "Term counts")->delimiter(',')->capture_default_str();
    sweep->add_option("--output,-o", sweep_output, "Records file (.csv or .jsonl); appended to")->required();

    std::vector<std::string> report_inputs;
    bool report_as_json = false;
    auto* report = app.add_subcommand("report", "Summarize speedups and compile ratios");
    report->add_option("records", report_inputs, "Record files (.csv or .jsonl)")->required()->check(CLI::ExistingFile);
    report->add_flag("--json", report_as_json, "Emit JSON instead of a table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        apply_thread_override();
        if (*run) {
            BenchConfig cfg = config_from(run_opts);
            if (!ham_path.empty()) {
                cfg.source = FileSource{ham_path};
            } else if (*src_n) {
                cfg.source = RandomSource{n, k, terms};
            } else {
                throw ConfigError("run needs --hamiltonian or --qubits/--locality/--terms");
            }
            const auto records = run_benchmark(cfg);
            const auto fmt = parse_format(run_format);
            if (run_output.empty()) {
                write_records(std::cout, records, fmt);
            } else {
                std::ofstream out(run_output);
                if (!out) throw std::runtime_error("cannot write '" + run_output + "'");
                write_records(out, records, fmt);
            }
            for (const auto& r : records) {
                std::cerr << r.backend << ": t_run median " << r.t_run_s << " s (min " << r.t_run_min_s << ", max "
                          << r.t_run_max_s << "), t_compile " << r.t_compile_s << " s\n";
            }
        } else if (*sweep) {
            const auto result = run_sweep(grid, config_from(sweep_opts), sweep_output, std::cerr);
            std::cerr << "sweep: " << result.cells_run << " run, " << result.cells_skipped << " skipped, "
                      << result.cells_failed << " failed\n";
            if (result.cells_failed > 0) return kExitRuntime;
        } else if (*report) {
            std::vector<BenchRecord> records;
            for (const auto& path : report_inputs) {
                auto part = read_records_file(path);
                records.insert(records.end(), part.begin(), part.end());
            }
            const auto summary = summarize(records);
            std::cout << (report_as_json ? report_json(summary) + "\n" : format_report(summary));
        }
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
