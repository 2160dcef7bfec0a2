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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hybridsim/backends.hpp"
#include "hybridsim/circuit.hpp"
#include "hybridsim/hamiltonian.hpp"

namespace hybridsim::bench {

/// Invalid benchmark configuration (CLI exit status 1).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Records that cannot be paired into a report.
class ReportError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RandomSource {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t n_terms = 0;
};

struct FileSource {
    std::string path;
};

using HamiltonianSource = std::variant<RandomSource, FileSource>;

enum class OutputFormat { Csv, Jsonl };

struct BenchConfig {
    HamiltonianSource source;
    std::vector<BackendKind> backends{BackendKind::Baseline, BackendKind::Hybrid};
    double t = 1.0;
    std::size_t m = 1;
    std::size_t repetitions = 3;
    std::size_t warmups = 1;
    /// Drives Hamiltonian generation and measurement sampling.
    std::uint64_t seed = 0;
    std::size_t max_qubits = 26;
    /// Compare post-flush hybrid probabilities with the baseline after the
    /// timed repetitions when both backends run.
    bool verify = true;
    double verify_tolerance = 1e-8;
    ExecutionMode mode = ExecutionMode::Parallel;

    /// Throws ConfigError.
    void validate() const;
};

struct BenchRecord {
    std::string name;
    std::size_t n_qubits = 0;
    std::size_t n_terms = 0;
    double L_mean = 0.0;
    double L_std = 0.0;
    std::size_t L_max = 0;
    std::string backend;
    double t_compile_s = 0.0;
    double t_run_s = 0.0;
    double rescaled_runtime = 0.0;
    double speedup_vs_baseline = 0.0;
    std::uint64_t seed = 0;

    // Spread of the timed repetitions; not serialized.
    double t_run_min_s = 0.0;
    double t_run_max_s = 0.0;

    /// Compares the serialized fields; NaN equals NaN.
    bool same_fields(const BenchRecord& other) const;
};

/// t_run / (n_terms * 2^n).
double rescaled_runtime(double t_run_s, std::size_t n_terms, std::size_t n_qubits);

/// Hamiltonian from the configured source. Throws ResourceError above the
/// qubit ceiling.
Hamiltonian build_hamiltonian(const BenchConfig& cfg);

/// Timed compile + run repetitions for each configured backend; one record
/// per backend with median timings. Hybrid records carry
/// baseline.t_run / hybrid.t_run as speedup when the baseline ran too
/// (NaN otherwise); baseline records carry 1.
std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg);

extern const char* const kCsvHeader;
std::string format_csv_row(const BenchRecord& r);
void write_records(std::ostream& os, const std::vector<BenchRecord>& records, OutputFormat fmt, bool header = true);
std::vector<BenchRecord> read_records(std::istream& is, OutputFormat fmt);
std::vector<BenchRecord> read_records_file(const std::string& path);
OutputFormat format_for_path(const std::string& path);

struct SweepGrid {
    std::size_t n_min = 8;
    std::size_t n_max = 24;
    std::size_t n_step = 2;
    std::size_t k_min = 4;
    std::size_t k_step = 2;
    std::vector<std::size_t> terms{50, 100};
};

struct SweepCell {
    std::size_t n;
    std::size_t k;
    std::size_t n_terms;
};

std::vector<SweepCell> sweep_cells(const SweepGrid& grid);

struct SweepResult {
    std::size_t cells_run = 0;
    std::size_t cells_skipped = 0;
    std::size_t cells_failed = 0;
};

/// Runs every cell, appending its records to out_path as soon as it
/// finishes. Cells already present in out_path with all configured
/// backends are skipped, so an interrupted sweep resumes where it stopped.
/// Per-cell failures are logged and the sweep continues.
SweepResult run_sweep(const SweepGrid& grid, const BenchConfig& base, const std::string& out_path,
                      std::ostream& log);

struct PairSummary {
    std::string name;
    std::size_t n_qubits;
    std::size_t n_terms;
    double L_mean;
    double speedup;        // baseline.t_run / hybrid.t_run
    double compile_ratio;  // hybrid.t_compile / baseline.t_compile
};

struct GroupSummary {
    std::size_t n_qubits;
    std::size_t n_terms;
    std::size_t count;
    double speedup_mean;
    double speedup_std;
    double compile_ratio_mean;
    double compile_ratio_std;
};

struct Report {
    std::vector<PairSummary> pairs;
    std::vector<GroupSummary> groups;
    double compile_ratio_mean = 0.0;
    double compile_ratio_std = 0.0;
    double compile_ratio_min = 0.0;
    double compile_ratio_max = 0.0;
};

/// Pairs baseline and hybrid records by (name, seed). Throws ReportError
/// on an unpaired or duplicated record.
Report summarize(const std::vector<BenchRecord>& records);
std::string format_report(const Report& r);
std::string report_json(const Report& r);

}  // namespace hybridsim::bench
