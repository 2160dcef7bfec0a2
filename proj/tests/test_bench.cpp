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

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hybridsim/bench.hpp"

using namespace hybridsim;
using namespace hybridsim::bench;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("hybridsim_test_" + name);
}

BenchConfig quick(std::size_t n, std::size_t k, std::size_t terms, std::uint64_t seed) {
    BenchConfig cfg;
    cfg.source = RandomSource{n, k, terms};
    cfg.seed = seed;
    cfg.repetitions = 1;
    cfg.warmups = 0;
    return cfg;
}

BenchRecord synthetic(const std::string& name, const std::string& backend, double t_run, double t_compile) {
    BenchRecord r;
    r.name = name;
    r.n_qubits = 10;
    r.n_terms = 50;
    r.backend = backend;
    r.t_run_s = t_run;
    r.t_compile_s = t_compile;
    r.rescaled_runtime = rescaled_runtime(t_run, 50, 10);
    return r;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("a small random run gives one verified record per backend") {
    auto cfg = quick(4, 2, 10, 7);
    cfg.repetitions = 3;
    cfg.warmups = 1;
    const auto records = run_benchmark(cfg);
    REQUIRE(records.size() == 2);
    CHECK(records[0].backend == "baseline");
    CHECK(records[1].backend == "hybrid");
    for (const auto& r : records) {
        CHECK(r.name == "random_n4_k2_t10_s7");
        CHECK(r.n_qubits == 4);
        CHECK(r.n_terms == 10);
        CHECK(r.L_mean == 2.0);
        CHECK(r.L_std == 0.0);
        CHECK(r.L_max == 2);
        CHECK(r.seed == 7);
        CHECK(r.rescaled_runtime == r.t_run_s / (10.0 * 16.0));
        CHECK(r.t_run_min_s <= r.t_run_s);
        CHECK(r.t_run_s <= r.t_run_max_s);
    }
    CHECK(records[0].speedup_vs_baseline == 1.0);
    CHECK(records[1].speedup_vs_baseline == records[0].t_run_s / records[1].t_run_s);
}

TEST_CASE("non-timing fields are deterministic") {
    const auto a = run_benchmark(quick(6, 3, 20, 11));
    const auto b = run_benchmark(quick(6, 3, 20, 11));
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto x = a[i], y = b[i];
        for (auto* r : {&x, &y}) r->t_compile_s = r->t_run_s = r->rescaled_runtime = r->speedup_vs_baseline = 0;
        CHECK(format_csv_row(x) == format_csv_row(y));
    }
}

TEST_CASE("file source with one term") {
    const auto path = temp_path("one_term.ham");
    {
        std::ofstream out(path);
        out << "qubits: 3\n0.5 XYZ\n";
    }
    BenchConfig cfg;
    cfg.source = FileSource{path.string()};
    cfg.backends = {BackendKind::Hybrid};
    const auto records = run_benchmark(cfg);
    REQUIRE(records.size() == 1);
    CHECK(records[0].name == "hybridsim_test_one_term");
    CHECK(records[0].rescaled_runtime == records[0].t_run_s / (1.0 * 8.0));
    CHECK(std::isnan(records[0].speedup_vs_baseline));
    std::filesystem::remove(path);

    cfg.source = FileSource{"/nonexistent/path.ham"};
    CHECK_THROWS_AS(run_benchmark(cfg), std::runtime_error);
}

TEST_CASE("configuration errors") {
    auto cfg = quick(4, 2, 10, 0);
    cfg.repetitions = 0;
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
    cfg = quick(4, 5, 10, 0);
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
    cfg = quick(2, 2, 10, 0);
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
    cfg = quick(4, 2, 10, 0);
    cfg.backends = {};
    CHECK_THROWS_AS(run_benchmark(cfg), ConfigError);
    cfg = quick(30, 2, 10, 0);
    CHECK_THROWS_AS(run_benchmark(cfg), ResourceError);
    cfg.max_qubits = 20;
    cfg.source = RandomSource{21, 2, 10};
    CHECK_THROWS_AS(run_benchmark(cfg), ResourceError);
}

TEST_CASE("CSV and JSON lines round-trip without loss") {
    auto records = run_benchmark(quick(5, 2, 8, 3));
    auto strange = synthetic("edge", "hybrid", 1e-300, 3.141592653589793);
    strange.speedup_vs_baseline = std::nan("");
    strange.L_mean = 0.1 + 0.2;
    strange.seed = UINT64_MAX;
    records.push_back(strange);
    for (const auto fmt : {OutputFormat::Csv, OutputFormat::Jsonl}) {
        std::stringstream buf;
        write_records(buf, records, fmt);
        const auto back = read_records(buf, fmt);
        REQUIRE(back.size() == records.size());
        for (std::size_t i = 0; i < records.size(); ++i) {
            CHECK(back[i].same_fields(records[i]));
            CHECK(back[i].rescaled_runtime == rescaled_runtime(back[i].t_run_s, back[i].n_terms, back[i].n_qubits));
        }
    }
    std::stringstream header;
    write_records(header, {}, OutputFormat::Csv);
    CHECK(header.str() ==
          "name,n_qubits,n_terms,L_mean,L_std,L_max,backend,t_compile_s,t_run_s,rescaled_runtime,"
          "speedup_vs_baseline,seed\n");
    std::stringstream bad("a,1,2\n");
    CHECK_THROWS_AS(read_records(bad, OutputFormat::Csv), ParseError);
}

TEST_CASE("sweep writes one record per cell and backend, and resumes") {
    SweepGrid grid;
    grid.n_min = 8;
    grid.n_max = 12;
    grid.terms = {50};
    CHECK(sweep_cells(grid).size() == 3 + 4 + 5);

    const auto path = temp_path("sweep.csv");
    std::filesystem::remove(path);
    auto base = quick(1, 1, 1, 4);
    std::ostringstream log;
    const auto first = run_sweep(grid, base, path.string(), log);
    CHECK(first.cells_run == 12);
    CHECK(first.cells_failed == 0);
    CHECK(read_records_file(path.string()).size() == 24);

    const auto second = run_sweep(grid, base, path.string(), log);
    CHECK(second.cells_run == 0);
    CHECK(second.cells_skipped == 12);
    CHECK(read_records_file(path.string()).size() == 24);

    const auto report = summarize(read_records_file(path.string()));
    CHECK(report.pairs.size() == 12);
    CHECK(report.groups.size() == 3);
    std::filesystem::remove(path);
}

TEST_CASE("sweep failures are logged and the sweep continues") {
    SweepGrid grid;
    grid.n_min = 4;
    grid.n_max = 6;
    grid.k_min = 2;
    grid.terms = {10000};  // more than exist at n = 4, k = 2
    auto base = quick(1, 1, 1, 0);
    const auto path = temp_path("sweep_fail.jsonl");
    std::filesystem::remove(path);
    std::ostringstream log;
    const auto r = run_sweep(grid, base, path.string(), log);
    CHECK(r.cells_failed >= 1);
    CHECK(r.cells_run + r.cells_failed == sweep_cells(grid).size());
    CHECK(log.str().find("failed") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("report speedups and compile ratios") {
    const auto rep = summarize({synthetic("a", "baseline", 2.0, 1.0), synthetic("a", "hybrid", 2.0, 1.0)});
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].speedup == 1.0);
    CHECK(rep.pairs[0].compile_ratio == 1.0);

    const auto two = summarize({synthetic("a", "baseline", 8.0, 1.0), synthetic("a", "hybrid", 2.0, 0.9),
                                synthetic("b", "hybrid", 1.0, 1.1), synthetic("b", "baseline", 2.0, 1.0)});
    REQUIRE(two.groups.size() == 1);
    CHECK(two.groups[0].speedup_mean == doctest::Approx(3.0));
    CHECK(two.groups[0].speedup_std == doctest::Approx(1.0));
    CHECK(two.compile_ratio_mean == doctest::Approx(1.0));
    CHECK(two.compile_ratio_min == doctest::Approx(0.9));
    CHECK(two.compile_ratio_max == doctest::Approx(1.1));
    CHECK(format_report(two).find("compile ratio") != std::string::npos);
    CHECK(report_json(two).find("\"speedup_mean\"") != std::string::npos);

    CHECK_THROWS_AS(summarize({synthetic("a", "baseline", 1, 1)}), ReportError);
    CHECK_THROWS_AS(summarize({synthetic("a", "baseline", 1, 1), synthetic("a", "baseline", 1, 1)}), ReportError);
    CHECK_THROWS_AS(summarize({}), ReportError);
}

}
