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

#include "hybridsim/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"

namespace hybridsim::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct MeanStd {
    double mean;
    double std;
};

MeanStd mean_std(const std::vector<double>& v) {
    double s = 0;
    for (const double x : v) s += x;
    const double mean = s / static_cast<double>(v.size());
    double var = 0;
    for (const double x : v) var += (x - mean) * (x - mean);
    return {mean, std::sqrt(var / static_cast<double>(v.size()))};
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::size_t source_qubits(const BenchConfig& cfg) {
    if (const auto* r = std::get_if<RandomSource>(&cfg.source)) return r->n;
    return 0;
}

}  // namespace

void BenchConfig::validate() const {
    if (backends.empty()) throw ConfigError("no backend selected");
    for (std::size_t i = 0; i < backends.size(); ++i) {
        for (std::size_t j = i + 1; j < backends.size(); ++j) {
            if (backends[i] == backends[j]) throw ConfigError("backend listed twice");
        }
    }
    if (repetitions < 1) throw ConfigError("repetitions must be at least 1");
    if (m < 1) throw ConfigError("Trotter steps must be at least 1");
    if (!std::isfinite(t)) throw ConfigError("evolution time must be finite");
    if (const auto* r = std::get_if<RandomSource>(&source)) {
        if (r->n == 0) throw ConfigError("random source needs at least one qubit");
        if (r->k < 1 || r->k > r->n) throw ConfigError("locality must satisfy 1 <= k <= n");
        if (r->n_terms < 1) throw ConfigError("random source needs at least one term");
        if (r->n_terms > candidate_count(r->n, r->k)) {
            throw ConfigError("more terms requested than weight-" + std::to_string(r->k) + " Paulis exist");
        }
    } else if (std::get<FileSource>(source).path.empty()) {
        throw ConfigError("empty Hamiltonian path");
    }
}

bool BenchRecord::same_fields(const BenchRecord& o) const {
    return name == o.name && n_qubits == o.n_qubits && n_terms == o.n_terms && same_double(L_mean, o.L_mean) &&
           same_double(L_std, o.L_std) && L_max == o.L_max && backend == o.backend &&
           same_double(t_compile_s, o.t_compile_s) && same_double(t_run_s, o.t_run_s) &&
           same_double(rescaled_runtime, o.rescaled_runtime) &&
           same_double(speedup_vs_baseline, o.speedup_vs_baseline) && seed == o.seed;
}

double rescaled_runtime(double t_run_s, std::size_t n_terms, std::size_t n_qubits) {
    return t_run_s / (static_cast<double>(n_terms) * std::ldexp(1.0, static_cast<int>(n_qubits)));
}

Hamiltonian build_hamiltonian(const BenchConfig& cfg) {
    const std::size_t n_hint = source_qubits(cfg);
    if (n_hint > cfg.max_qubits) {
        throw ResourceError(std::to_string(n_hint) + " qubits exceeds the configured ceiling of " +
                            std::to_string(cfg.max_qubits));
    }
    Hamiltonian h = [&] {
        if (const auto* r = std::get_if<RandomSource>(&cfg.source)) {
            return random_hamiltonian(r->n, r->k, r->n_terms, cfg.seed);
        }
        return load_hamiltonian(std::get<FileSource>(cfg.source).path);
    }();
    if (h.num_qubits() > cfg.max_qubits) {
        throw ResourceError(std::to_string(h.num_qubits()) + " qubits exceeds the configured ceiling of " +
                            std::to_string(cfg.max_qubits));
    }
    if (h.empty()) throw ConfigError("Hamiltonian '" + h.name() + "' has no terms");
    return h;
}

std::vector<BenchRecord> run_benchmark(const BenchConfig& cfg) {
    cfg.validate();
    const std::size_t nb = cfg.backends.size();
    std::vector<std::vector<double>> compile_s(nb), run_s(nb);
    std::optional<Hamiltonian> ham;
    std::optional<StateVector> baseline_state;
    std::optional<HybridState> hybrid_state;

    for (std::size_t rep = 0; rep < cfg.warmups + cfg.repetitions; ++rep) {
        const bool timed = rep >= cfg.warmups;
        const bool last = rep + 1 == cfg.warmups + cfg.repetitions;
        for (std::size_t slot = 0; slot < nb; ++slot) {
            // Backend order alternates between repetitions so neither backend
            // always compiles right after the other's run has swept the caches.
            const std::size_t b = rep % 2 == 0 ? slot : nb - 1 - slot;
            // Compilation is repeated per backend so each backend's compile
            // time is measured on its own. An untimed build first puts every
            // timed build in the same warm state; otherwise its cost depends
            // on which backend's run last swept the caches.
            (void)trotterize(build_hamiltonian(cfg), cfg.t, cfg.m);
            const auto c0 = Clock::now();
            Hamiltonian h = build_hamiltonian(cfg);
            const Circuit circuit = trotterize(h, cfg.t, cfg.m);
            const double t_compile = seconds_since(c0);

            Rng rng(cfg.seed);
            double t_run = 0;
            if (cfg.backends[b] == BackendKind::Baseline) {
                auto [psi, report] = run_baseline(circuit, rng, cfg.mode);
                t_run = report.t_run_s;
                if (last) baseline_state.emplace(std::move(psi));
            } else {
                auto [hs, report] = run_hybrid(circuit, rng, cfg.mode);
                t_run = report.t_run_s;
                if (last) hybrid_state.emplace(std::move(hs));
            }
            if (timed) {
                compile_s[b].push_back(t_compile);
                run_s[b].push_back(t_run);
            }
            if (!ham) ham.emplace(std::move(h));
        }
        // Only the final repetition's states are kept for verification.
        if (!last) {
            baseline_state.reset();
            hybrid_state.reset();
        }
    }

    if (cfg.verify && baseline_state && hybrid_state) {
        flush_to_origin(*hybrid_state);
        const auto pb = baseline_state->probabilities();
        const auto ph = hybrid_state->phi.probabilities();
        double worst = 0;
        for (std::size_t k = 0; k < pb.size(); ++k) worst = std::max(worst, std::abs(pb[k] - ph[k]));
        if (worst > cfg.verify_tolerance) {
            throw std::runtime_error("hybrid and baseline probabilities differ by " + fmt_double(worst));
        }
    }

    const auto stats = locality_stats(*ham);
    std::vector<BenchRecord> records(nb);
    std::optional<double> baseline_run;
    for (std::size_t b = 0; b < nb; ++b) {
        auto& r = records[b];
        r.name = ham->name();
        r.n_qubits = ham->num_qubits();
        r.n_terms = ham->size();
        r.L_mean = stats.mean;
        r.L_std = stats.std;
        r.L_max = stats.max;
        r.backend = backend_name(cfg.backends[b]);
        r.t_compile_s = median(compile_s[b]);
        r.t_run_s = median(run_s[b]);
        r.t_run_min_s = *std::min_element(run_s[b].begin(), run_s[b].end());
        r.t_run_max_s = *std::max_element(run_s[b].begin(), run_s[b].end());
        r.rescaled_runtime = rescaled_runtime(r.t_run_s, r.n_terms, r.n_qubits);
        r.seed = cfg.seed;
        if (cfg.backends[b] == BackendKind::Baseline) baseline_run = r.t_run_s;
    }
    for (std::size_t b = 0; b < nb; ++b) {
        auto& r = records[b];
        if (cfg.backends[b] == BackendKind::Baseline) {
            r.speedup_vs_baseline = 1.0;
        } else {
            r.speedup_vs_baseline = baseline_run ? *baseline_run / r.t_run_s : std::nan("");
        }
    }
    return records;
}

const char* const kCsvHeader =
    "name,n_qubits,n_terms,L_mean,L_std,L_max,backend,t_compile_s,t_run_s,rescaled_runtime,"
    "speedup_vs_baseline,seed";

std::string format_csv_row(const BenchRecord& r) {
    if (r.name.find_first_of(",\"\n\r") != std::string::npos) {
        throw std::invalid_argument("record name '" + r.name + "' cannot be written to CSV");
    }
    std::string s = r.name;
    s += ',' + std::to_string(r.n_qubits);
    s += ',' + std::to_string(r.n_terms);
    s += ',' + fmt_double(r.L_mean);
    s += ',' + fmt_double(r.L_std);
    s += ',' + std::to_string(r.L_max);
    s += ',' + r.backend;
    s += ',' + fmt_double(r.t_compile_s);
    s += ',' + fmt_double(r.t_run_s);
    s += ',' + fmt_double(r.rescaled_runtime);
    s += ',' + fmt_double(r.speedup_vs_baseline);
    s += ',' + std::to_string(r.seed);
    return s;
}

namespace {

nlohmann::json to_json(const BenchRecord& r) {
    return {{"name", r.name},
            {"n_qubits", r.n_qubits},
            {"n_terms", r.n_terms},
            {"L_mean", r.L_mean},
            {"L_std", r.L_std},
            {"L_max", r.L_max},
            {"backend", r.backend},
            {"t_compile_s", r.t_compile_s},
            {"t_run_s", r.t_run_s},
            {"rescaled_runtime", r.rescaled_runtime},
            {"speedup_vs_baseline", r.speedup_vs_baseline},
            {"seed", r.seed}};
}

double json_double(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    // NaN serializes as null.
    return v.is_null() ? std::nan("") : v.get<double>();
}

BenchRecord from_json(const nlohmann::json& j) {
    BenchRecord r;
    r.name = j.at("name").get<std::string>();
    r.n_qubits = j.at("n_qubits").get<std::size_t>();
    r.n_terms = j.at("n_terms").get<std::size_t>();
    r.L_mean = json_double(j, "L_mean");
    r.L_std = json_double(j, "L_std");
    r.L_max = j.at("L_max").get<std::size_t>();
    r.backend = j.at("backend").get<std::string>();
    r.t_compile_s = json_double(j, "t_compile_s");
    r.t_run_s = json_double(j, "t_run_s");
    r.rescaled_runtime = json_double(j, "rescaled_runtime");
    r.speedup_vs_baseline = json_double(j, "speedup_vs_baseline");
    r.seed = j.at("seed").get<std::uint64_t>();
    return r;
}

double parse_double(const std::string& s, std::size_t line_no) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) throw ParseError(line_no, "malformed number '" + s + "'");
    return v;
}

std::uint64_t parse_uint(const std::string& s, std::size_t line_no) {
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (s.empty() || pos != s.size() || s[0] == '-') throw ParseError(line_no, "malformed integer '" + s + "'");
    return v;
}

BenchRecord parse_csv_row(const std::string& line, std::size_t line_no) {
    std::vector<std::string> f;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
    if (!line.empty() && line.back() == ',') f.emplace_back();
    if (f.size() != 12) throw ParseError(line_no, "expected 12 fields, found " + std::to_string(f.size()));
    BenchRecord r;
    r.name = f[0];
    r.n_qubits = parse_uint(f[1], line_no);
    r.n_terms = parse_uint(f[2], line_no);
    r.L_mean = parse_double(f[3], line_no);
    r.L_std = parse_double(f[4], line_no);
    r.L_max = parse_uint(f[5], line_no);
    r.backend = f[6];
    r.t_compile_s = parse_double(f[7], line_no);
    r.t_run_s = parse_double(f[8], line_no);
    r.rescaled_runtime = parse_double(f[9], line_no);
    r.speedup_vs_baseline = parse_double(f[10], line_no);
    r.seed = parse_uint(f[11], line_no);
    return r;
}

}  // namespace

void write_records(std::ostream& os, const std::vector<BenchRecord>& records, OutputFormat fmt, bool header) {
    if (fmt == OutputFormat::Csv) {
        if (header) os << kCsvHeader << '\n';
        for (const auto& r : records) os << format_csv_row(r) << '\n';
    } else {
        for (const auto& r : records) os << to_json(r).dump() << '\n';
    }
}

std::vector<BenchRecord> read_records(std::istream& is, OutputFormat fmt) {
    std::vector<BenchRecord> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (fmt == OutputFormat::Csv) {
            if (line == kCsvHeader) continue;
            out.push_back(parse_csv_row(line, line_no));
        } else {
            try {
                out.push_back(from_json(nlohmann::json::parse(line)));
            } catch (const nlohmann::json::exception& e) {
                throw ParseError(line_no, e.what());
            }
        }
    }
    return out;
}

OutputFormat format_for_path(const std::string& path) {
    const auto ext = std::filesystem::path(path).extension().string();
    return ext == ".jsonl" || ext == ".json" ? OutputFormat::Jsonl : OutputFormat::Csv;
}

std::vector<BenchRecord> read_records_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open records file '" + path + "'");
    return read_records(in, format_for_path(path));
}

std::vector<SweepCell> sweep_cells(const SweepGrid& g) {
    if (g.n_step == 0 || g.k_step == 0) throw ConfigError("sweep steps must be positive");
    if (g.terms.empty()) throw ConfigError("sweep needs at least one term count");
    std::vector<SweepCell> cells;
    for (std::size_t n = g.n_min; n <= g.n_max; n += g.n_step) {
        for (std::size_t k = g.k_min; k <= n; k += g.k_step) {
            for (const auto t : g.terms) cells.push_back({n, k, t});
        }
    }
    if (cells.empty()) throw ConfigError("sweep grid is empty");
    return cells;
}

SweepResult run_sweep(const SweepGrid& grid, const BenchConfig& base, const std::string& out_path,
                      std::ostream& log) {
    const auto cells = sweep_cells(grid);
    const OutputFormat fmt = format_for_path(out_path);

    std::map<std::string, std::size_t> done;  // name -> backends present
    const bool exists = std::filesystem::exists(out_path) && std::filesystem::file_size(out_path) > 0;
    if (exists) {
        for (const auto& r : read_records_file(out_path)) {
            if (r.seed == base.seed) ++done[r.name];
        }
    }
    std::ofstream out(out_path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open sweep output '" + out_path + "'");
    if (!exists && fmt == OutputFormat::Csv) out << kCsvHeader << '\n' << std::flush;

    SweepResult result;
    for (const auto& cell : cells) {
        BenchConfig cfg = base;
        cfg.source = RandomSource{cell.n, cell.k, cell.n_terms};
        const std::string label = "n=" + std::to_string(cell.n) + " k=" + std::to_string(cell.k) +
                                  " terms=" + std::to_string(cell.n_terms);
        try {
            cfg.validate();
            // Names are a pure function of the cell and seed, so the
            // resume check does not need to build the Hamiltonian.
            const std::string name = "random_n" + std::to_string(cell.n) + "_k" + std::to_string(cell.k) + "_t" +
                                     std::to_string(cell.n_terms) + "_s" + std::to_string(cfg.seed);
            if (done[name] >= cfg.backends.size()) {
                ++result.cells_skipped;
                continue;
            }
            const auto records = run_benchmark(cfg);
            write_records(out, records, fmt, false);
            out.flush();
            ++result.cells_run;
            log << "cell " << label << ": done\n" << std::flush;
        } catch (const std::exception& e) {
            ++result.cells_failed;
            log << "cell " << label << ": failed: " << e.what() << '\n' << std::flush;
        }
    }
    return result;
}

Report summarize(const std::vector<BenchRecord>& records) {
    struct Pair {
        const BenchRecord* baseline = nullptr;
        const BenchRecord* hybrid = nullptr;
    };
    std::map<std::pair<std::string, std::uint64_t>, Pair> pairs;
    std::vector<std::pair<std::string, std::uint64_t>> order;
    for (const auto& r : records) {
        const auto key = std::make_pair(r.name, r.seed);
        auto [it, inserted] = pairs.try_emplace(key);
        if (inserted) order.push_back(key);
        const BenchRecord** slot = nullptr;
        if (r.backend == "baseline") {
            slot = &it->second.baseline;
        } else if (r.backend == "hybrid") {
            slot = &it->second.hybrid;
        } else {
            throw ReportError("unknown backend '" + r.backend + "' in record " + r.name);
        }
        if (*slot) throw ReportError("duplicate " + r.backend + " record for " + r.name);
        *slot = &r;
    }
    if (pairs.empty()) throw ReportError("no records to report");

    Report rep;
    for (const auto& key : order) {
        const auto& p = pairs.at(key);
        if (!p.baseline || !p.hybrid) {
            throw ReportError("record " + key.first + " (seed " + std::to_string(key.second) +
                              ") has no matching " + (p.baseline ? "hybrid" : "baseline") + " record");
        }
        if (p.baseline->n_qubits != p.hybrid->n_qubits || p.baseline->n_terms != p.hybrid->n_terms) {
            throw ReportError("record pair " + key.first + " disagrees on problem size");
        }
        rep.pairs.push_back({key.first, p.baseline->n_qubits, p.baseline->n_terms, p.baseline->L_mean,
                             p.baseline->t_run_s / p.hybrid->t_run_s,
                             p.hybrid->t_compile_s / p.baseline->t_compile_s});
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<const PairSummary*>> groups;
    std::vector<double> all_ratios;
    for (const auto& p : rep.pairs) {
        groups[{p.n_qubits, p.n_terms}].push_back(&p);
        all_ratios.push_back(p.compile_ratio);
    }
    for (const auto& [key, members] : groups) {
        std::vector<double> sp, cr;
        for (const auto* p : members) {
            sp.push_back(p->speedup);
            cr.push_back(p->compile_ratio);
        }
        const auto s = mean_std(sp), c = mean_std(cr);
        rep.groups.push_back({key.first, key.second, members.size(), s.mean, s.std, c.mean, c.std});
    }
    const auto overall = mean_std(all_ratios);
    rep.compile_ratio_mean = overall.mean;
    rep.compile_ratio_std = overall.std;
    rep.compile_ratio_min = *std::min_element(all_ratios.begin(), all_ratios.end());
    rep.compile_ratio_max = *std::max_element(all_ratios.begin(), all_ratios.end());
    return rep;
}

std::string format_report(const Report& r) {
    std::ostringstream os;
    char buf[256];
    os << "per configuration\n";
    std::snprintf(buf, sizeof buf, "  %-36s %4s %6s %8s %10s %10s\n", "name", "n", "terms", "L_mean", "speedup",
                  "compile");
    os << buf;
    for (const auto& p : r.pairs) {
        std::snprintf(buf, sizeof buf, "  %-36s %4zu %6zu %8.3f %10.3f %10.3f\n", p.name.c_str(), p.n_qubits,
                      p.n_terms, p.L_mean, p.speedup, p.compile_ratio);
        os << buf;
    }
    os << "grouped by (n, terms)\n";
    std::snprintf(buf, sizeof buf, "  %4s %6s %6s %22s %22s\n", "n", "terms", "count", "speedup mean+-std",
                  "compile mean+-std");
    os << buf;
    for (const auto& g : r.groups) {
        std::snprintf(buf, sizeof buf, "  %4zu %6zu %6zu %12.3f +- %-7.3f %12.3f +- %-7.3f\n", g.n_qubits, g.n_terms,
                      g.count, g.speedup_mean, g.speedup_std, g.compile_ratio_mean, g.compile_ratio_std);
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "compile ratio: %.3f +- %.3f (min %.3f, max %.3f) over %zu pairs\n",
                  r.compile_ratio_mean, r.compile_ratio_std, r.compile_ratio_min, r.compile_ratio_max, r.pairs.size());
    os << buf;
    return os.str();
}

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["pairs"] = nlohmann::json::array();
    for (const auto& p : r.pairs) {
        j["pairs"].push_back({{"name", p.name},
                              {"n_qubits", p.n_qubits},
                              {"n_terms", p.n_terms},
                              {"L_mean", p.L_mean},
                              {"speedup", p.speedup},
                              {"compile_ratio", p.compile_ratio}});
    }
    j["groups"] = nlohmann::json::array();
    for (const auto& g : r.groups) {
        j["groups"].push_back({{"n_qubits", g.n_qubits},
                               {"n_terms", g.n_terms},
                               {"count", g.count},
                               {"speedup_mean", g.speedup_mean},
                               {"speedup_std", g.speedup_std},
                               {"compile_ratio_mean", g.compile_ratio_mean},
                               {"compile_ratio_std", g.compile_ratio_std}});
    }
    j["compile_ratio"] = {{"mean", r.compile_ratio_mean},
                          {"std", r.compile_ratio_std},
                          {"min", r.compile_ratio_min},
                          {"max", r.compile_ratio_max}};
    return j.dump(2);
}

}  // namespace hybridsim::bench
