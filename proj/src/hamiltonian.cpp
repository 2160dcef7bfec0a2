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

#include "hybridsim/hamiltonian.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>

#include "hybridsim/rng.hpp"

namespace hybridsim {

Hamiltonian::Hamiltonian(std::size_t num_qubits, std::string name)
    : num_qubits_(num_qubits), name_(std::move(name)) {
    if (num_qubits == 0) throw std::invalid_argument("Hamiltonian needs at least one qubit");
}

void Hamiltonian::add_term(double coeff, PauliString pauli) {
    if (!std::isfinite(coeff)) throw std::invalid_argument("non-finite coefficient");
    if (pauli.num_qubits() != num_qubits_) {
        throw std::invalid_argument("term on " + std::to_string(pauli.num_qubits()) +
                                    " qubits in a " + std::to_string(num_qubits_) + "-qubit Hamiltonian");
    }
    if (pauli.phase_exp() != 0) throw std::invalid_argument("term Paulis carry sign +1");
    if (!keys_.insert(pauli.to_dense()).second) {
        throw std::invalid_argument("duplicate term " + pauli.to_dense());
    }
    terms_.push_back({coeff, std::move(pauli)});
}

bool Hamiltonian::contains(const PauliString& pauli) const { return keys_.contains(pauli.to_dense()); }

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Hamiltonian parse_hamiltonian(std::istream& in, std::string name) {
    std::optional<std::size_t> header_qubits;
    std::optional<Hamiltonian> h;
    std::string raw;
    std::size_t line_no = 0;
    bool seen_content = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.starts_with("qubits:")) {
            if (seen_content) throw ParseError(line_no, "qubits header must come first");
            const auto value = trim(line.substr(7));
            std::size_t n = 0;
            const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
            if (ec != std::errc{} || ptr != value.data() + value.size() || n == 0) {
                throw ParseError(line_no, "malformed qubit count '" + std::string(value) + "'");
            }
            header_qubits = n;
            h.emplace(n, name);
            seen_content = true;
            continue;
        }
        seen_content = true;

        const auto split = line.find_first_of(" \t");
        if (split == std::string_view::npos) throw ParseError(line_no, "expected '<coeff> <pauli>'");
        const std::string coeff_text(line.substr(0, split));
        const auto pauli_text = trim(line.substr(split));

        // strtod: floating-point from_chars is missing from older toolchains.
        char* end = nullptr;
        double coeff = std::strtod(coeff_text.c_str(), &end);
        if (end != coeff_text.c_str() + coeff_text.size() || !std::isfinite(coeff)) {
            throw ParseError(line_no, "malformed coefficient '" + coeff_text + "'");
        }

        PauliString p;
        try {
            p = PauliString::parse(pauli_text, header_qubits);
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
        if (p.phase_exp() != 0) {
            if (p.phase_exp() != 2) throw ParseError(line_no, "imaginary term phase");
            p.set_phase_exp(0);
            coeff = -coeff;
        }
        if (!h) h.emplace(p.num_qubits(), name);
        try {
            h->add_term(coeff, std::move(p));
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!h) throw ParseError(line_no, "no qubit count and no terms");
    return std::move(*h);
}

Hamiltonian parse_hamiltonian(std::string_view text, std::string name) {
    std::istringstream in{std::string(text)};
    return parse_hamiltonian(in, std::move(name));
}

Hamiltonian load_hamiltonian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open Hamiltonian file '" + path + "'");
    return parse_hamiltonian(in, std::filesystem::path(path).stem().string());
}

std::string format_hamiltonian(const Hamiltonian& h) {
    std::ostringstream os;
    if (!h.name().empty()) os << "# " << h.name() << '\n';
    os << "qubits: " << h.num_qubits() << '\n';
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto& t : h.terms()) os << t.coeff << ' ' << t.pauli.to_dense() << '\n';
    return os.str();
}

std::uint64_t candidate_count(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // C(n, k) incrementally; each partial product is itself a binomial.
    std::uint64_t binom = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        const std::uint64_t num = n - k + i;
        const std::uint64_t g = std::gcd(binom, i);
        const std::uint64_t b = binom / g, d = i / g;
        if (b > kMax / num) return kMax;
        binom = b * (num / d);  // d divides num once b and i share no factor
    }
    std::uint64_t total = binom;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kMax / 3) return kMax;
        total *= 3;
    }
    return total;
}

Hamiltonian random_hamiltonian(std::size_t n, std::size_t k, std::size_t n_terms, std::uint64_t seed) {
    if (k < 1 || k > n) throw std::invalid_argument("locality must satisfy 1 <= k <= n");
    if (n_terms > candidate_count(n, k)) {
        throw std::invalid_argument("requested " + std::to_string(n_terms) + " terms but only " +
                                    std::to_string(candidate_count(n, k)) + " weight-" +
                                    std::to_string(k) + " Paulis exist on " + std::to_string(n) +
                                    " qubits");
    }
    Rng rng(seed);
    Hamiltonian h(n, "random_n" + std::to_string(n) + "_k" + std::to_string(k) + "_t" +
                         std::to_string(n_terms) + "_s" + std::to_string(seed));
    std::vector<std::size_t> qubits(n);
    std::uniform_int_distribution<int> letter_dist(1, 3);

    while (h.size() < n_terms) {
        std::iota(qubits.begin(), qubits.end(), std::size_t{0});
        PauliString p(n);
        // Partial Fisher-Yates: the first k entries are a uniform k-subset.
        for (std::size_t i = 0; i < k; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(qubits[i], qubits[pick(rng.engine())]);
            p.set_letter(qubits[i], static_cast<PauliLetter>(letter_dist(rng.engine())));
        }
        if (h.contains(p)) continue;
        double c = 0;
        do {
            c = 2.0 * rng.uniform() - 1.0;
        } while (c == -1.0 || c == 0.0);
        h.add_term(c, std::move(p));
    }

    const double norm = one_norm(h);
    Hamiltonian normalized(n, h.name());
    for (const auto& t : h.terms()) normalized.add_term(t.coeff / norm, t.pauli);
    return normalized;
}

LocalityStats locality_stats(const Hamiltonian& h) {
    if (h.empty()) throw std::invalid_argument("locality_stats of an empty Hamiltonian");
    double sum = 0;
    std::size_t max = 0;
    for (const auto& t : h.terms()) {
        const std::size_t w = weight(t.pauli);
        sum += static_cast<double>(w);
        max = std::max(max, w);
    }
    const double mean = sum / static_cast<double>(h.size());
    double var = 0;
    for (const auto& t : h.terms()) {
        const double d = static_cast<double>(weight(t.pauli)) - mean;
        var += d * d;
    }
    return {mean, std::sqrt(var / static_cast<double>(h.size())), max};
}

double one_norm(const Hamiltonian& h) {
    double s = 0;
    for (const auto& t : h.terms()) s += std::abs(t.coeff);
    return s;
}

}  // namespace hybridsim
