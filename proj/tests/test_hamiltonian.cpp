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
#include <map>
#include <set>

#include "hybridsim/hamiltonian.hpp"

using namespace hybridsim;

TEST_SUITE("hamiltonian") {

TEST_CASE("parse dense terms with a header") {
    const auto h = parse_hamiltonian("qubits: 2\n0.5 ZZ\n-0.25 XI\n");
    REQUIRE(h.size() == 2);
    CHECK(h.terms()[0].coeff == 0.5);
    CHECK(h.terms()[0].pauli.to_dense() == "ZZ");
    CHECK(h.terms()[1].coeff == -0.25);
    CHECK(locality_stats(h).max == 2);
}

TEST_CASE("comments, blank lines, sparse terms and signs") {
    const auto h = parse_hamiltonian("# a comment\n\nqubits: 4\n  1.5 X0 Z3   # trailing\n2e-1 -YIII\n");
    REQUIRE(h.size() == 2);
    CHECK(h.terms()[0].pauli.to_dense() == "ZIIX");
    CHECK(h.terms()[1].coeff == doctest::Approx(-0.2));
    CHECK(h.terms()[1].pauli.phase_exp() == 0);
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_hamiltonian(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("0.5 Q0") == 1);
    CHECK(line_of("qubits: 2\n0.5 ZZ\nabc XX\n") == 3);
    CHECK(line_of("qubits: 2\n0.5 ZZ\n0.1 ZZ\n") == 3);
    CHECK(line_of("qubits: 2\n0.5 Z2\n") == 2);
    CHECK(line_of("0.5 ZZ\n0.5 ZZZ\n") == 2);
    CHECK(line_of("0.5 Z0\n") == 1);
    CHECK(line_of("0.5 iZZ\n") == 1);
    CHECK(line_of("0.5 ZZ\nqubits: 2\n") == 2);
    CHECK_THROWS_AS(parse_hamiltonian(""), ParseError);
    CHECK_THROWS(load_hamiltonian("/nonexistent/file.ham"));
}

TEST_CASE("print then parse is the identity") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const std::size_t k = 1 + seed % n;
        const auto h = random_hamiltonian(n, k, std::min<std::uint64_t>(20, candidate_count(n, k)), seed);
        const auto back = parse_hamiltonian(format_hamiltonian(h), h.name());
        REQUIRE(back.size() == h.size());
        REQUIRE(back.num_qubits() == h.num_qubits());
        for (std::size_t i = 0; i < h.size(); ++i) {
            REQUIRE(back.terms()[i].coeff == h.terms()[i].coeff);
            REQUIRE(back.terms()[i].pauli == h.terms()[i].pauli);
        }
    }
}

TEST_CASE("candidate counts") {
    CHECK(candidate_count(8, 4) == 5670);
    CHECK(candidate_count(3, 0) == 1);
    CHECK(candidate_count(3, 4) == 0);
    CHECK(candidate_count(24, 24) == 282429536481ULL);
    CHECK(candidate_count(200, 100) == UINT64_MAX);
}

TEST_CASE("random Hamiltonians: exact weight, uniqueness, normalization, determinism") {
    const auto h = random_hamiltonian(24, 24, 100, 5);
    CHECK(h.size() == 100);
    for (const auto& t : h.terms()) CHECK(weight(t.pauli) == 24);

    const auto g = random_hamiltonian(10, 6, 50, 1);
    std::set<std::string> seen;
    for (const auto& t : g.terms()) {
        CHECK(weight(t.pauli) == 6);
        CHECK(seen.insert(t.pauli.to_dense()).second);
        CHECK(std::abs(t.coeff) < 1.0);
    }
    CHECK(std::abs(one_norm(g) - 1.0) <= 1e-12);
    const auto stats = locality_stats(g);
    CHECK(stats.mean == 6.0);
    CHECK(stats.std == 0.0);
    CHECK(stats.max == 6);

    const auto again = random_hamiltonian(10, 6, 50, 1);
    CHECK(format_hamiltonian(again) == format_hamiltonian(g));
    CHECK(format_hamiltonian(random_hamiltonian(10, 6, 50, 2)) != format_hamiltonian(g));

    // Exhausting the candidate set is allowed; exceeding it is not.
    CHECK(random_hamiltonian(2, 2, 9, 0).size() == 9);
    CHECK_THROWS_AS(random_hamiltonian(2, 2, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_hamiltonian(3, 0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(random_hamiltonian(3, 4, 1, 0), std::invalid_argument);
}

TEST_CASE("support sets and letters are uniform") {
    // n = 5, k = 2: 10 support sets, 9 letter pairs. 10^5 single-term draws.
    const int draws = 100000;
    std::map<std::uint64_t, int> support, letters;
    for (int s = 0; s < draws; ++s) {
        const auto h = random_hamiltonian(5, 2, 1, static_cast<std::uint64_t>(s));
        const auto& p = h.terms()[0].pauli;
        ++support[p.x_mask() | p.z_mask()];
        std::uint64_t code = 0;
        for (std::size_t q = 0; q < 5; ++q) {
            if (p.letter(q) != PauliLetter::I) code = code * 4 + static_cast<std::uint64_t>(p.letter(q));
        }
        ++letters[code];
    }
    REQUIRE(support.size() == 10);
    REQUIRE(letters.size() == 9);
    auto within_5_sigma = [&](const std::map<std::uint64_t, int>& counts, double prob) {
        const double mean = draws * prob, sigma = std::sqrt(draws * prob * (1 - prob));
        for (const auto& [key, count] : counts) {
            if (std::abs(count - mean) > 5 * sigma) return false;
        }
        return true;
    };
    CHECK(within_5_sigma(support, 0.1));
    CHECK(within_5_sigma(letters, 1.0 / 9));
}

TEST_CASE("locality statistics") {
    const auto h = parse_hamiltonian("1 ZZ\n");
    const auto s = locality_stats(h);
    CHECK(s.mean == 2.0);
    CHECK(s.std == 0.0);
    CHECK(s.max == 2);

    const auto mixed = parse_hamiltonian("qubits: 4\n1 Z0\n-2 X0 Y1 Z2\n0.5 X3\n");
    const auto m = locality_stats(mixed);
    CHECK(m.mean == doctest::Approx(5.0 / 3));
    CHECK(m.std == doctest::Approx(std::sqrt(((1 - 5.0 / 3) * (1 - 5.0 / 3) * 2 + (3 - 5.0 / 3) * (3 - 5.0 / 3)) / 3)));
    CHECK(m.max == 3);
    CHECK(one_norm(mixed) == 3.5);
    CHECK_THROWS(locality_stats(Hamiltonian(3)));
}

}
