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
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hybridsim/pauli_string.hpp"

namespace hybridsim {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct HamTerm {
    double coeff;
    PauliString pauli;  // sign +1
};

/// Real-weighted Pauli sum. Term order is the Trotter order.
class Hamiltonian {
public:
    explicit Hamiltonian(std::size_t num_qubits, std::string name = {});

    std::size_t num_qubits() const { return num_qubits_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    const std::vector<HamTerm>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    /// Throws std::invalid_argument on a duplicate, a signed or mis-sized
    /// Pauli, or a non-finite coefficient.
    void add_term(double coeff, PauliString pauli);
    bool contains(const PauliString& pauli) const;

private:
    std::size_t num_qubits_;
    std::string name_;
    std::vector<HamTerm> terms_;
    std::unordered_set<std::string> keys_;
};

/// One `<coeff> <pauli>` per line, dense or sparse Pauli; `#` comments and
/// blank lines are skipped; an optional leading `qubits: <n>` line is
/// required for sparse terms.
Hamiltonian parse_hamiltonian(std::istream& in, std::string name = {});
Hamiltonian parse_hamiltonian(std::string_view text, std::string name = {});
Hamiltonian load_hamiltonian(const std::string& path);
/// Canonical text: `qubits:` header, then dense terms with round-trip precision.
std::string format_hamiltonian(const Hamiltonian& h);

/// C(n, k) * 3^k, saturating at UINT64_MAX.
std::uint64_t candidate_count(std::size_t n, std::size_t k);

/// n_terms distinct Paulis of weight exactly k, coefficients uniform in
/// (-1, 1) rescaled to unit one-norm. Fully determined by seed.
Hamiltonian random_hamiltonian(std::size_t n, std::size_t k, std::size_t n_terms, std::uint64_t seed);

struct LocalityStats {
    double mean;
    double std;  // population
    std::size_t max;
};

LocalityStats locality_stats(const Hamiltonian& h);
double one_norm(const Hamiltonian& h);

}  // namespace hybridsim
