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
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybridsim/hamiltonian.hpp"
#include "hybridsim/pauli_frame.hpp"
#include "hybridsim/pauli_string.hpp"

namespace hybridsim {

enum class GateTag { H, S, Sdg, X, Y, Z, CX, CZ, SWAP, RX, RY, RZ, PrepZ, MeasZ };

const char* gate_tag_name(GateTag tag);
std::optional<GateTag> gate_tag_from_name(std::string_view name);
bool is_clifford(GateTag tag);
bool is_rotation(GateTag tag);
bool is_two_qubit(GateTag tag);
/// The frame gate for a Clifford tag; throws for non-Clifford tags.
CliffordGate to_clifford_gate(GateTag tag);

struct Gate {
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    GateTag tag;
    std::size_t q0;
    std::size_t q1 = kNone;
    double angle = 0.0;
    std::optional<std::size_t> classical_target;

    static Gate single(GateTag tag, std::size_t q);
    static Gate pair(GateTag tag, std::size_t control, std::size_t target);
    static Gate rotation(GateTag tag, std::size_t q, double angle);
    static Gate prep_z(std::size_t q) { return single(GateTag::PrepZ, q); }
    static Gate meas_z(std::size_t q, std::optional<std::size_t> slot = std::nullopt);

    friend bool operator==(const Gate&, const Gate&) = default;
};

struct CircuitMetadata {
    std::string source;
    double trotter_time = 0.0;
    std::size_t trotter_steps = 0;
    /// Accumulated from weight-0 terms: the circuit implements
    /// exp(i * global_phase) times its gate product.
    double global_phase = 0.0;

    friend bool operator==(const CircuitMetadata&, const CircuitMetadata&) = default;
};

/// Ordered gate list; the first gate is applied first.
class Circuit {
public:
    explicit Circuit(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    bool empty() const { return gates_.empty(); }
    CircuitMetadata& metadata() { return metadata_; }
    const CircuitMetadata& metadata() const { return metadata_; }

    /// Validates qubit indices, arity and angle finiteness.
    void add(const Gate& g);
    /// Appends gates and accumulates the global phase.
    void append(const Circuit& other);
    void reserve(std::size_t n) { gates_.reserve(n); }

    /// Same gates in reverse order with rotation angles negated and S/Sdg
    /// exchanged. Throws if the circuit contains PrepZ or MeasZ.
    Circuit inverse() const;

    /// One gate per line: `TAG q[,q2][,angle]`; MeasZ with a result slot
    /// is written `MeasZ q,c<slot>`.
    std::string dump() const;
    static Circuit parse_dump(std::string_view text, std::size_t num_qubits);

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    std::size_t num_qubits_;
    std::vector<Gate> gates_;
    CircuitMetadata metadata_;
};

struct GateCounts {
    std::size_t clifford = 0;
    std::size_t rotation = 0;
    std::size_t prep = 0;
    std::size_t measure = 0;
    std::size_t cx = 0;

    std::size_t total() const { return clifford + rotation + prep + measure; }
};

GateCounts count_gates(const Circuit& c);
std::size_t clifford_gate_count(const Circuit& c);
std::size_t rotation_gate_count(const Circuit& c);

/// CNOT-staircase fragment for exp(-i angle/2 term). term must carry sign
/// +1; an identity term appends nothing and adds -angle/2 to the global phase.
void append_pauli_rotation(Circuit& c, const PauliString& term, double angle);
Circuit compile_pauli_rotation(const PauliString& term, double angle);

/// m repetitions of the per-term fragments in input order, with term angle
/// 2 c_j t / m.
Circuit trotterize(const Hamiltonian& h, double t, std::size_t m);

}  // namespace hybridsim
