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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hybridsim/pauli_string.hpp"

namespace hybridsim {

enum class CliffordGate { H, S, Sdg, X, Y, Z, CX, CZ, SWAP };

const char* clifford_gate_name(CliffordGate g);
bool is_two_qubit(CliffordGate g);

struct FrameRow {
    PauliString eff_z;
    PauliString eff_x;

    friend bool operator==(const FrameRow&, const FrameRow&) = default;
};

/// Pauli frame in the backward interpretation: row j holds (U^dag Z_j U,
/// U^dag X_j U) for the Clifford U accumulated so far. An origin frame
/// represents the identity.
///
/// Gate updates read as U <- g U. Lookup returns U^dag P U, so a single-qubit
/// rotation issued after U becomes a rotation about lookup(axis) on the
/// untransformed state.
class PauliFrame {
public:
    static constexpr std::size_t kNoQubit = std::numeric_limits<std::size_t>::max();

    PauliFrame() = default;
    static PauliFrame origin(std::size_t num_qubits);

    std::size_t num_qubits() const { return rows_.size(); }
    const FrameRow& row(std::size_t j) const { return rows_.at(j); }
    std::span<const FrameRow> rows() const { return rows_; }
    /// Raw overwrite; no validity check.
    void set_row(std::size_t j, FrameRow r) { rows_.at(j) = std::move(r); }

    /// Symplectic conditions on all row pairs and even phases on all entries.
    bool validate() const;
    bool is_origin() const;

    void apply_gate_backward(CliffordGate gate, std::size_t q0, std::size_t q1 = kNoQubit);

    /// U^dag P U as a signed Pauli string.
    PauliString lookup(const PauliString& p) const;

    // Entrywise conjugations F <- V F V^dag, which pair with applying V to
    // the state vector so that the represented state is unchanged.

    /// V = exp(-i * quarter_turns * pi/4 * axis).
    void conjugate_rotation(const PauliString& axis, int quarter_turns = 1);
    void conjugate_single_qubit(CliffordGate gate, std::size_t q);
    void conjugate_swap(std::size_t a, std::size_t b);

    /// `effZ=<signed dense>  effX=<signed dense>` per row.
    std::string dump() const;

    friend bool operator==(const PauliFrame&, const PauliFrame&) = default;

private:
    void check_qubit(std::size_t q) const;

    std::vector<FrameRow> rows_;
};

struct PauliRotationStep {
    PauliString axis;  // Hermitian
    double angle;      // exp(-i angle/2 axis)
};

struct QubitSwapStep {
    std::size_t a;
    std::size_t b;
};

struct SingleQubitCliffordStep {
    std::size_t qubit;
    CliffordGate gate;  // H, S, Sdg, X, Y or Z
};

using RotationStep = std::variant<PauliRotationStep, QubitSwapStep, SingleQubitCliffordStep>;

/// Steps V_1..V_m whose entrywise conjugations, applied in order, take f to
/// the origin frame with all signs. Applying the same steps in the same order
/// to the state vector therefore applies f's Clifford U to it; the reversed
/// list with negated angles (inverse_steps) applies U^dag.
///
/// At most two multi-qubit pi/2 rotations per qubit are emitted, followed by
/// at most three single-qubit Cliffords per qubit for letter normalisation,
/// at most two Pauli sign fixes per qubit and at most n-1 swaps.
std::vector<RotationStep> invert_to_rotations(const PauliFrame& f);

std::vector<RotationStep> inverse_steps(std::span<const RotationStep> steps);

void apply_step_image(PauliFrame& f, const RotationStep& step);

std::size_t count_pauli_rotations(std::span<const RotationStep> steps);

}  // namespace hybridsim
