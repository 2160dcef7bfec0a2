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

#include "hybridsim/pauli_frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace hybridsim {

const char* clifford_gate_name(CliffordGate g) {
    switch (g) {
        case CliffordGate::H:
            return "H";
        case CliffordGate::S:
            return "S";
        case CliffordGate::Sdg:
            return "Sdg";
        case CliffordGate::X:
            return "X";
        case CliffordGate::Y:
            return "Y";
        case CliffordGate::Z:
            return "Z";
        case CliffordGate::CX:
            return "CX";
        case CliffordGate::CZ:
            return "CZ";
        case CliffordGate::SWAP:
            return "SWAP";
    }
    return "?";
}

bool is_two_qubit(CliffordGate g) {
    return g == CliffordGate::CX || g == CliffordGate::CZ || g == CliffordGate::SWAP;
}

PauliFrame PauliFrame::origin(std::size_t num_qubits) {
    if (num_qubits == 0) throw std::invalid_argument("frame needs at least one qubit");
    PauliFrame f;
    f.rows_.reserve(num_qubits);
    for (std::size_t j = 0; j < num_qubits; ++j) {
        f.rows_.push_back({PauliString::single(num_qubits, j, PauliLetter::Z),
                           PauliString::single(num_qubits, j, PauliLetter::X)});
    }
    return f;
}

bool PauliFrame::validate() const {
    const std::size_t n = rows_.size();
    for (const auto& r : rows_) {
        if (r.eff_z.num_qubits() != n || r.eff_x.num_qubits() != n) return false;
        if (!r.eff_z.is_hermitian() || !r.eff_x.is_hermitian()) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (anticommutation_flag(rows_[i].eff_z, rows_[j].eff_x) != (i == j ? 1 : 0)) return false;
            if (j > i) {
                if (anticommutes(rows_[i].eff_z, rows_[j].eff_z)) return false;
                if (anticommutes(rows_[i].eff_x, rows_[j].eff_x)) return false;
            }
        }
    }
    return true;
}

bool PauliFrame::is_origin() const { return *this == origin(rows_.size()); }

void PauliFrame::check_qubit(std::size_t q) const {
    if (q >= rows_.size()) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for frame on " +
                                std::to_string(rows_.size()) + " qubits");
    }
}

// Row updates come from g^dag sigma g for each origin symbol sigma, expanded
// back into frame entries:
//   H:    Z -> X, X -> Z
//   S:    X -> -Y = i effZ effX      Sdg: X -> Y = -i effZ effX
//   X:    Z -> -Z    Y: Z -> -Z, X -> -X    Z: X -> -X
//   CX:   Z_t -> Z_c Z_t, X_c -> X_c X_t
//   CZ:   X_a -> X_a Z_b, X_b -> Z_a X_b
//   SWAP: rows exchange
void PauliFrame::apply_gate_backward(CliffordGate gate, std::size_t q0, std::size_t q1) {
    check_qubit(q0);
    if (is_two_qubit(gate)) {
        check_qubit(q1);
        if (q0 == q1) throw std::invalid_argument("two-qubit gate on a repeated qubit");
    }
    auto& r = rows_[q0];
    switch (gate) {
        case CliffordGate::H:
            std::swap(r.eff_z, r.eff_x);
            break;
        case CliffordGate::S:
        case CliffordGate::Sdg: {
            PauliString y = r.eff_z * r.eff_x;
            y.multiply_phase(gate == CliffordGate::S ? 1 : 3);
            r.eff_x = std::move(y);
            break;
        }
        case CliffordGate::X:
            r.eff_z.negate();
            break;
        case CliffordGate::Y:
            r.eff_z.negate();
            r.eff_x.negate();
            break;
        case CliffordGate::Z:
            r.eff_x.negate();
            break;
        case CliffordGate::CX:
            rows_[q1].eff_z *= rows_[q0].eff_z;
            rows_[q0].eff_x *= rows_[q1].eff_x;
            break;
        case CliffordGate::CZ:
            rows_[q0].eff_x *= rows_[q1].eff_z;
            rows_[q1].eff_x *= rows_[q0].eff_z;
            break;
        case CliffordGate::SWAP:
            std::swap(rows_[q0], rows_[q1]);
            break;
    }
}

PauliString PauliFrame::lookup(const PauliString& p) const {
    if (p.num_qubits() != rows_.size()) {
        throw std::invalid_argument("lookup: Pauli has " + std::to_string(p.num_qubits()) +
                                    " qubits, frame has " + std::to_string(rows_.size()));
    }
    if (!p.is_hermitian()) throw std::invalid_argument("lookup: non-Hermitian Pauli");
    PauliString out(rows_.size());
    out.set_phase_exp(p.phase_exp());
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        const bool x = p.x_bit(j);
        const bool z = p.z_bit(j);
        if (z) out *= rows_[j].eff_z;
        if (x) out *= rows_[j].eff_x;
        // Y = -i Z X
        if (x && z) out.multiply_phase(3);
    }
    return out;
}

void PauliFrame::conjugate_rotation(const PauliString& axis, int quarter_turns) {
    if (axis.num_qubits() != rows_.size()) throw std::invalid_argument("rotation axis size mismatch");
    if (!axis.is_hermitian()) throw std::invalid_argument("rotation axis must be Hermitian");
    const int turns = ((quarter_turns % 4) + 4) % 4;
    if (turns == 0) return;
    // For P anticommuting with Q: V P V^dag = V^2 P = exp(-i turns pi/2 Q) P.
    auto conj = [&](PauliString& e) {
        if (!anticommutes(e, axis)) return;
        if (turns == 2) {
            e.negate();
            return;
        }
        PauliString t = axis * e;
        t.multiply_phase(turns == 1 ? 3 : 1);
        e = std::move(t);
    };
    for (auto& r : rows_) {
        conj(r.eff_z);
        conj(r.eff_x);
    }
}

void PauliFrame::conjugate_single_qubit(CliffordGate gate, std::size_t q) {
    check_qubit(q);
    auto conj = [&](PauliString& e) {
        switch (gate) {
            case CliffordGate::H:
                e.conjugate_h(q);
                break;
            case CliffordGate::S:
                e.conjugate_s(q);
                break;
            case CliffordGate::Sdg:
                e.conjugate_sdg(q);
                break;
            case CliffordGate::X:
                e.conjugate_pauli(q, PauliLetter::X);
                break;
            case CliffordGate::Y:
                e.conjugate_pauli(q, PauliLetter::Y);
                break;
            case CliffordGate::Z:
                e.conjugate_pauli(q, PauliLetter::Z);
                break;
            default:
                throw std::invalid_argument("conjugate_single_qubit: two-qubit gate");
        }
    };
    for (auto& r : rows_) {
        conj(r.eff_z);
        conj(r.eff_x);
    }
}

void PauliFrame::conjugate_swap(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    for (auto& r : rows_) {
        r.eff_z.swap_qubits(a, b);
        r.eff_x.swap_qubits(a, b);
    }
}

std::string PauliFrame::dump() const {
    std::string s;
    for (const auto& r : rows_) {
        s += "effZ=" + r.eff_z.to_signed_dense() + "  effX=" + r.eff_x.to_signed_dense() + "\n";
    }
    return s;
}

namespace {

bool only_on(const PauliString& p, std::size_t q) {
    return p.letter(q) != PauliLetter::I && weight(p) == 1;
}

PauliLetter third_letter(PauliLetter a, PauliLetter b) {
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
        if (l != a && l != b) return l;
    }
    throw std::logic_error("third_letter: letters not distinct");
}

// Q = i * sigma_q * e, with sigma anticommuting with e on q.
PauliString transvection_axis(const PauliString& e, std::size_t q, PauliLetter sigma) {
    PauliString axis = PauliString::single(e.num_qubits(), q, sigma) * e;
    axis.multiply_phase(1);
    return axis;
}

}  // namespace

std::vector<RotationStep> invert_to_rotations(const PauliFrame& f) {
    if (!f.validate()) throw std::logic_error("invert_to_rotations: invalid Pauli frame");
    const std::size_t n = f.num_qubits();
    PauliFrame work = f;
    std::vector<RotationStep> steps;
    auto emit = [&](RotationStep s) {
        apply_step_image(work, s);
        steps.push_back(std::move(s));
    };

    // Reduce each qubit onto one row with single-qubit support.
    std::vector<std::size_t> row_qubit(n, PauliFrame::kNoQubit);
    std::vector<bool> reduced(n, false);
    for (std::size_t q = 0; q < n; ++q) {
        std::size_t i = 0;
        while (i < n && (reduced[i] || work.row(i).eff_z.letter(q) == PauliLetter::I)) ++i;
        if (i == n) throw std::logic_error("invert_to_rotations: no row supported on qubit");

        PauliLetter z_letter = work.row(i).eff_z.letter(q);
        if (!only_on(work.row(i).eff_z, q)) {
            const PauliLetter target = z_letter == PauliLetter::Z ? PauliLetter::X : PauliLetter::Z;
            emit(PauliRotationStep{transvection_axis(work.row(i).eff_z, q, target),
                                   std::numbers::pi / 2});
            z_letter = target;
        }
        const PauliString& ex = work.row(i).eff_x;
        if (!only_on(ex, q)) {
            const PauliLetter target = third_letter(z_letter, ex.letter(q));
            emit(PauliRotationStep{transvection_axis(ex, q, target), std::numbers::pi / 2});
        }
        reduced[i] = true;
        row_qubit[i] = q;
    }

    // Normalise each row to (+Z_q, +X_q).
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t q = row_qubit[i];
        for (int guard = 0; guard < 3; ++guard) {
            const PauliLetter a = work.row(i).eff_z.letter(q);
            const PauliLetter b = work.row(i).eff_x.letter(q);
            if (a == PauliLetter::Z && b == PauliLetter::X) break;
            CliffordGate g = CliffordGate::Sdg;
            if (a == PauliLetter::X) g = CliffordGate::H;
            emit(SingleQubitCliffordStep{q, g});
        }
        if (work.row(i).eff_z.sign() < 0) emit(SingleQubitCliffordStep{q, CliffordGate::X});
        if (work.row(i).eff_x.sign() < 0) emit(SingleQubitCliffordStep{q, CliffordGate::Z});
    }

    // Relabel qubits so row i lives on qubit i.
    for (std::size_t i = 0; i < n; ++i) {
        while (row_qubit[i] != i) {
            const std::size_t q = row_qubit[i];
            emit(QubitSwapStep{i, q});
            for (std::size_t r = 0; r < n; ++r) {
                if (row_qubit[r] == i) {
                    row_qubit[r] = q;
                    break;
                }
            }
            row_qubit[i] = i;
        }
    }

    if (!work.is_origin()) throw std::logic_error("invert_to_rotations: did not reach origin");
    return steps;
}

std::vector<RotationStep> inverse_steps(std::span<const RotationStep> steps) {
    std::vector<RotationStep> out;
    out.reserve(steps.size());
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (const auto* rot = std::get_if<PauliRotationStep>(&*it)) {
            out.emplace_back(PauliRotationStep{rot->axis, -rot->angle});
        } else if (const auto* c = std::get_if<SingleQubitCliffordStep>(&*it)) {
            CliffordGate g = c->gate;
            if (g == CliffordGate::S) {
                g = CliffordGate::Sdg;
            } else if (g == CliffordGate::Sdg) {
                g = CliffordGate::S;
            }
            out.emplace_back(SingleQubitCliffordStep{c->qubit, g});
        } else {
            out.push_back(*it);
        }
    }
    return out;
}

void apply_step_image(PauliFrame& f, const RotationStep& step) {
    if (const auto* rot = std::get_if<PauliRotationStep>(&step)) {
        const double turns = rot->angle / (std::numbers::pi / 2);
        const double rounded = std::round(turns);
        if (std::abs(turns - rounded) > 1e-9) {
            throw std::invalid_argument("apply_step_image: rotation angle is not Clifford");
        }
        f.conjugate_rotation(rot->axis, static_cast<int>(rounded));
    } else if (const auto* sw = std::get_if<QubitSwapStep>(&step)) {
        f.conjugate_swap(sw->a, sw->b);
    } else {
        const auto& c = std::get<SingleQubitCliffordStep>(step);
        f.conjugate_single_qubit(c.gate, c.qubit);
    }
}

std::size_t count_pauli_rotations(std::span<const RotationStep> steps) {
    std::size_t count = 0;
    for (const auto& s : steps) count += std::holds_alternative<PauliRotationStep>(s) ? 1 : 0;
    return count;
}

}  // namespace hybridsim
