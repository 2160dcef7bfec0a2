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

#include "hybridsim/backends.hpp"

#include <chrono>
#include <stdexcept>
#include <variant>

#include "json.hpp"

namespace hybridsim {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

DenseGate dense_for(GateTag tag) {
    switch (tag) {
        case GateTag::H: return DenseGate::H;
        case GateTag::S: return DenseGate::S;
        case GateTag::Sdg: return DenseGate::Sdg;
        case GateTag::X: return DenseGate::X;
        case GateTag::Y: return DenseGate::Y;
        case GateTag::Z: return DenseGate::Z;
        case GateTag::CX: return DenseGate::CX;
        case GateTag::CZ: return DenseGate::CZ;
        case GateTag::SWAP: return DenseGate::SWAP;
        case GateTag::RX: return DenseGate::RX;
        case GateTag::RY: return DenseGate::RY;
        case GateTag::RZ: return DenseGate::RZ;
        default: throw std::invalid_argument(std::string(gate_tag_name(tag)) + " has no dense kernel");
    }
}

DenseGate dense_for(CliffordGate g) { return dense_for(static_cast<GateTag>(static_cast<int>(g))); }

PauliLetter rotation_letter(GateTag tag) {
    switch (tag) {
        case GateTag::RX: return PauliLetter::X;
        case GateTag::RY: return PauliLetter::Y;
        default: return PauliLetter::Z;
    }
}

}  // namespace

const char* backend_name(BackendKind b) { return b == BackendKind::Baseline ? "baseline" : "hybrid"; }

std::optional<BackendKind> backend_from_name(const std::string& name) {
    if (name == "baseline") return BackendKind::Baseline;
    if (name == "hybrid") return BackendKind::Hybrid;
    return std::nullopt;
}

std::string RunReport::to_json() const {
    const nlohmann::json j = {
        {"backend", backend_name(backend)},
        {"n_qubits", n_qubits},
        {"gates_total", counts.total()},
        {"gates_clifford", counts.clifford},
        {"gates_rotation", counts.rotation},
        {"t_compile_s", t_compile_s},
        {"t_run_s", t_run_s},
        {"seed", seed},
    };
    return j.dump();
}

void record_outcome(std::vector<std::uint8_t>& record, const Gate& g, int outcome) {
    const std::uint8_t bit = outcome > 0 ? 0 : 1;
    if (!g.classical_target) {
        record.push_back(bit);
        return;
    }
    if (*g.classical_target >= record.size()) record.resize(*g.classical_target + 1, 0);
    record[*g.classical_target] = bit;
}

void apply_baseline(StateVector& psi, const Gate& g, Rng& rng, std::vector<std::uint8_t>& record) {
    const std::size_t n = psi.num_qubits();
    switch (g.tag) {
        case GateTag::MeasZ:
            record_outcome(record, g, psi.measure_pauli(PauliString::single(n, g.q0, PauliLetter::Z), rng));
            return;
        case GateTag::PrepZ:
            psi.prep_pauli(PauliString::single(n, g.q0, PauliLetter::Z), PauliString::single(n, g.q0, PauliLetter::X),
                           rng);
            return;
        default:
            psi.apply_dense_gate(dense_for(g.tag), g.q0, is_two_qubit(g.tag) ? g.q1 : 0, g.angle);
            return;
    }
}

std::pair<StateVector, RunReport> run_baseline(const Circuit& c, Rng& rng, ExecutionMode mode) {
    RunReport report;
    report.backend = BackendKind::Baseline;
    report.n_qubits = c.num_qubits();
    report.counts = count_gates(c);
    report.seed = rng.seed();
    StateVector psi(c.num_qubits(), mode);
    const auto start = Clock::now();
    for (const auto& g : c.gates()) apply_baseline(psi, g, rng, report.measurement_record);
    report.t_run_s = seconds_since(start);
    return {std::move(psi), std::move(report)};
}

void apply_hybrid(HybridState& hs, const Gate& g, Rng& rng) {
    const std::size_t n = hs.phi.num_qubits();
    const auto start = Clock::now();
    if (is_clifford(g.tag)) {
        hs.frame.apply_gate_backward(to_clifford_gate(g.tag), g.q0, is_two_qubit(g.tag) ? g.q1 : PauliFrame::kNoQubit);
        hs.timing.frame_s += seconds_since(start);
        return;
    }
    if (is_rotation(g.tag)) {
        // A signed lookup is handled by the kernel: exp(-i t/2 (-P)) is the
        // +P rotation by -t.
        hs.phi.apply_multiqubit_rotation(hs.frame.lookup(PauliString::single(n, g.q0, rotation_letter(g.tag))),
                                         g.angle);
        hs.timing.rotation_s += seconds_since(start);
        return;
    }
    const PauliString z = hs.frame.lookup(PauliString::single(n, g.q0, PauliLetter::Z));
    if (g.tag == GateTag::MeasZ) {
        record_outcome(hs.measurement_record, g, hs.phi.measure_pauli(z, rng));
    } else {
        hs.phi.prep_pauli(z, hs.frame.lookup(PauliString::single(n, g.q0, PauliLetter::X)), rng);
    }
    hs.timing.measurement_s += seconds_since(start);
}

std::pair<HybridState, RunReport> run_hybrid(const Circuit& c, Rng& rng, ExecutionMode mode) {
    RunReport report;
    report.backend = BackendKind::Hybrid;
    report.n_qubits = c.num_qubits();
    report.counts = count_gates(c);
    report.seed = rng.seed();
    HybridState hs(c.num_qubits(), mode);
    const auto start = Clock::now();
    for (const auto& g : c.gates()) apply_hybrid(hs, g, rng);
    report.t_run_s = seconds_since(start);
    report.measurement_record = hs.measurement_record;
    return {std::move(hs), std::move(report)};
}

double expectation(const HybridState& hs, const PauliString& p) {
    if (!p.is_hermitian()) throw std::invalid_argument("expectation of a non-Hermitian Pauli");
    // lookup keeps the sign, and the kernel evaluates signed Paulis directly.
    return hs.phi.expectation_pauli(hs.frame.lookup(p));
}

void flush_to_origin(HybridState& hs) {
    const auto start = Clock::now();
    // Applying the inversion steps in order to phi applies the frame's
    // Clifford U, taking (F, phi) to (origin, U phi).
    for (const auto& step : invert_to_rotations(hs.frame)) {
        if (const auto* r = std::get_if<PauliRotationStep>(&step)) {
            hs.phi.apply_multiqubit_rotation(r->axis, r->angle);
        } else if (const auto* s = std::get_if<QubitSwapStep>(&step)) {
            hs.phi.apply_dense_gate(DenseGate::SWAP, s->a, s->b);
        } else {
            const auto& c = std::get<SingleQubitCliffordStep>(step);
            hs.phi.apply_dense_gate(dense_for(c.gate), c.qubit);
        }
    }
    hs.frame = PauliFrame::origin(hs.phi.num_qubits());
    hs.timing.flush_s += seconds_since(start);
}

}  // namespace hybridsim
