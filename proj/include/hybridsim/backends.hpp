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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridsim/circuit.hpp"
#include "hybridsim/pauli_frame.hpp"
#include "hybridsim/rng.hpp"
#include "hybridsim/state_vector.hpp"

namespace hybridsim {

enum class BackendKind { Baseline, Hybrid };

const char* backend_name(BackendKind b);
/// Accepts "baseline" and "hybrid"; anything else is std::nullopt.
std::optional<BackendKind> backend_from_name(const std::string& name);

/// Wall-clock seconds spent per gate class during a hybrid run.
struct HybridTiming {
    double frame_s = 0.0;
    double rotation_s = 0.0;
    double measurement_s = 0.0;
    double flush_s = 0.0;
};

/// Frame plus the untransformed state phi; the physical state is U|phi>
/// where U is the Clifford held by the frame.
struct HybridState {
    PauliFrame frame;
    StateVector phi;
    std::vector<std::uint8_t> measurement_record;
    HybridTiming timing;

    explicit HybridState(std::size_t num_qubits, ExecutionMode mode = ExecutionMode::Parallel)
        : frame(PauliFrame::origin(num_qubits)), phi(num_qubits, mode) {}
};

struct RunReport {
    BackendKind backend = BackendKind::Baseline;
    std::size_t n_qubits = 0;
    GateCounts counts;
    double t_compile_s = 0.0;
    double t_run_s = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::uint8_t> measurement_record;

    /// Fields: backend, n_qubits, gates_total, gates_clifford,
    /// gates_rotation, t_compile_s, t_run_s, seed.
    std::string to_json() const;
};

/// Outcome +1 is recorded as bit 0. MeasZ gates with a result slot write
/// there (growing the record as needed); others append.
void record_outcome(std::vector<std::uint8_t>& record, const Gate& g, int outcome);

/// Gate-by-gate execution on a dense state vector.
void apply_baseline(StateVector& psi, const Gate& g, Rng& rng, std::vector<std::uint8_t>& record);
std::pair<StateVector, RunReport> run_baseline(const Circuit& c, Rng& rng,
                                               ExecutionMode mode = ExecutionMode::Parallel);

/// Cliffords update only the frame; rotations, measurements and
/// preparations act on phi through frame lookups.
void apply_hybrid(HybridState& hs, const Gate& g, Rng& rng);
std::pair<HybridState, RunReport> run_hybrid(const Circuit& c, Rng& rng,
                                             ExecutionMode mode = ExecutionMode::Parallel);

/// <psi|P|psi> for the represented state.
double expectation(const HybridState& hs, const PauliString& p);

/// Applies the frame's Clifford to phi and resets the frame, so that phi
/// becomes the physical state up to a global phase.
void flush_to_origin(HybridState& hs);

}  // namespace hybridsim
