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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hybridsim/kernels.hpp"
#include "hybridsim/pauli_string.hpp"
#include "hybridsim/rng.hpp"

namespace hybridsim {

using Amplitude = std::complex<double>;

/// Raised when a requested state does not fit in memory.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ExecutionMode { Parallel, Serial };

enum class DenseGate { H, S, Sdg, X, Y, Z, CX, CZ, SWAP, RX, RY, RZ };

/// 2^n amplitudes; bit j of the index is qubit j.
class StateVector {
public:
    static constexpr double kDefaultNormTolerance = 1e-10;
    static constexpr std::size_t kMaxQubits = 40;

    /// |0...0>.
    explicit StateVector(std::size_t num_qubits, ExecutionMode mode = ExecutionMode::Parallel);
    static StateVector init_zero(std::size_t num_qubits, ExecutionMode mode = ExecutionMode::Parallel) {
        return StateVector(num_qubits, mode);
    }
    /// Takes ownership of amplitudes; size must be a power of two.
    static StateVector from_amplitudes(std::vector<Amplitude> amps,
                                       ExecutionMode mode = ExecutionMode::Parallel);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t size() const { return amps_.size(); }
    ExecutionMode mode() const { return mode_; }
    void set_mode(ExecutionMode m) { mode_ = m; }
    double norm_tolerance() const { return norm_tolerance_; }
    void set_norm_tolerance(double t) { norm_tolerance_ = t; }

    std::span<const Amplitude> amplitudes() const { return amps_; }
    std::span<Amplitude> mutable_amplitudes() { return amps_; }

    Amplitude amplitude(std::uint64_t k) const;
    std::vector<double> probabilities() const;
    double norm_squared() const;

    void apply_pauli(const PauliString& p);
    /// exp(-i theta/2 P) for Hermitian P; a -P axis is the +P rotation by -theta.
    void apply_multiqubit_rotation(const PauliString& p, double theta);
    double expectation_pauli(const PauliString& p) const;
    /// Samples +1 with probability (1 + <P>)/2 and collapses onto that eigenspace.
    int measure_pauli(const PauliString& p, Rng& rng);
    /// Moves the state into the +1 eigenspace of stab, using destab
    /// (anticommuting with stab) to flip a -1 outcome.
    void prep_pauli(const PauliString& stab, const PauliString& destab, Rng& rng);

    void apply_dense_gate(DenseGate gate, std::size_t q0, std::size_t q1 = 0, double angle = 0.0);
    void apply_matrix_1q(std::size_t q, const kernels::Mat2& m);

    /// Little-endian u64 qubit count, then (re, im) doubles per amplitude.
    void write_binary(std::ostream& os) const;
    static StateVector read_binary(std::istream& is);
    /// Largest-magnitude m amplitudes, one `index  re  im  prob` per line.
    std::string top_amplitudes(std::size_t m) const;

private:
    StateVector() = default;
    void check_qubit(std::size_t q) const;
    kernels::PauliAxis axis_for(const PauliString& p) const;

    std::size_t num_qubits_ = 0;
    std::vector<Amplitude> amps_;
    ExecutionMode mode_ = ExecutionMode::Parallel;
    double norm_tolerance_ = kDefaultNormTolerance;
};

kernels::Mat2 dense_gate_matrix(DenseGate gate, double angle = 0.0);
bool is_two_qubit(DenseGate gate);

}  // namespace hybridsim
