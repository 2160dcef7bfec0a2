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

#include "hybridsim/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <iomanip>
#include <istream>
#include <new>
#include <numeric>
#include <ostream>
#include <sstream>

namespace hybridsim {

namespace {

void write_u64(std::ostream& os, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>(v >> (8 * i));
    os.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t read_u64(std::istream& is) {
    unsigned char buf[8];
    if (!is.read(reinterpret_cast<char*>(buf), 8)) throw std::runtime_error("truncated state dump");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    return v;
}

}  // namespace

StateVector::StateVector(std::size_t num_qubits, ExecutionMode mode) : num_qubits_(num_qubits), mode_(mode) {
    if (num_qubits == 0) throw std::invalid_argument("state vector needs at least one qubit");
    if (num_qubits > kMaxQubits) {
        throw ResourceError("state vector on " + std::to_string(num_qubits) + " qubits exceeds the " +
                            std::to_string(kMaxQubits) + "-qubit limit");
    }
    try {
        amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    } catch (const std::bad_alloc&) {
        throw ResourceError("cannot allocate state vector on " + std::to_string(num_qubits) + " qubits");
    }
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps, ExecutionMode mode) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2");
    }
    StateVector s;
    s.num_qubits_ = static_cast<std::size_t>(std::countr_zero(amps.size()));
    s.amps_ = std::move(amps);
    s.mode_ = mode;
    return s;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(num_qubits_) + " qubits");
    }
}

kernels::PauliAxis StateVector::axis_for(const PauliString& p) const {
    if (p.num_qubits() != num_qubits_) {
        throw std::invalid_argument("Pauli on " + std::to_string(p.num_qubits()) +
                                    " qubits applied to state on " + std::to_string(num_qubits_));
    }
    return kernels::PauliAxis::from(p);
}

Amplitude StateVector::amplitude(std::uint64_t k) const {
    if (k >= amps_.size()) throw std::out_of_range("basis index out of range");
    return amps_[k];
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(), [](const Amplitude& a) { return std::norm(a); });
    return p;
}

double StateVector::norm_squared() const {
    return mode_ == ExecutionMode::Serial ? kernels::serial::norm_squared(amps_)
                                          : kernels::parallel::norm_squared(amps_);
}

void StateVector::apply_pauli(const PauliString& p) {
    const auto axis = axis_for(p);
    if (mode_ == ExecutionMode::Serial) {
        kernels::serial::apply_pauli(amps_, axis);
    } else {
        kernels::parallel::apply_pauli(amps_, axis);
    }
}

void StateVector::apply_multiqubit_rotation(const PauliString& p, double theta) {
    if (!p.is_hermitian()) throw std::invalid_argument("rotation axis must be Hermitian");
    const auto axis = axis_for(p);
    if (mode_ == ExecutionMode::Serial) {
        kernels::serial::apply_pauli_rotation(amps_, axis, theta);
    } else {
        kernels::parallel::apply_pauli_rotation(amps_, axis, theta);
    }
}

double StateVector::expectation_pauli(const PauliString& p) const {
    if (!p.is_hermitian()) throw std::invalid_argument("expectation of a non-Hermitian Pauli");
    const auto axis = axis_for(p);
    const Amplitude e = mode_ == ExecutionMode::Serial ? kernels::serial::expectation(amps_, axis)
                                                       : kernels::parallel::expectation(amps_, axis);
    if (std::abs(e.imag()) > 1e-8) {
        throw std::logic_error("expectation of a Hermitian Pauli has imaginary part " +
                               std::to_string(e.imag()));
    }
    return e.real();
}

int StateVector::measure_pauli(const PauliString& p, Rng& rng) {
    const double expval = expectation_pauli(p);
    double p_plus = std::clamp((1.0 + expval) / 2.0, 0.0, 1.0);
    // Branches below the norm tolerance are numerical residue, never sampled.
    if (p_plus < norm_tolerance_) p_plus = 0.0;
    if (1.0 - p_plus < norm_tolerance_) p_plus = 1.0;
    const int outcome = rng.uniform() < p_plus ? +1 : -1;
    const auto axis = axis_for(p);
    if (mode_ == ExecutionMode::Serial) {
        kernels::serial::project(amps_, axis, outcome);
    } else {
        kernels::parallel::project(amps_, axis, outcome);
    }
    const double n2 = norm_squared();
    if (n2 < norm_tolerance_) {
        throw std::logic_error("measurement collapsed onto a zero-probability branch");
    }
    const double factor = 1.0 / std::sqrt(n2);
    if (mode_ == ExecutionMode::Serial) {
        kernels::serial::scale(amps_, factor);
    } else {
        kernels::parallel::scale(amps_, factor);
    }
    return outcome;
}

void StateVector::prep_pauli(const PauliString& stab, const PauliString& destab, Rng& rng) {
    if (!stab.is_hermitian() || !destab.is_hermitian()) {
        throw std::invalid_argument("prep_pauli: operators must be Hermitian");
    }
    if (!anticommutes(stab, destab)) {
        throw std::invalid_argument("prep_pauli: stabilizer and destabilizer must anticommute");
    }
    if (measure_pauli(stab, rng) < 0) apply_pauli(destab);
}

kernels::Mat2 dense_gate_matrix(DenseGate gate, double angle) {
    using kernels::Mat2;
    const double r = 1.0 / std::sqrt(2.0);
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    const Amplitude i{0.0, 1.0};
    switch (gate) {
        case DenseGate::H:
            return Mat2{r, r, r, -r};
        case DenseGate::S:
            return Mat2{1.0, 0.0, 0.0, i};
        case DenseGate::Sdg:
            return Mat2{1.0, 0.0, 0.0, -i};
        case DenseGate::X:
            return Mat2{0.0, 1.0, 1.0, 0.0};
        case DenseGate::Y:
            return Mat2{0.0, -i, i, 0.0};
        case DenseGate::Z:
            return Mat2{1.0, 0.0, 0.0, -1.0};
        case DenseGate::RX:
            return Mat2{c, -i * s, -i * s, c};
        case DenseGate::RY:
            return Mat2{c, -s, s, c};
        case DenseGate::RZ:
            return Mat2{std::polar(1.0, -angle / 2), 0.0, 0.0, std::polar(1.0, angle / 2)};
        default:
            throw std::invalid_argument("dense_gate_matrix: two-qubit gate has no 2x2 matrix");
    }
}

bool is_two_qubit(DenseGate gate) {
    return gate == DenseGate::CX || gate == DenseGate::CZ || gate == DenseGate::SWAP;
}

void StateVector::apply_matrix_1q(std::size_t q, const kernels::Mat2& m) {
    check_qubit(q);
    if (mode_ == ExecutionMode::Serial) {
        kernels::serial::apply_1q(amps_, static_cast<unsigned>(q), m);
    } else {
        kernels::parallel::apply_1q(amps_, static_cast<unsigned>(q), m);
    }
}

void StateVector::apply_dense_gate(DenseGate gate, std::size_t q0, std::size_t q1, double angle) {
    check_qubit(q0);
    if (!is_two_qubit(gate)) {
        apply_matrix_1q(q0, dense_gate_matrix(gate, angle));
        return;
    }
    check_qubit(q1);
    if (q0 == q1) throw std::invalid_argument("two-qubit gate on a repeated qubit");
    const auto a = static_cast<unsigned>(q0), b = static_cast<unsigned>(q1);
    const bool serial = mode_ == ExecutionMode::Serial;
    switch (gate) {
        case DenseGate::CX:
            serial ? kernels::serial::apply_cx(amps_, a, b) : kernels::parallel::apply_cx(amps_, a, b);
            break;
        case DenseGate::CZ:
            serial ? kernels::serial::apply_cz(amps_, a, b) : kernels::parallel::apply_cz(amps_, a, b);
            break;
        default:
            serial ? kernels::serial::apply_swap(amps_, a, b) : kernels::parallel::apply_swap(amps_, a, b);
            break;
    }
}

void StateVector::write_binary(std::ostream& os) const {
    write_u64(os, num_qubits_);
    for (const auto& a : amps_) {
        write_u64(os, std::bit_cast<std::uint64_t>(a.real()));
        write_u64(os, std::bit_cast<std::uint64_t>(a.imag()));
    }
}

StateVector StateVector::read_binary(std::istream& is) {
    const std::uint64_t n = read_u64(is);
    if (n == 0 || n > kMaxQubits) throw std::runtime_error("state dump has invalid qubit count");
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto& a : amps) {
        const double re = std::bit_cast<double>(read_u64(is));
        const double im = std::bit_cast<double>(read_u64(is));
        a = {re, im};
    }
    return from_amplitudes(std::move(amps));
}

std::string StateVector::top_amplitudes(std::size_t m) const {
    std::vector<std::uint64_t> idx(amps_.size());
    std::iota(idx.begin(), idx.end(), std::uint64_t{0});
    m = std::min(m, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(m), idx.end(),
                      [&](std::uint64_t a, std::uint64_t b) {
                          const double na = std::norm(amps_[a]), nb = std::norm(amps_[b]);
                          return na != nb ? na > nb : a < b;
                      });
    std::ostringstream os;
    os << std::setprecision(10);
    for (std::size_t i = 0; i < m; ++i) {
        const auto k = idx[i];
        os << k << "  " << amps_[k].real() << "  " << amps_[k].imag() << "  " << std::norm(amps_[k]) << '\n';
    }
    return os.str();
}

}  // namespace hybridsim
