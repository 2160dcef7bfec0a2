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

#include <array>
#include <complex>
#include <cstdint>
#include <span>

#include "hybridsim/pauli_string.hpp"

// Amplitude kernels. `parallel` holds the in-place pair kernels used by the
// simulators (OpenMP when available). `serial` is a deliberately plain
// reference kept for differential testing and benchmarking; it favours
// obviousness over speed and may allocate.
namespace hybridsim::kernels {

using Amplitude = std::complex<double>;
using Mat2 = std::array<Amplitude, 4>;  // row-major

/// A Pauli string reduced to what the kernels need:
/// P|k> = i^{base_phase + 2 * parity(z_mask & k)} |k ^ x_mask>.
struct PauliAxis {
    std::uint64_t x_mask = 0;
    std::uint64_t z_mask = 0;
    unsigned base_phase = 0;

    static PauliAxis from(const PauliString& p);
};

/// Inserts a zero at bit position `bit` of i.
inline std::uint64_t insert_zero_bit(std::uint64_t i, unsigned bit) {
    const std::uint64_t low = (std::uint64_t{1} << bit) - 1;
    return ((i & ~low) << 1) | (i & low);
}

/// Highest set bit of a non-zero mask.
unsigned top_bit(std::uint64_t mask);

int max_threads();
void set_num_threads(int n);

namespace parallel {

void apply_1q(std::span<Amplitude> amps, unsigned target, const Mat2& m);
void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target);
void apply_cz(std::span<Amplitude> amps, unsigned a, unsigned b);
void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b);
void apply_pauli(std::span<Amplitude> amps, const PauliAxis& p);
/// exp(-i theta/2 P); one update per amplitude pair, cost independent of weight.
void apply_pauli_rotation(std::span<Amplitude> amps, const PauliAxis& p, double theta);
/// <phi|P|phi>, complex so callers can check the imaginary residue.
Amplitude expectation(std::span<const Amplitude> amps, const PauliAxis& p);
/// amps <- (amps + sign * P amps) / 2
void project(std::span<Amplitude> amps, const PauliAxis& p, int sign);
double norm_squared(std::span<const Amplitude> amps);
void scale(std::span<Amplitude> amps, double factor);

}  // namespace parallel

namespace serial {

void apply_1q(std::span<Amplitude> amps, unsigned target, const Mat2& m);
void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target);
void apply_cz(std::span<Amplitude> amps, unsigned a, unsigned b);
void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b);
void apply_pauli(std::span<Amplitude> amps, const PauliAxis& p);
void apply_pauli_rotation(std::span<Amplitude> amps, const PauliAxis& p, double theta);
Amplitude expectation(std::span<const Amplitude> amps, const PauliAxis& p);
void project(std::span<Amplitude> amps, const PauliAxis& p, int sign);
double norm_squared(std::span<const Amplitude> amps);
void scale(std::span<Amplitude> amps, double factor);

}  // namespace serial

}  // namespace hybridsim::kernels
