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

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>
#include <vector>

#include "hybridsim/kernels.hpp"

namespace hybridsim::kernels::serial {

namespace {

constexpr Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// P|k> = phase(k) |k ^ x>
Amplitude phase_of(const PauliAxis& p, std::uint64_t k) {
    const unsigned e = p.base_phase + 2u * static_cast<unsigned>(std::popcount(p.z_mask & k) & 1);
    return kIPow[e & 3u];
}

std::vector<Amplitude> apply_pauli_copy(std::span<const Amplitude> amps, const PauliAxis& p) {
    std::vector<Amplitude> out(amps.size());
    for (std::uint64_t k = 0; k < amps.size(); ++k) out[k ^ p.x_mask] = phase_of(p, k) * amps[k];
    return out;
}

}  // namespace

void apply_1q(std::span<Amplitude> amps, unsigned target, const Mat2& m) {
    const std::uint64_t bit = std::uint64_t{1} << target;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if (k & bit) continue;
        const Amplitude v0 = amps[k];
        const Amplitude v1 = amps[k | bit];
        amps[k] = m[0] * v0 + m[1] * v1;
        amps[k | bit] = m[2] * v0 + m[3] * v1;
    }
}

void apply_cx(std::span<Amplitude> amps, unsigned control, unsigned target) {
    const std::uint64_t cbit = std::uint64_t{1} << control;
    const std::uint64_t tbit = std::uint64_t{1} << target;
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & cbit) && !(k & tbit)) std::swap(amps[k], amps[k | tbit]);
    }
}

void apply_cz(std::span<Amplitude> amps, unsigned a, unsigned b) {
    const std::uint64_t both = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        if ((k & both) == both) amps[k] = -amps[k];
    }
}

void apply_swap(std::span<Amplitude> amps, unsigned a, unsigned b) {
    std::vector<Amplitude> out(amps.size());
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        const std::uint64_t ba = (k >> a) & 1u, bb = (k >> b) & 1u;
        std::uint64_t j = k & ~((std::uint64_t{1} << a) | (std::uint64_t{1} << b));
        j |= (ba << b) | (bb << a);
        out[j] = amps[k];
    }
    std::copy(out.begin(), out.end(), amps.begin());
}

void apply_pauli(std::span<Amplitude> amps, const PauliAxis& p) {
    const auto out = apply_pauli_copy(amps, p);
    std::copy(out.begin(), out.end(), amps.begin());
}

void apply_pauli_rotation(std::span<Amplitude> amps, const PauliAxis& p, double theta) {
    // exp(-i theta/2 P) = cos(theta/2) I - i sin(theta/2) P, valid since P^2 = I.
    const auto pa = apply_pauli_copy(amps, p);
    const double c = std::cos(theta / 2);
    const Amplitude minus_i_s{0.0, -std::sin(theta / 2)};
    for (std::uint64_t k = 0; k < amps.size(); ++k) amps[k] = c * amps[k] + minus_i_s * pa[k];
}

Amplitude expectation(std::span<const Amplitude> amps, const PauliAxis& p) {
    const auto pa = apply_pauli_copy(amps, p);
    Amplitude acc = 0;
    for (std::uint64_t k = 0; k < amps.size(); ++k) acc += std::conj(amps[k]) * pa[k];
    return acc;
}

void project(std::span<Amplitude> amps, const PauliAxis& p, int sign) {
    const auto pa = apply_pauli_copy(amps, p);
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
        amps[k] = 0.5 * (amps[k] + static_cast<double>(sign) * pa[k]);
    }
}

double norm_squared(std::span<const Amplitude> amps) {
    double acc = 0;
    for (const auto& v : amps) acc += std::norm(v);
    return acc;
}

void scale(std::span<Amplitude> amps, double factor) {
    for (auto& v : amps) v *= factor;
}

}  // namespace hybridsim::kernels::serial
