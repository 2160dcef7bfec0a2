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
#include <random>

#include "hybridsim/circuit.hpp"
#include "hybridsim/pauli_string.hpp"

namespace testing_support {

using hybridsim::Circuit;
using hybridsim::Gate;
using hybridsim::GateTag;
using hybridsim::PauliLetter;
using hybridsim::PauliString;

inline PauliString random_pauli(std::size_t n, std::mt19937_64& rng, bool random_sign = false) {
    std::uniform_int_distribution<int> letter(0, 3);
    PauliString p(n);
    for (std::size_t q = 0; q < n; ++q) p.set_letter(q, static_cast<PauliLetter>(letter(rng)));
    if (random_sign && (rng() & 1)) p.negate();
    return p;
}

inline PauliString random_nonidentity_pauli(std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        auto p = random_pauli(n, rng);
        if (!p.is_identity()) return p;
    }
}

inline std::size_t pick(std::size_t n, std::mt19937_64& rng) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline Gate random_clifford_gate(std::size_t n, std::mt19937_64& rng) {
    static constexpr GateTag one[] = {GateTag::H, GateTag::S, GateTag::Sdg, GateTag::X, GateTag::Y, GateTag::Z};
    static constexpr GateTag two[] = {GateTag::CX, GateTag::CZ, GateTag::SWAP};
    if (n >= 2 && rng() % 3 == 0) {
        const std::size_t a = pick(n, rng);
        std::size_t b = pick(n - 1, rng);
        if (b >= a) ++b;
        return Gate::pair(two[rng() % 3], a, b);
    }
    return Gate::single(one[rng() % 6], pick(n, rng));
}

inline Gate random_rotation_gate(std::size_t n, std::mt19937_64& rng) {
    static constexpr GateTag rot[] = {GateTag::RX, GateTag::RY, GateTag::RZ};
    std::uniform_real_distribution<double> angle(-3.2, 3.2);
    return Gate::rotation(rot[rng() % 3], pick(n, rng), angle(rng));
}

inline Circuit random_clifford_circuit(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
    Circuit c(n);
    for (std::size_t i = 0; i < gates; ++i) c.add(random_clifford_gate(n, rng));
    return c;
}

/// Unitary circuit: Cliffords and rotations only.
inline Circuit random_unitary_circuit(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
    Circuit c(n);
    for (std::size_t i = 0; i < gates; ++i) {
        c.add(rng() % 3 == 0 ? random_rotation_gate(n, rng) : random_clifford_gate(n, rng));
    }
    return c;
}

/// Cliffords, rotations, mid-circuit MeasZ and PrepZ.
inline Circuit random_mixed_circuit(std::size_t n, std::size_t gates, std::mt19937_64& rng) {
    Circuit c(n);
    for (std::size_t i = 0; i < gates; ++i) {
        const auto r = rng() % 20;
        if (r < 11) {
            c.add(random_clifford_gate(n, rng));
        } else if (r < 17) {
            c.add(random_rotation_gate(n, rng));
        } else if (r < 19) {
            c.add(Gate::meas_z(pick(n, rng)));
        } else {
            c.add(Gate::prep_z(pick(n, rng)));
        }
    }
    return c;
}

}  // namespace testing_support
