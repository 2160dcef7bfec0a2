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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hybridsim {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter l);
PauliLetter letter_from_char(char c);

/// Signed n-qubit Pauli operator i^phase_exp * (P_{n-1} x ... x P_0).
///
/// Storage is the symplectic pair of bit arrays: qubit j sets bit j of x when
/// its letter is X or Y and bit j of z when its letter is Z or Y. A Y letter
/// carries no hidden phase, so the three letter masks read directly off the
/// bits. Bit arrays are packed into 64-bit words; word 0 holds qubits 0..63.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::size_t num_qubits);

    static PauliString single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter);

    /// Accepts the dense form ("XIZ", optional sign prefix +, -, i, +i, -i;
    /// first character is the highest qubit) or the sparse form ("X0 Z2").
    /// The sparse form needs num_qubits; the dense form checks it if given.
    static PauliString parse(std::string_view text, std::optional<std::size_t> num_qubits = {});

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t num_words() const { return x_.size(); }

    PauliLetter letter(std::size_t qubit) const;
    void set_letter(std::size_t qubit, PauliLetter letter);
    bool x_bit(std::size_t qubit) const;
    bool z_bit(std::size_t qubit) const;

    std::span<const std::uint64_t> x_words() const { return x_; }
    std::span<const std::uint64_t> z_words() const { return z_; }
    // Low words; only meaningful as basis-index masks when num_qubits <= 64.
    std::uint64_t x_mask() const { return x_.empty() ? 0 : x_[0]; }
    std::uint64_t z_mask() const { return z_.empty() ? 0 : z_[0]; }

    unsigned phase_exp() const { return phase_; }
    void set_phase_exp(unsigned e) { phase_ = e & 3u; }
    void negate() { phase_ = (phase_ + 2) & 3u; }
    void multiply_phase(unsigned e) { phase_ = (phase_ + e) & 3u; }

    /// Even phase exponent, i.e. the operator squares to the identity.
    bool is_hermitian() const { return (phase_ & 1u) == 0; }
    /// +1 or -1; only valid for Hermitian strings.
    int sign() const;
    bool is_identity() const;

    /// Letters without the phase, i.e. the +1-signed copy of a Hermitian string.
    PauliString unsigned_copy() const;

    /// In-place right multiplication: *this <- (*this) * rhs with exact phase.
    PauliString& operator*=(const PauliString& rhs);

    /// Entrywise conjugation V P V^dagger by a single-qubit Clifford.
    void conjugate_h(std::size_t q);
    void conjugate_s(std::size_t q);
    void conjugate_sdg(std::size_t q);
    void conjugate_pauli(std::size_t q, PauliLetter p);
    /// Relabels qubits a and b.
    void swap_qubits(std::size_t a, std::size_t b);

    /// Letters only.
    std::string to_dense() const;
    /// Letters with a sign prefix: "+", "-", "+i" or "-i".
    std::string to_signed_dense() const;
    std::string to_sparse() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;

private:
    std::size_t num_qubits_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    unsigned phase_ = 0;
};

PauliString operator*(PauliString lhs, const PauliString& rhs);

struct PauliMasks {
    std::vector<std::uint64_t> x;
    std::vector<std::uint64_t> y;
    std::vector<std::uint64_t> z;
};

/// 1 when p1 and p2 anticommute, 0 when they commute.
int anticommutation_flag(const PauliString& p1, const PauliString& p2);
inline bool anticommutes(const PauliString& p1, const PauliString& p2) {
    return anticommutation_flag(p1, p2) != 0;
}

PauliString multiply(const PauliString& p1, const PauliString& p2);
PauliMasks masks(const PauliString& p);
/// Number of non-identity letters.
std::size_t weight(const PauliString& p);

/// Basis index reached by P|k>: k XOR m_X XOR m_Y.
std::uint64_t flip_target(const PauliString& p, std::uint64_t k);
/// Exponent e with P|k> = i^e |flip_target(p, k)>.
unsigned pauli_phase(const PauliString& p, std::uint64_t k);

}  // namespace hybridsim
