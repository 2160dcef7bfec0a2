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

#include "hybridsim/pauli_string.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace hybridsim {

namespace {

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void check_sizes(const PauliString& a, const PauliString& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("Pauli size mismatch: " + std::to_string(a.num_qubits()) +
                                    " vs " + std::to_string(b.num_qubits()));
    }
}

void check_basis_index(const PauliString& p, std::uint64_t k) {
    if (p.num_qubits() < 64 && (k >> p.num_qubits()) != 0) {
        throw std::out_of_range("basis index " + std::to_string(k) + " out of range for " +
                                std::to_string(p.num_qubits()) + " qubits");
    }
}

}  // namespace

char letter_char(PauliLetter l) {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    return kChars[static_cast<int>(l)];
}

PauliLetter letter_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
        case 'I':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
    }
}

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), x_(words_for(num_qubits), 0), z_(words_for(num_qubits), 0) {}

PauliString PauliString::single(std::size_t num_qubits, std::size_t qubit, PauliLetter letter) {
    PauliString p(num_qubits);
    p.set_letter(qubit, letter);
    return p;
}

PauliLetter PauliString::letter(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    const bool x = x_bit(qubit);
    const bool z = z_bit(qubit);
    if (x) return z ? PauliLetter::Y : PauliLetter::X;
    return z ? PauliLetter::Z : PauliLetter::I;
}

void PauliString::set_letter(std::size_t qubit, PauliLetter letter) {
    if (qubit >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << (qubit % 64);
    auto& xw = x_[qubit / 64];
    auto& zw = z_[qubit / 64];
    xw &= ~bit;
    zw &= ~bit;
    if (letter == PauliLetter::X || letter == PauliLetter::Y) xw |= bit;
    if (letter == PauliLetter::Z || letter == PauliLetter::Y) zw |= bit;
}

bool PauliString::x_bit(std::size_t qubit) const {
    return ((x_[qubit / 64] >> (qubit % 64)) & 1u) != 0;
}

bool PauliString::z_bit(std::size_t qubit) const {
    return ((z_[qubit / 64] >> (qubit % 64)) & 1u) != 0;
}

int PauliString::sign() const {
    if (!is_hermitian()) throw std::logic_error("sign() of a non-Hermitian Pauli string");
    return phase_ == 0 ? 1 : -1;
}

bool PauliString::is_identity() const {
    for (std::size_t w = 0; w < x_.size(); ++w) {
        if (x_[w] != 0 || z_[w] != 0) return false;
    }
    return true;
}

PauliString PauliString::unsigned_copy() const {
    PauliString p = *this;
    p.phase_ = 0;
    return p;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
    check_sizes(*this, rhs);
    // Write each letter as i^{xz} X^x Z^z, commute Z^z1 past X^x2, then
    // convert the product back to letter-exact form.
    int e = static_cast<int>(phase_) + static_cast<int>(rhs.phase_);
    for (std::size_t w = 0; w < x_.size(); ++w) {
        const std::uint64_t x1 = x_[w], z1 = z_[w];
        const std::uint64_t x2 = rhs.x_[w], z2 = rhs.z_[w];
        const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
        e += std::popcount(x1 & z1) + std::popcount(x2 & z2) - std::popcount(x3 & z3) +
             2 * std::popcount(z1 & x2);
        x_[w] = x3;
        z_[w] = z3;
    }
    phase_ = static_cast<unsigned>(((e % 4) + 4) % 4);
    return *this;
}

PauliString operator*(PauliString lhs, const PauliString& rhs) {
    lhs *= rhs;
    return lhs;
}

void PauliString::conjugate_h(std::size_t q) {
    const bool x = x_bit(q), z = z_bit(q);
    if (x && z) {
        negate();
    } else if (x) {
        set_letter(q, PauliLetter::Z);
    } else if (z) {
        set_letter(q, PauliLetter::X);
    }
}

void PauliString::conjugate_s(std::size_t q) {
    // X -> Y, Y -> -X
    if (!x_bit(q)) return;
    if (z_bit(q)) {
        set_letter(q, PauliLetter::X);
        negate();
    } else {
        set_letter(q, PauliLetter::Y);
    }
}

void PauliString::conjugate_sdg(std::size_t q) {
    // X -> -Y, Y -> X
    if (!x_bit(q)) return;
    if (z_bit(q)) {
        set_letter(q, PauliLetter::X);
    } else {
        set_letter(q, PauliLetter::Y);
        negate();
    }
}

void PauliString::conjugate_pauli(std::size_t q, PauliLetter p) {
    const PauliLetter l = letter(q);
    if (l != PauliLetter::I && p != PauliLetter::I && l != p) negate();
}

void PauliString::swap_qubits(std::size_t a, std::size_t b) {
    const PauliLetter la = letter(a);
    set_letter(a, letter(b));
    set_letter(b, la);
}

std::string PauliString::to_dense() const {
    std::string s(num_qubits_, 'I');
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        s[num_qubits_ - 1 - q] = letter_char(letter(q));
    }
    return s;
}

std::string PauliString::to_signed_dense() const {
    static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_] + to_dense();
}

std::string PauliString::to_sparse() const {
    std::string s;
    for (std::size_t q = 0; q < num_qubits_; ++q) {
        const PauliLetter l = letter(q);
        if (l == PauliLetter::I) continue;
        if (!s.empty()) s += ' ';
        s += letter_char(l);
        s += std::to_string(q);
    }
    return s;
}

PauliString PauliString::parse(std::string_view text, std::optional<std::size_t> num_qubits) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    unsigned phase = 0;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        if (text.front() == '-') phase = 2;
        text.remove_prefix(1);
    }
    if (!text.empty() && text.front() == 'i') {
        phase += 1;
        text.remove_prefix(1);
    }
    text = trim(text);
    if (text.empty()) throw std::invalid_argument("empty Pauli string");

    bool sparse = false;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) sparse = true;
    }

    PauliString p;
    if (!sparse) {
        if (num_qubits && *num_qubits != text.size()) {
            throw std::invalid_argument("dense Pauli '" + std::string(text) + "' has length " +
                                        std::to_string(text.size()) + ", expected " +
                                        std::to_string(*num_qubits));
        }
        p = PauliString(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            p.set_letter(text.size() - 1 - i, letter_from_char(text[i]));
        }
    } else {
        if (!num_qubits) throw std::invalid_argument("sparse Pauli form needs a qubit count");
        p = PauliString(*num_qubits);
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos >= text.size()) break;
            const PauliLetter l = letter_from_char(text[pos++]);
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw std::invalid_argument("sparse Pauli token without qubit index");
            if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) {
                throw std::invalid_argument("malformed sparse Pauli token");
            }
            const std::size_t q = std::stoul(std::string(text.substr(start, pos - start)));
            if (q >= *num_qubits) {
                throw std::out_of_range("qubit index " + std::to_string(q) + " >= " +
                                        std::to_string(*num_qubits));
            }
            if (p.letter(q) != PauliLetter::I) {
                throw std::invalid_argument("qubit " + std::to_string(q) + " repeated");
            }
            p.set_letter(q, l);
        }
    }
    p.set_phase_exp(phase);
    return p;
}

int anticommutation_flag(const PauliString& p1, const PauliString& p2) {
    check_sizes(p1, p2);
    const auto x1 = p1.x_words(), z1 = p1.z_words();
    const auto x2 = p2.x_words(), z2 = p2.z_words();
    int parity = 0;
    for (std::size_t w = 0; w < x1.size(); ++w) {
        parity ^= std::popcount((x1[w] & z2[w]) ^ (z1[w] & x2[w])) & 1;
    }
    return parity;
}

PauliString multiply(const PauliString& p1, const PauliString& p2) { return p1 * p2; }

PauliMasks masks(const PauliString& p) {
    PauliMasks m;
    const auto x = p.x_words(), z = p.z_words();
    for (std::size_t w = 0; w < x.size(); ++w) {
        m.x.push_back(x[w] & ~z[w]);
        m.y.push_back(x[w] & z[w]);
        m.z.push_back(z[w] & ~x[w]);
    }
    return m;
}

std::size_t weight(const PauliString& p) {
    std::size_t count = 0;
    const auto x = p.x_words(), z = p.z_words();
    for (std::size_t w = 0; w < x.size(); ++w) count += std::popcount(x[w] | z[w]);
    return count;
}

std::uint64_t flip_target(const PauliString& p, std::uint64_t k) {
    check_basis_index(p, k);
    // m_X XOR m_Y is the x word itself.
    return k ^ p.x_mask();
}

unsigned pauli_phase(const PauliString& p, std::uint64_t k) {
    check_basis_index(p, k);
    // i^{phase + |m_Y|} (-1)^{|m_Y & k| + |m_Z & k|}; m_Y | m_Z is the z word.
    std::size_t y_count = 0;
    const auto x = p.x_words(), z = p.z_words();
    for (std::size_t w = 0; w < x.size(); ++w) y_count += std::popcount(x[w] & z[w]);
    const unsigned flips = std::popcount(p.z_mask() & k) & 1u;
    return (p.phase_exp() + static_cast<unsigned>(y_count & 3u) + 2 * flips) & 3u;
}

}  // namespace hybridsim
