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

#include "hybridsim/circuit.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace hybridsim {

namespace {

struct TagInfo {
    GateTag tag;
    const char* name;
};

constexpr std::array<TagInfo, 14> kTags{{
    {GateTag::H, "H"},     {GateTag::S, "S"},     {GateTag::Sdg, "Sdg"},     {GateTag::X, "X"},
    {GateTag::Y, "Y"},     {GateTag::Z, "Z"},     {GateTag::CX, "CX"},       {GateTag::CZ, "CZ"},
    {GateTag::SWAP, "SWAP"}, {GateTag::RX, "RX"}, {GateTag::RY, "RY"},       {GateTag::RZ, "RZ"},
    {GateTag::PrepZ, "PrepZ"}, {GateTag::MeasZ, "MeasZ"},
}};

std::string format_angle(double a) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

std::size_t parse_index(std::string_view s, std::size_t line_no) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(line_no, "malformed index '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

const char* gate_tag_name(GateTag tag) { return kTags.at(static_cast<std::size_t>(tag)).name; }

std::optional<GateTag> gate_tag_from_name(std::string_view name) {
    for (const auto& t : kTags) {
        if (name == t.name) return t.tag;
    }
    return std::nullopt;
}

bool is_clifford(GateTag tag) { return static_cast<int>(tag) <= static_cast<int>(GateTag::SWAP); }

bool is_rotation(GateTag tag) { return tag == GateTag::RX || tag == GateTag::RY || tag == GateTag::RZ; }

bool is_two_qubit(GateTag tag) { return tag == GateTag::CX || tag == GateTag::CZ || tag == GateTag::SWAP; }

CliffordGate to_clifford_gate(GateTag tag) {
    if (!is_clifford(tag)) throw std::invalid_argument(std::string(gate_tag_name(tag)) + " is not a Clifford gate");
    // The Clifford prefixes of both enums are laid out identically.
    return static_cast<CliffordGate>(static_cast<int>(tag));
}

Gate Gate::single(GateTag tag, std::size_t q) {
    if (is_two_qubit(tag) || is_rotation(tag)) {
        throw std::invalid_argument(std::string(gate_tag_name(tag)) + " is not a plain single-qubit gate");
    }
    return Gate{tag, q, kNone, 0.0, std::nullopt};
}

Gate Gate::pair(GateTag tag, std::size_t control, std::size_t target) {
    if (!is_two_qubit(tag)) throw std::invalid_argument(std::string(gate_tag_name(tag)) + " is not a two-qubit gate");
    return Gate{tag, control, target, 0.0, std::nullopt};
}

Gate Gate::rotation(GateTag tag, std::size_t q, double angle) {
    if (!is_rotation(tag)) throw std::invalid_argument(std::string(gate_tag_name(tag)) + " is not a rotation");
    return Gate{tag, q, kNone, angle, std::nullopt};
}

Gate Gate::meas_z(std::size_t q, std::optional<std::size_t> slot) {
    Gate g{GateTag::MeasZ, q, kNone, 0.0, std::nullopt};
    g.classical_target = slot;
    return g;
}

void Circuit::add(const Gate& g) {
    auto check = [&](std::size_t q) {
        if (q >= num_qubits_) {
            throw std::out_of_range(std::string(gate_tag_name(g.tag)) + " on qubit " + std::to_string(q) +
                                    " in a " + std::to_string(num_qubits_) + "-qubit circuit");
        }
    };
    check(g.q0);
    if (is_two_qubit(g.tag)) {
        check(g.q1);
        if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate on a repeated qubit");
    } else if (g.q1 != Gate::kNone) {
        throw std::invalid_argument(std::string(gate_tag_name(g.tag)) + " takes one qubit");
    }
    if (is_rotation(g.tag) && !std::isfinite(g.angle)) throw std::invalid_argument("non-finite rotation angle");
    if (!is_rotation(g.tag) && g.angle != 0.0) throw std::invalid_argument("angle on a non-rotation gate");
    if (g.classical_target && g.tag != GateTag::MeasZ) {
        throw std::invalid_argument("classical target on a non-measurement gate");
    }
    gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
    if (other.num_qubits_ > num_qubits_) throw std::invalid_argument("appended circuit is wider");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    metadata_.global_phase += other.metadata_.global_phase;
}

Circuit Circuit::inverse() const {
    Circuit inv(num_qubits_);
    inv.metadata_ = metadata_;
    inv.metadata_.global_phase = -metadata_.global_phase;
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        Gate g = *it;
        switch (g.tag) {
            case GateTag::PrepZ:
            case GateTag::MeasZ:
                throw std::invalid_argument("circuit with PrepZ/MeasZ has no inverse");
            case GateTag::S:
                g.tag = GateTag::Sdg;
                break;
            case GateTag::Sdg:
                g.tag = GateTag::S;
                break;
            default:
                if (is_rotation(g.tag)) g.angle = -g.angle;
                break;
        }
        inv.gates_.push_back(g);
    }
    return inv;
}

std::string Circuit::dump() const {
    std::string out;
    for (const auto& g : gates_) {
        out += gate_tag_name(g.tag);
        out += ' ';
        out += std::to_string(g.q0);
        if (is_two_qubit(g.tag)) out += "," + std::to_string(g.q1);
        if (is_rotation(g.tag)) out += "," + format_angle(g.angle);
        if (g.classical_target) out += ",c" + std::to_string(*g.classical_target);
        out += '\n';
    }
    return out;
}

Circuit Circuit::parse_dump(std::string_view text, std::size_t num_qubits) {
    Circuit c(num_qubits);
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const auto space = line.find(' ');
        if (space == std::string::npos) throw ParseError(line_no, "expected 'TAG args'");
        const auto tag = gate_tag_from_name(std::string_view(line).substr(0, space));
        if (!tag) throw ParseError(line_no, "unknown gate '" + line.substr(0, space) + "'");

        std::vector<std::string> args;
        std::stringstream rest(line.substr(space + 1));
        for (std::string a; std::getline(rest, a, ',');) args.push_back(a);

        Gate g{*tag, 0, Gate::kNone, 0.0, std::nullopt};
        std::size_t expected = 1;
        if (is_two_qubit(*tag)) expected = 2;
        if (is_rotation(*tag)) expected = 2;
        if (*tag == GateTag::MeasZ && args.size() == 2 && !args[1].empty() && args[1][0] == 'c') {
            g.classical_target = parse_index(std::string_view(args[1]).substr(1), line_no);
            expected = 2;
        }
        if (args.size() != expected) throw ParseError(line_no, "wrong argument count for " + line.substr(0, space));
        g.q0 = parse_index(args[0], line_no);
        if (is_two_qubit(*tag)) g.q1 = parse_index(args[1], line_no);
        if (is_rotation(*tag)) {
            char* end = nullptr;
            g.angle = std::strtod(args[1].c_str(), &end);
            if (end != args[1].c_str() + args[1].size()) throw ParseError(line_no, "malformed angle");
        }
        try {
            c.add(g);
        } catch (const std::exception& e) {
            throw ParseError(line_no, e.what());
        }
    }
    return c;
}

GateCounts count_gates(const Circuit& c) {
    GateCounts counts;
    for (const auto& g : c.gates()) {
        if (is_clifford(g.tag)) {
            ++counts.clifford;
            if (g.tag == GateTag::CX) ++counts.cx;
        } else if (is_rotation(g.tag)) {
            ++counts.rotation;
        } else if (g.tag == GateTag::PrepZ) {
            ++counts.prep;
        } else {
            ++counts.measure;
        }
    }
    return counts;
}

std::size_t clifford_gate_count(const Circuit& c) { return count_gates(c).clifford; }

std::size_t rotation_gate_count(const Circuit& c) { return count_gates(c).rotation; }

void append_pauli_rotation(Circuit& c, const PauliString& term, double angle) {
    if (term.num_qubits() != c.num_qubits()) throw std::invalid_argument("term width differs from circuit width");
    if (term.phase_exp() != 0) throw std::invalid_argument("staircase term must carry sign +1");
    if (!std::isfinite(angle)) throw std::invalid_argument("non-finite rotation angle");

    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < term.num_qubits(); ++q) {
        if (term.letter(q) != PauliLetter::I) support.push_back(q);
    }
    if (support.empty()) {
        c.metadata().global_phase -= angle / 2;
        return;
    }

    for (const auto q : support) {
        if (term.letter(q) == PauliLetter::X) {
            c.add(Gate::single(GateTag::H, q));
        } else if (term.letter(q) == PauliLetter::Y) {
            c.add(Gate::single(GateTag::Sdg, q));
            c.add(Gate::single(GateTag::H, q));
        }
    }
    for (std::size_t i = support.size() - 1; i > 0; --i) c.add(Gate::pair(GateTag::CX, support[i], support[i - 1]));
    c.add(Gate::rotation(GateTag::RZ, support[0], angle));
    for (std::size_t i = 1; i < support.size(); ++i) c.add(Gate::pair(GateTag::CX, support[i], support[i - 1]));
    for (const auto q : support) {
        if (term.letter(q) == PauliLetter::X) {
            c.add(Gate::single(GateTag::H, q));
        } else if (term.letter(q) == PauliLetter::Y) {
            c.add(Gate::single(GateTag::H, q));
            c.add(Gate::single(GateTag::S, q));
        }
    }
}

Circuit compile_pauli_rotation(const PauliString& term, double angle) {
    Circuit c(term.num_qubits());
    append_pauli_rotation(c, term, angle);
    return c;
}

Circuit trotterize(const Hamiltonian& h, double t, std::size_t m) {
    if (m < 1) throw std::invalid_argument("Trotter step count must be at least 1");
    if (!std::isfinite(t)) throw std::invalid_argument("non-finite evolution time");
    Circuit c(h.num_qubits());
    c.metadata().source = h.name();
    c.metadata().trotter_time = t;
    c.metadata().trotter_steps = m;
    std::size_t per_step = 0;
    for (const auto& term : h.terms()) per_step += 4 * weight(term.pauli) + 1;
    c.reserve(per_step * m);
    const double dt = t / static_cast<double>(m);
    for (std::size_t step = 0; step < m; ++step) {
        for (const auto& term : h.terms()) append_pauli_rotation(c, term.pauli, 2.0 * term.coeff * dt);
    }
    return c;
}

}  // namespace hybridsim
