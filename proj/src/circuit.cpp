// Copyright 2026 The qdistill Authors
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

#include "qdistill/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace qdistill {

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits), measured_(num_qubits, false) {}

std::size_t Circuit::cnot_count() const {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(), [](const Gate& g) { return g.kind == GateKind::Cnot; }));
}

void Circuit::check_qubit(std::size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit " + std::to_string(q) + " out of range for a " + std::to_string(num_qubits_) +
                                "-qubit circuit");
    }
    if (measured_[q]) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " used after measurement");
    }
}

void Circuit::append(const Gate& gate) {
    check_qubit(gate.q0);
    if (gate.kind == GateKind::Cnot) {
        check_qubit(gate.q1);
        if (gate.q0 == gate.q1) {
            throw std::invalid_argument("CNOT control and target coincide");
        }
    }
    if (gate.kind == GateKind::MeasZ || gate.kind == GateKind::MeasX) {
        measured_[gate.q0] = true;
    }
    gates_.push_back(gate);
}

void Circuit::prep_zero(std::size_t q) { append({GateKind::PrepZero, static_cast<std::uint32_t>(q)}); }
void Circuit::prep_plus(std::size_t q) { append({GateKind::PrepPlus, static_cast<std::uint32_t>(q)}); }
void Circuit::measure_z(std::size_t q) { append({GateKind::MeasZ, static_cast<std::uint32_t>(q)}); }
void Circuit::measure_x(std::size_t q) { append({GateKind::MeasX, static_cast<std::uint32_t>(q)}); }

void Circuit::cnot(std::size_t control, std::size_t target) {
    append({GateKind::Cnot, static_cast<std::uint32_t>(control), static_cast<std::uint32_t>(target)});
}

Circuit Circuit::reversed() const {
    Circuit out(num_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
        out.append(*it);
    }
    return out;
}

std::string Circuit::to_text() const {
    std::ostringstream os;
    for (const Gate& g : gates_) {
        switch (g.kind) {
            case GateKind::PrepZero: os << "P0 " << g.q0; break;
            case GateKind::PrepPlus: os << "P+ " << g.q0; break;
            case GateKind::Cnot: os << "CX " << g.q0 << ' ' << g.q1; break;
            case GateKind::MeasZ: os << "MZ " << g.q0; break;
            case GateKind::MeasX: os << "MX " << g.q0; break;
        }
        os << '\n';
    }
    return os.str();
}

Circuit Circuit::from_text(std::string_view text, std::size_t num_qubits) {
    std::vector<Gate> gates;
    std::size_t max_qubit = 0;
    bool any = false;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto parse_index = [&](const std::string& tok) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": bad qubit index '" + tok + "'");
        }
        max_qubit = std::max(max_qubit, v);
        any = true;
        return static_cast<std::uint32_t>(v);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op) || op[0] == '#') {
            continue;
        }
        std::string a, b, extra;
        ls >> a;
        if (op == "CX") {
            ls >> b;
        }
        if (a.empty() || (op == "CX" && b.empty()) || (ls >> extra)) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": malformed gate '" + line + "'");
        }
        if (op == "P0") {
            gates.push_back({GateKind::PrepZero, parse_index(a)});
        } else if (op == "P+") {
            gates.push_back({GateKind::PrepPlus, parse_index(a)});
        } else if (op == "CX") {
            std::uint32_t c = parse_index(a);
            gates.push_back({GateKind::Cnot, c, parse_index(b)});
        } else if (op == "MZ") {
            gates.push_back({GateKind::MeasZ, parse_index(a)});
        } else if (op == "MX") {
            gates.push_back({GateKind::MeasX, parse_index(a)});
        } else {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": unknown gate '" + op + "'");
        }
    }
    Circuit c(std::max(num_qubits, any ? max_qubit + 1 : 0));
    for (const Gate& g : gates) {
        c.append(g);
    }
    return c;
}

}  // namespace qdistill
