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

#ifndef QDISTILL_CIRCUIT_HPP
#define QDISTILL_CIRCUIT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qdistill {

enum class GateKind : std::uint8_t { PrepZero, PrepPlus, Cnot, MeasZ, MeasX };

struct Gate {
    GateKind kind;
    std::uint32_t q0;       // the qubit, or the control of a CNOT
    std::uint32_t q1 = 0;   // CNOT target

    bool operator==(const Gate&) const = default;
};

/// Ordered list of preparations, CNOTs and single-qubit measurements.
///
/// Qubits are numbered from 0. A measured qubit accepts no further gates.
/// The text form has one gate per line: `P0 q`, `P+ q`, `CX c t`, `MZ q`,
/// `MX q`; blank lines and lines starting with '#' are ignored on input.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t num_qubits);

    std::size_t num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    std::size_t cnot_count() const;

    void prep_zero(std::size_t q);
    void prep_plus(std::size_t q);
    void cnot(std::size_t control, std::size_t target);
    void measure_z(std::size_t q);
    void measure_x(std::size_t q);
    void append(const Gate& gate);

    /// Gates in reverse order. Only meaningful for CNOT-only circuits, where
    /// it yields the inverse unitary.
    Circuit reversed() const;

    std::string to_text() const;
    /// Parses the text form; the qubit count is one more than the largest
    /// index mentioned unless `num_qubits` is larger.
    static Circuit from_text(std::string_view text, std::size_t num_qubits = 0);

    bool operator==(const Circuit&) const = default;

  private:
    void check_qubit(std::size_t q) const;

    std::size_t num_qubits_ = 0;
    std::vector<Gate> gates_;
    std::vector<bool> measured_;
};

}  // namespace qdistill

#endif
