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

#ifndef QDISTILL_CSS_CODE_HPP
#define QDISTILL_CSS_CODE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdistill/circuit.hpp"
#include "qdistill/gf2.hpp"

namespace qdistill {

enum class LogicalState { Zero, Plus };
enum class LogicalOperator { Xbar, Zbar };

/// Check matrix of a CSS code brought to the block form
///
///     X part      | Z part
///     [I_r  A  B  |  0   0    0 ]
///     [ 0   0  0  |  D   I_s  F ]
///
/// after permuting qubits. The first r rows are the X-type generators, the
/// last s rows the Z-type ones; the remaining n - r - s positions carry the
/// logical qubits. Position i of the block form is qubit `qubit_perm[i]` of
/// the original code.
struct StandardFormCheck {
    std::size_t r = 0;
    std::size_t s = 0;
    BinaryMatrix a;  // r x s
    BinaryMatrix b;  // r x (n - r - s)
    BinaryMatrix d;  // s x r
    BinaryMatrix f;  // s x (n - r - s)
    std::vector<std::size_t> qubit_perm;

    std::size_t num_qubits() const { return qubit_perm.size(); }
    std::size_t num_logical() const { return qubit_perm.size() - r - s; }
    /// Assembled rows in block-form column order.
    BinaryMatrix x_rows() const;
    BinaryMatrix z_rows() const;
    /// The same rows expressed in the original qubit order.
    BinaryMatrix x_rows_original() const;
    BinaryMatrix z_rows_original() const;
};

/// Gaussian elimination with qubit permutations. Requires H_X H_Z^T = 0 and
/// both matrices of full row rank.
StandardFormCheck standard_form(const BinaryMatrix& h_z, const BinaryMatrix& h_x);

/// CNOT-only circuit U, in original qubit labels, that maps the initial
/// stabilizers X_i (i < r) and Z_{r+j} (j < s) of the block form onto
/// generators of the code's stabilizer group. Built by clearing A and B with
/// CNOTs controlled on the first r positions, then clearing F with CNOTs
/// controlled on the logical positions, and reversing the sequence.
Circuit synthesize_encoding_circuit(const StandardFormCheck& form);

/// An [[n, 1]] CSS code with its logical operators and encoding circuit.
class CssCode {
  public:
    static constexpr std::size_t kMaxQubits = 63;

    /// Validates orthogonality, full rank and r_Z + r_X = n - 1. Logical
    /// operators default to minimum-weight representatives (lexicographically
    /// smallest on ties); supplied ones are checked.
    static CssCode from_matrices(const BinaryMatrix& h_z, const BinaryMatrix& h_x,
                                 std::optional<BinaryVector> logical_x = {},
                                 std::optional<BinaryVector> logical_z = {}, std::string name = {});

    /// steane or golay_q.
    static CssCode builtin(std::string_view name);
    static std::vector<std::string> builtin_names();

    const std::string& name() const { return name_; }
    std::size_t num_qubits() const { return n_; }
    const BinaryMatrix& h_z() const { return h_z_; }
    const BinaryMatrix& h_x() const { return h_x_; }
    const BinaryVector& logical_x() const { return logical_x_; }
    const BinaryVector& logical_z() const { return logical_z_; }
    const StandardFormCheck& standard_form() const { return form_; }
    /// CNOT-only encoder.
    const Circuit& encoding_circuit() const { return encoder_; }
    /// Qubit preparations followed by the encoder, producing |0>_L or |+>_L.
    Circuit preparation_circuit(LogicalState target) const;

    /// e H_Z^T: the syndrome of the X part e.
    BinaryVector syndrome_x(const BinaryVector& e) const;
    /// f H_X^T: the syndrome of the Z part f.
    BinaryVector syndrome_z(const BinaryVector& f) const;
    /// Parity of v against the support of the chosen logical operator.
    bool logical_parity(const BinaryVector& v, LogicalOperator which) const;

    // Word-level forms for n <= 63; bit i is qubit i.
    Word syndrome_x_bits(Word e) const;
    Word syndrome_z_bits(Word f) const;
    Word logical_x_bits() const { return lx_; }
    Word logical_z_bits() const { return lz_; }
    /// Minimum-weight X error with syndrome s_X against H_Z.
    Word x_correction(Word syndrome_x) const { return x_leaders_[syndrome_x]; }
    /// Minimum-weight Z error with syndrome s_Z against H_X.
    Word z_correction(Word syndrome_z) const { return z_leaders_[syndrome_z]; }

  private:
    CssCode() = default;

    std::string name_;
    std::size_t n_ = 0;
    BinaryMatrix h_z_;
    BinaryMatrix h_x_;
    BinaryVector logical_x_;
    BinaryVector logical_z_;
    StandardFormCheck form_;
    Circuit encoder_;
    std::vector<Word> hz_rows_;
    std::vector<Word> hx_rows_;
    Word lx_ = 0;
    Word lz_ = 0;
    std::vector<Word> x_leaders_;
    std::vector<Word> z_leaders_;
};

/// An [[m, k]] CSS code (k >= 1) used at block level by the quantum-code
/// distillation protocol. Only the parts that protocol needs are kept: the
/// block form, the encoder, the role of each position after un-encoding and
/// decoders for the block-form check rows.
class OuterCssCode {
  public:
    static OuterCssCode from_matrices(const BinaryMatrix& h_z, const BinaryMatrix& h_x, std::string name = {});

    const std::string& name() const { return name_; }
    std::size_t length() const { return form_.num_qubits(); }
    std::size_t num_logical() const { return form_.num_logical(); }
    const StandardFormCheck& standard_form() const { return form_; }
    const Circuit& encoding_circuit() const { return encoder_; }

    /// Positions that end in |+> after un-encoding (measured in the X basis).
    const std::vector<std::size_t>& plus_positions() const { return plus_; }
    /// Positions that end in |0> after un-encoding (measured in the Z basis).
    const std::vector<std::size_t>& zero_positions() const { return zero_; }
    /// Positions holding the k information qubits.
    const std::vector<std::size_t>& info_positions() const { return info_; }

    /// Block-form Z rows in original order; their parities are what the
    /// |0> positions reveal about X errors.
    const BinaryMatrix& z_checks() const { return z_checks_; }
    const BinaryMatrix& x_checks() const { return x_checks_; }
    Word decode_x_pattern(Word syndrome) const { return x_leaders_[syndrome]; }
    Word decode_z_pattern(Word syndrome) const { return z_leaders_[syndrome]; }

  private:
    std::string name_;
    StandardFormCheck form_;
    Circuit encoder_;
    std::vector<std::size_t> plus_;
    std::vector<std::size_t> zero_;
    std::vector<std::size_t> info_;
    BinaryMatrix z_checks_;
    BinaryMatrix x_checks_;
    std::vector<Word> x_leaders_;
    std::vector<Word> z_leaders_;
};

}  // namespace qdistill

#endif
