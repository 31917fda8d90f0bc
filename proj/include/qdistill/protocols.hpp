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

// Distillation, Steane extraction and ancilla saving over Pauli frames.
//
// All circuits here run without faults; errors enter only through the
// frames handed in. Blocks are indexed from 0 and a classical code's
// systematic coordinates decide the block roles: the first k blocks carry
// data, the last r are parity blocks.

#ifndef QDISTILL_PROTOCOLS_HPP
#define QDISTILL_PROTOCOLS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "qdistill/circuit.hpp"
#include "qdistill/classical_code.hpp"
#include "qdistill/css_code.hpp"
#include "qdistill/pauli_frame.hpp"

namespace qdistill {

enum class RoundType { XRound, ZRound };

/// Estimated syndromes of one input block. The x_ fields describe its X
/// errors (e H_Z^T and e . Zbar), the z_ fields its Z errors (f H_X^T and
/// f . Xbar). Fields a procedure does not estimate stay zero.
struct SyndromeRecord {
    Word x_syndrome = 0;
    bool x_logical = false;
    Word z_syndrome = 0;
    bool z_logical = false;

    bool operator==(const SyndromeRecord&) const = default;
};

/// Block-level circuit CX(i -> k+j) for every A_ij = 1.
Circuit build_UD(const ClassicalCode& code);
/// Block-level circuit CX(k+j -> i) for every A_ij = 1.
Circuit build_UDH(const ClassicalCode& code);

struct RoundResult {
    std::vector<PauliError> survivors;       // k frames, corrections applied
    std::vector<SyndromeRecord> records;     // m records, one per input block
    std::vector<MeasuredParities> measured;  // r parity blocks, in order
};

/// One distillation round on m blocks. Estimates of the logical parity are
/// made only when the round matches the target: X round for |0>_L, Z round
/// for |+>_L.
RoundResult distill_round(std::span<const PauliError> blocks, const ClassicalCode& code, const CssCode& css,
                          RoundType round, LogicalState target);

/// In-place form used by the Monte Carlo driver: `blocks` holds m frames on
/// input, and its first k entries hold the corrected survivors on output.
void distill_round_in_place(std::span<PauliError> blocks, const ClassicalCode& code, const CssCode& css,
                            RoundType round, LogicalState target);

struct DistillationConfig {
    const CssCode* css = nullptr;
    const ClassicalCode* code_round1 = nullptr;
    const ClassicalCode* code_round2 = nullptr;
    LogicalState target = LogicalState::Zero;
};

/// Order in which round-1 survivors enter round 2. Survivor a of round-1
/// group g has index g * k1 + a; round 2 takes consecutive runs of m2 from
/// the returned order. Requires the group count to be a multiple of m2.
std::vector<std::size_t> round_two_order(std::size_t groups, std::size_t k1, std::size_t m2);
/// Throws std::logic_error if some round-2 group holds two survivors of one
/// round-1 group.
void check_round_two_grouping(std::span<const std::size_t> order, std::size_t k1, std::size_t m2);

/// X round with code_round1 on consecutive groups of m1, then a Z round with
/// code_round2 across groups. The pool size must be a positive multiple of
/// m1 * m2; the result holds pool * k1 * k2 / (m1 * m2) survivors.
std::vector<PauliError> distill_protocol_I(std::span<const PauliError> pool, const DistillationConfig& cfg);

/// Reusable form of distill_protocol_I for a fixed pool size; keeps its
/// buffers between runs.
class ProtocolIRunner {
  public:
    ProtocolIRunner(const DistillationConfig& cfg, std::size_t pool_size);

    std::size_t pool_size() const { return pool_size_; }
    std::size_t survivor_count() const { return order_.size() / cfg_.code_round2->length() * cfg_.code_round2->dimension(); }
    /// Consumes `pool` as scratch. The returned frames stay valid until the
    /// next call.
    std::span<const PauliError> run(std::span<PauliError> pool);

  private:
    DistillationConfig cfg_;
    std::size_t pool_size_;
    std::vector<std::size_t> order_;
    std::vector<PauliError> stage1_;
    std::vector<PauliError> group_;
    std::vector<PauliError> survivors_;
};

struct ProtocolIIResult {
    std::vector<PauliError> survivors;       // one per information position
    std::vector<SyndromeRecord> records;     // m records, one per input block
};

/// Un-encodes the m blocks with the outer code at block level, measures its
/// |0> positions in the Z basis and its |+> positions in the X basis, and
/// decodes every syndrome bit with the outer code's check rows.
ProtocolIIResult distill_protocol_II(std::span<const PauliError> blocks, const OuterCssCode& outer,
                                     const CssCode& css, LogicalState target);

struct ExtractionResult {
    Word syndrome_x = 0;
    Word syndrome_z = 0;
};

/// CX data -> anc_plus, then CX anc_zero -> data, then bitwise measurement
/// of both ancillas. The data frame picks up the ancillas' back-action.
ExtractionResult steane_extraction(PauliError& data, PauliError& anc_plus, PauliError& anc_zero, const CssCode& css);

/// Shares r = m - k ancillas of each kind across m data blocks and recovers
/// every block's X and Z syndromes by classical decoding. Frames are
/// updated in place.
std::vector<SyndromeRecord> ancilla_saving(std::span<PauliError> data, std::span<PauliError> anc_plus,
                                           std::span<PauliError> anc_zero, const ClassicalCode& code,
                                           const CssCode& css);

/// Applies the minimum-weight X correction for the estimated record, plus
/// Xbar when the decoded logical bit disagrees with the correction's own
/// Zbar parity. `with_logical` selects whether the logical bit is used.
void correct_x(PauliError& block, const SyndromeRecord& rec, const CssCode& css, bool with_logical);
void correct_z(PauliError& block, const SyndromeRecord& rec, const CssCode& css, bool with_logical);

/// True when the frame acts nontrivially on the target state: a nonzero
/// syndrome, or Xbar parity for |0>_L (e . Zbar), or Zbar parity for |+>_L
/// (f . Xbar).
bool is_failure(const PauliError& err, const CssCode& css, LogicalState target);

}  // namespace qdistill

#endif
