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

#include "qdistill/protocols.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "qdistill/error.hpp"

namespace qdistill {

namespace {

bool parity(Word v) { return (std::popcount(v) & 1) != 0; }

void check_blocks(std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
        throw DimensionError(std::string(what) + ": expected " + std::to_string(want) + " blocks, got " +
                             std::to_string(got));
    }
}

// Decodes every syndrome position of the measured parities. `measured[j]`
// belongs to check row j of the classical code; the estimate for input
// block i lands in records[i]. The logical parity is decoded as one more
// position when `with_logical` is set.
template <typename DecodeFn>
void decode_positions(std::span<const MeasuredParities> measured, std::size_t positions, bool with_logical,
                      DecodeFn decode, std::span<SyndromeRecord> records, bool x_side) {
    const std::size_t total = positions + (with_logical ? 1 : 0);
    for (std::size_t b = 0; b < total; ++b) {
        Word syndrome = 0;
        for (std::size_t j = 0; j < measured.size(); ++j) {
            bool bit = b < positions ? ((measured[j].syndrome >> b) & 1U) != 0 : measured[j].logical;
            syndrome |= Word{bit} << j;
        }
        if (syndrome == 0) {
            continue;
        }
        Word pattern = decode(syndrome);
        for (std::size_t i = 0; i < records.size(); ++i) {
            if (((pattern >> i) & 1U) == 0) {
                continue;
            }
            SyndromeRecord& rec = records[i];
            if (b < positions) {
                (x_side ? rec.x_syndrome : rec.z_syndrome) ^= Word{1} << b;
            } else {
                (x_side ? rec.x_logical : rec.z_logical) ^= true;
            }
        }
    }
}

}  // namespace

Circuit build_UD(const ClassicalCode& code) {
    const std::size_t k = code.dimension();
    Circuit c(code.length());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < code.redundancy(); ++j) {
            if (code.coupling().get(i, j)) {
                c.cnot(i, k + j);
            }
        }
    }
    return c;
}

Circuit build_UDH(const ClassicalCode& code) {
    const std::size_t k = code.dimension();
    Circuit c(code.length());
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < code.redundancy(); ++j) {
            if (code.coupling().get(i, j)) {
                c.cnot(k + j, i);
            }
        }
    }
    return c;
}

void correct_x(PauliError& block, const SyndromeRecord& rec, const CssCode& css, bool with_logical) {
    Word fix = css.x_correction(rec.x_syndrome);
    if (with_logical && parity(fix & css.logical_z_bits()) != rec.x_logical) {
        fix ^= css.logical_x_bits();
    }
    block.x ^= fix;
}

void correct_z(PauliError& block, const SyndromeRecord& rec, const CssCode& css, bool with_logical) {
    Word fix = css.z_correction(rec.z_syndrome);
    if (with_logical && parity(fix & css.logical_x_bits()) != rec.z_logical) {
        fix ^= css.logical_z_bits();
    }
    block.z ^= fix;
}

bool is_failure(const PauliError& err, const CssCode& css, LogicalState target) {
    if (css.syndrome_x_bits(err.x) != 0 || css.syndrome_z_bits(err.z) != 0) {
        return true;
    }
    return target == LogicalState::Zero ? parity(err.x & css.logical_z_bits())
                                        : parity(err.z & css.logical_x_bits());
}

namespace {

// Shared body of the two round entry points. `records` and `measured` may
// be empty spans when the caller does not want them.
void run_round(std::span<PauliError> blocks, const ClassicalCode& code, const CssCode& css, RoundType round,
               LogicalState target, std::span<SyndromeRecord> records, std::span<MeasuredParities> measured) {
    const std::size_t m = code.length();
    const std::size_t k = code.dimension();
    const std::size_t r = code.redundancy();
    check_blocks(blocks.size(), m, "distill_round");
    const bool x_round = round == RoundType::XRound;
    const bool with_logical = x_round == (target == LogicalState::Zero);

    const BinaryMatrix& a = code.coupling();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            if (a.get(i, j)) {
                if (x_round) {
                    transversal_block_cnot(blocks, i, k + j);
                } else {
                    transversal_block_cnot(blocks, k + j, i);
                }
            }
        }
    }

    MeasuredParities local_measured[ClassicalCode::kMaxRedundancy];
    std::span<MeasuredParities> meas = measured.empty() ? std::span<MeasuredParities>(local_measured, r) : measured;
    for (std::size_t j = 0; j < r; ++j) {
        meas[j] = frame_measurement_parities(blocks[k + j], css, x_round ? Basis::Z : Basis::X);
    }

    SyndromeRecord local_records[ClassicalCode::kMaxLength];
    std::span<SyndromeRecord> recs = records.empty() ? std::span<SyndromeRecord>(local_records, m) : records;
    for (auto& rec : recs) {
        rec = {};
    }
    const std::size_t positions = x_round ? css.h_z().rows() : css.h_x().rows();
    decode_positions(
        std::span<const MeasuredParities>(meas.data(), r), positions, with_logical,
        [&](Word s) { return code.decode_bits(s); }, recs, x_round);

    for (std::size_t i = 0; i < k; ++i) {
        if (x_round) {
            correct_x(blocks[i], recs[i], css, with_logical);
        } else {
            correct_z(blocks[i], recs[i], css, with_logical);
        }
    }
}

}  // namespace

RoundResult distill_round(std::span<const PauliError> blocks, const ClassicalCode& code, const CssCode& css,
                          RoundType round, LogicalState target) {
    std::vector<PauliError> work(blocks.begin(), blocks.end());
    RoundResult out;
    out.records.resize(code.length());
    out.measured.resize(code.redundancy());
    check_blocks(work.size(), code.length(), "distill_round");
    run_round(work, code, css, round, target, out.records, out.measured);
    out.survivors.assign(work.begin(), work.begin() + static_cast<std::ptrdiff_t>(code.dimension()));
    return out;
}

void distill_round_in_place(std::span<PauliError> blocks, const ClassicalCode& code, const CssCode& css,
                            RoundType round, LogicalState target) {
    run_round(blocks, code, css, round, target, {}, {});
}

std::vector<std::size_t> round_two_order(std::size_t groups, std::size_t k1, std::size_t m2) {
    if (m2 == 0 || groups % m2 != 0) {
        throw std::invalid_argument("round-1 group count " + std::to_string(groups) + " is not a multiple of " +
                                    std::to_string(m2));
    }
    std::vector<std::size_t> order;
    order.reserve(groups * k1);
    for (std::size_t a = 0; a < k1; ++a) {
        for (std::size_t g = 0; g < groups; ++g) {
            order.push_back(g * k1 + a);
        }
    }
    return order;
}

void check_round_two_grouping(std::span<const std::size_t> order, std::size_t k1, std::size_t m2) {
    for (std::size_t start = 0; start + m2 <= order.size(); start += m2) {
        for (std::size_t i = start; i < start + m2; ++i) {
            for (std::size_t j = i + 1; j < start + m2; ++j) {
                if (order[i] / k1 == order[j] / k1) {
                    throw std::logic_error("round-2 group starting at " + std::to_string(start) +
                                           " reunites survivors of round-1 group " + std::to_string(order[i] / k1));
                }
            }
        }
    }
}

ProtocolIRunner::ProtocolIRunner(const DistillationConfig& cfg, std::size_t pool_size)
    : cfg_(cfg), pool_size_(pool_size) {
    if (cfg.css == nullptr || cfg.code_round1 == nullptr || cfg.code_round2 == nullptr) {
        throw std::invalid_argument("distillation config is missing a code");
    }
    const std::size_t m1 = cfg.code_round1->length();
    const std::size_t k1 = cfg.code_round1->dimension();
    const std::size_t m2 = cfg.code_round2->length();
    if (pool_size == 0 || pool_size % (m1 * m2) != 0) {
        throw std::invalid_argument("pool of " + std::to_string(pool_size) +
                                    " blocks is not a positive multiple of m1 * m2 = " + std::to_string(m1 * m2));
    }
    const std::size_t groups = pool_size / m1;
    order_ = round_two_order(groups, k1, m2);
    check_round_two_grouping(order_, k1, m2);
    stage1_.resize(groups * k1);
    group_.resize(m2);
    survivors_.resize(survivor_count());
}

std::span<const PauliError> ProtocolIRunner::run(std::span<PauliError> pool) {
    check_blocks(pool.size(), pool_size_, "distill_protocol_I");
    const std::size_t m1 = cfg_.code_round1->length();
    const std::size_t k1 = cfg_.code_round1->dimension();
    const std::size_t m2 = cfg_.code_round2->length();
    const std::size_t k2 = cfg_.code_round2->dimension();
    for (std::size_t g = 0; g < pool_size_ / m1; ++g) {
        std::span<PauliError> grp = pool.subspan(g * m1, m1);
        distill_round_in_place(grp, *cfg_.code_round1, *cfg_.css, RoundType::XRound, cfg_.target);
        std::copy(grp.begin(), grp.begin() + static_cast<std::ptrdiff_t>(k1), stage1_.begin() + static_cast<std::ptrdiff_t>(g * k1));
    }
    std::size_t out = 0;
    for (std::size_t start = 0; start < order_.size(); start += m2) {
        for (std::size_t i = 0; i < m2; ++i) {
            group_[i] = stage1_[order_[start + i]];
        }
        distill_round_in_place(group_, *cfg_.code_round2, *cfg_.css, RoundType::ZRound, cfg_.target);
        for (std::size_t i = 0; i < k2; ++i) {
            survivors_[out++] = group_[i];
        }
    }
    return survivors_;
}

std::vector<PauliError> distill_protocol_I(std::span<const PauliError> pool, const DistillationConfig& cfg) {
    ProtocolIRunner runner(cfg, pool.size());
    std::vector<PauliError> work(pool.begin(), pool.end());
    std::span<const PauliError> out = runner.run(work);
    return {out.begin(), out.end()};
}

ProtocolIIResult distill_protocol_II(std::span<const PauliError> blocks, const OuterCssCode& outer,
                                     const CssCode& css, LogicalState target) {
    const std::size_t m = outer.length();
    check_blocks(blocks.size(), m, "distill_protocol_II");
    std::vector<PauliError> work(blocks.begin(), blocks.end());
    const Circuit unencode = outer.encoding_circuit().reversed();
    for (const Gate& g : unencode.gates()) {
        transversal_block_cnot(work, g.q0, g.q1);
    }

    std::vector<MeasuredParities> zero_meas;
    for (std::size_t q : outer.zero_positions()) {
        zero_meas.push_back(frame_measurement_parities(work[q], css, Basis::Z));
    }
    std::vector<MeasuredParities> plus_meas;
    for (std::size_t q : outer.plus_positions()) {
        plus_meas.push_back(frame_measurement_parities(work[q], css, Basis::X));
    }

    ProtocolIIResult out;
    out.records.resize(m);
    const bool zero_target = target == LogicalState::Zero;
    decode_positions(
        zero_meas, css.h_z().rows(), zero_target, [&](Word s) { return outer.decode_x_pattern(s); }, out.records,
        true);
    decode_positions(
        plus_meas, css.h_x().rows(), !zero_target, [&](Word s) { return outer.decode_z_pattern(s); }, out.records,
        false);

    // Push the estimated input syndromes through the un-encoder to predict
    // what each information position carries.
    std::vector<SyndromeRecord> pushed(out.records);
    for (const Gate& g : unencode.gates()) {
        SyndromeRecord& c = pushed[g.q0];
        SyndromeRecord& t = pushed[g.q1];
        t.x_syndrome ^= c.x_syndrome;
        t.x_logical ^= c.x_logical;
        c.z_syndrome ^= t.z_syndrome;
        c.z_logical ^= t.z_logical;
    }
    for (std::size_t q : outer.info_positions()) {
        PauliError block = work[q];
        correct_x(block, pushed[q], css, zero_target);
        correct_z(block, pushed[q], css, !zero_target);
        out.survivors.push_back(block);
    }
    return out;
}

ExtractionResult steane_extraction(PauliError& data, PauliError& anc_plus, PauliError& anc_zero, const CssCode& css) {
    PauliError frames[3] = {data, anc_plus, anc_zero};
    transversal_block_cnot(frames, 0, 1);
    transversal_block_cnot(frames, 2, 0);
    data = frames[0];
    anc_plus = frames[1];
    anc_zero = frames[2];
    return {css.syndrome_x_bits(anc_plus.x), css.syndrome_z_bits(anc_zero.z)};
}

std::vector<SyndromeRecord> ancilla_saving(std::span<PauliError> data, std::span<PauliError> anc_plus,
                                           std::span<PauliError> anc_zero, const ClassicalCode& code,
                                           const CssCode& css) {
    const std::size_t m = code.length();
    const std::size_t k = code.dimension();
    const std::size_t r = code.redundancy();
    check_blocks(data.size(), m, "ancilla_saving data");
    check_blocks(anc_plus.size(), r, "ancilla_saving |+> ancillas");
    check_blocks(anc_zero.size(), r, "ancilla_saving |0> ancillas");
    const BinaryMatrix& a = code.coupling();

    // X errors: data k+j and every data i with A_ij = 1 feed |+> ancilla j.
    for (std::size_t j = 0; j < r; ++j) {
        PauliError& anc = anc_plus[j];
        auto cx_into_anc = [&](PauliError& d) {
            anc.x ^= d.x;
            d.z ^= anc.z;
        };
        cx_into_anc(data[k + j]);
        for (std::size_t i = 0; i < k; ++i) {
            if (a.get(i, j)) {
                cx_into_anc(data[i]);
            }
        }
    }
    // Z errors: |0> ancilla j controls CNOTs onto the same data blocks.
    for (std::size_t j = 0; j < r; ++j) {
        PauliError& anc = anc_zero[j];
        auto cx_from_anc = [&](PauliError& d) {
            d.x ^= anc.x;
            anc.z ^= d.z;
        };
        cx_from_anc(data[k + j]);
        for (std::size_t i = 0; i < k; ++i) {
            if (a.get(i, j)) {
                cx_from_anc(data[i]);
            }
        }
    }

    std::vector<MeasuredParities> plus_meas(r), zero_meas(r);
    for (std::size_t j = 0; j < r; ++j) {
        plus_meas[j] = {css.syndrome_x_bits(anc_plus[j].x), false};
        zero_meas[j] = {css.syndrome_z_bits(anc_zero[j].z), false};
    }
    std::vector<SyndromeRecord> records(m);
    auto decode = [&](Word s) { return code.decode_bits(s); };
    decode_positions(plus_meas, css.h_z().rows(), false, decode, records, true);
    decode_positions(zero_meas, css.h_x().rows(), false, decode, records, false);
    return records;
}

}  // namespace qdistill
