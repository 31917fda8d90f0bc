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

#include "qdistill/classical_code.hpp"

#include <bit>

#include "qdistill/error.hpp"

namespace qdistill {

namespace {

// Length-n repetition code with H = [1 | I_{n-1}].
BinaryMatrix repetition_check(std::size_t n) {
    BinaryMatrix h(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h.set(i, 0, true);
        h.set(i, i + 1, true);
    }
    return h;
}

// The [23,12,7] Golay code restricted to codewords vanishing on the last
// position. The restriction keeps weight-7 codewords, so the result is
// [23,11,7].
BinaryMatrix golay23_check() {
    BinaryMatrix h = golay_parity_check();
    h.append_row(BinaryVector::unit(23, 22));
    return systematic_form(h).matrix;
}

bool lex_less(Word a, Word b) {
    Word diff = a ^ b;
    Word low = diff & (~diff + 1);
    return (a & low) == 0;
}

}  // namespace

BinaryMatrix golay_parity_check() {
    // g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11
    const BinaryVector g = BinaryVector::from_string("10101110001100000000000");
    BinaryMatrix gen(12, 23);
    for (std::size_t i = 0; i < 12; ++i) {
        for (std::size_t j = 0; j < 23; ++j) {
            if (g.get(j)) {
                gen.set(i, (i + j) % 23, true);
            }
        }
    }
    return nullspace_basis(gen);
}

std::size_t minimum_distance(const BinaryMatrix& generator) {
    const std::size_t k = generator.rows();
    if (k == 0) {
        return 0;
    }
    if (k > ClassicalCode::kMaxEnumerableDimension) {
        throw UnsupportedCodeError("minimum distance enumeration limited to dimension " +
                                   std::to_string(ClassicalCode::kMaxEnumerableDimension));
    }
    BinaryVector cw(generator.cols());
    std::size_t best = generator.cols() + 1;
    const std::uint64_t total = std::uint64_t{1} << k;
    for (std::uint64_t i = 1; i < total; ++i) {
        cw ^= generator.row(static_cast<std::size_t>(std::countr_zero(i)));
        std::size_t w = cw.weight();
        if (w < best) {
            best = w;
        }
    }
    return best;
}

ClassicalCode ClassicalCode::from_parity_check(const BinaryMatrix& h, std::optional<std::size_t> declared_distance,
                                               std::string name) {
    if (h.cols() == 0 || h.rows() == 0) {
        throw UnsupportedCodeError("parity-check matrix must be nonempty");
    }
    if (h.cols() > kMaxLength) {
        throw UnsupportedCodeError("code length " + std::to_string(h.cols()) + " exceeds " +
                                   std::to_string(kMaxLength));
    }
    if (h.rows() >= h.cols()) {
        throw UnsupportedCodeError("code dimension must be at least 1 (H is " + std::to_string(h.rows()) + "x" +
                                   std::to_string(h.cols()) + ")");
    }
    if (h.rows() > kMaxRedundancy) {
        throw UnsupportedCodeError("syndrome table limited to " + std::to_string(kMaxRedundancy) + " checks");
    }
    SystematicForm sys = systematic_form(h);

    ClassicalCode code;
    code.name_ = std::move(name);
    code.m_ = h.cols();
    code.k_ = h.cols() - h.rows();
    code.h_ = std::move(sys.matrix);
    code.col_perm_ = std::move(sys.col_perm);
    const std::size_t r = code.m_ - code.k_;
    code.a_ = code.h_.select_columns(0, code.k_).transpose();
    code.g_ = BinaryMatrix(code.k_, code.m_);
    for (std::size_t i = 0; i < code.k_; ++i) {
        code.g_.set(i, i, true);
        for (std::size_t j = 0; j < r; ++j) {
            code.g_.set(i, code.k_ + j, code.a_.get(i, j));
        }
    }
    code.d_ = minimum_distance(code.g_);
    if (declared_distance && *declared_distance != code.d_) {
        throw std::invalid_argument("declared minimum distance " + std::to_string(*declared_distance) +
                                    " but the code has distance " + std::to_string(code.d_));
    }
    code.check_rows_ = pack_rows(code.h_);
    code.leaders_ = coset_leader_table(code.check_rows_, code.m_);
    return code;
}

std::vector<Word> coset_leader_table(std::span<const Word> check_rows, std::size_t length) {
    if (length > ClassicalCode::kMaxLength || check_rows.size() > ClassicalCode::kMaxRedundancy) {
        throw UnsupportedCodeError("coset-leader table limited to length " +
                                   std::to_string(ClassicalCode::kMaxLength) + " and " +
                                   std::to_string(ClassicalCode::kMaxRedundancy) + " checks");
    }
    auto syndrome_of = [&](Word v) {
        Word s = 0;
        for (std::size_t j = 0; j < check_rows.size(); ++j) {
            s |= static_cast<Word>(std::popcount(v & check_rows[j]) & 1) << j;
        }
        return s;
    };
    const std::size_t slots = std::size_t{1} << check_rows.size();
    std::vector<Word> leaders(slots, 0);
    std::vector<bool> filled(slots, false);
    std::size_t count = 0;
    auto consider = [&](Word v, std::size_t w) {
        Word s = syndrome_of(v);
        if (!filled[s]) {
            filled[s] = true;
            leaders[s] = v;
            ++count;
        } else if (static_cast<std::size_t>(std::popcount(leaders[s])) == w && lex_less(v, leaders[s])) {
            leaders[s] = v;
        }
    };
    consider(0, 0);
    const Word limit = Word{1} << length;
    for (std::size_t w = 1; w <= length && count < slots; ++w) {
        // Gosper's hack walks every weight-w mask below 2^length in increasing order.
        for (Word v = (Word{1} << w) - 1; v < limit;) {
            consider(v, w);
            Word low = v & (~v + 1);
            Word ripple = v + low;
            v = (((ripple ^ v) >> 2) / low) | ripple;
        }
    }
    if (count < slots) {
        throw RankError("check rows are linearly dependent; some syndromes are unreachable");
    }
    return leaders;
}

std::vector<Word> pack_rows(const BinaryMatrix& h) {
    if (h.cols() > kWordBits) {
        throw UnsupportedCodeError("word-packed rows need at most 64 columns");
    }
    std::vector<Word> rows(h.rows());
    for (std::size_t j = 0; j < h.rows(); ++j) {
        rows[j] = h.row_words(j).empty() ? 0 : h.row_words(j)[0];
    }
    return rows;
}

ClassicalCode ClassicalCode::builtin(std::string_view name) {
    if (name == "rep3") {
        return from_parity_check(repetition_check(3), 3, "rep3");
    }
    if (name == "rep5") {
        return from_parity_check(repetition_check(5), 5, "rep5");
    }
    if (name == "hamming74") {
        // A rows 110, 101, 011, 111.
        return from_parity_check(BinaryMatrix::from_strings({"1101100", "1011010", "0111001"}), 3, "hamming74");
    }
    if (name == "golay23") {
        return from_parity_check(golay23_check(), 7, "golay23");
    }
    throw UnknownNameError("unknown classical code '" + std::string(name) + "'");
}

std::vector<std::string> ClassicalCode::builtin_names() {
    return {"rep3", "rep5", "hamming74", "golay23"};
}

Word ClassicalCode::syndrome_bits(Word v) const {
    Word s = 0;
    for (std::size_t j = 0; j < check_rows_.size(); ++j) {
        s |= static_cast<Word>(std::popcount(v & check_rows_[j]) & 1) << j;
    }
    return s;
}

BinaryVector ClassicalCode::syndrome(const BinaryVector& v) const {
    if (v.size() != m_) {
        throw DimensionError("syndrome: vector of length " + std::to_string(v.size()) + " for a code of length " +
                             std::to_string(m_));
    }
    return BinaryVector::from_u64(syndrome_bits(v.to_u64()), m_ - k_);
}

BinaryVector ClassicalCode::decode(const BinaryVector& syndrome) const {
    if (syndrome.size() != m_ - k_) {
        throw DimensionError("decode: syndrome of length " + std::to_string(syndrome.size()) + ", expected " +
                             std::to_string(m_ - k_));
    }
    return BinaryVector::from_u64(decode_bits(syndrome.to_u64()), m_);
}

}  // namespace qdistill
