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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdistill/error.hpp"

using namespace qdistill;

namespace {

struct Params {
    const char* name;
    std::size_t m;
    std::size_t k;
    std::size_t d;
};

class BuiltinClassical : public ::testing::TestWithParam<Params> {};

// Visits every word of weight <= w on m bits.
template <typename Fn>
void for_each_low_weight(std::size_t m, std::size_t w, Word prefix, std::size_t start, Fn&& fn) {
    fn(prefix);
    if (w == 0) {
        return;
    }
    for (std::size_t i = start; i < m; ++i) {
        for_each_low_weight(m, w - 1, prefix | (Word{1} << i), i + 1, fn);
    }
}

}  // namespace

TEST_P(BuiltinClassical, ParametersMatchEnumeration) {
    const Params p = GetParam();
    ClassicalCode c = ClassicalCode::builtin(p.name);
    EXPECT_EQ(c.length(), p.m);
    EXPECT_EQ(c.dimension(), p.k);
    EXPECT_EQ(c.distance(), p.d);
    EXPECT_EQ(c.name(), p.name);

    // Distance from the kernel of H directly.
    const std::vector<oracle::Word> rows = oracle::rows_of(c.parity_check());
    int best = 1000;
    for (oracle::Word v = 1; v < (oracle::Word{1} << p.m); ++v) {
        if (oracle::syndrome(rows, v) == 0) {
            best = std::min(best, std::popcount(v));
        }
    }
    EXPECT_EQ(static_cast<std::size_t>(best), p.d);
}

TEST_P(BuiltinClassical, SystematicShape) {
    ClassicalCode c = ClassicalCode::builtin(GetParam().name);
    const std::size_t k = c.dimension();
    const std::size_t r = c.redundancy();
    const BinaryMatrix& h = c.parity_check();
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            EXPECT_EQ(h.get(i, k + j), i == j);
        }
        for (std::size_t a = 0; a < k; ++a) {
            EXPECT_EQ(h.get(i, a), c.coupling().get(a, i));
        }
    }
    // Generator rows are codewords.
    EXPECT_TRUE(mat_mul(c.generator(), h.transpose()).is_zero());
}

TEST_P(BuiltinClassical, CorrectsEveryErrorUpToT) {
    ClassicalCode c = ClassicalCode::builtin(GetParam().name);
    const std::size_t t = c.correctable();
    std::size_t visited = 0;
    for_each_low_weight(c.length(), t, 0, 0, [&](Word e) {
        ++visited;
        ASSERT_EQ(c.decode_bits(c.syndrome_bits(e)), e);
    });
    EXPECT_GT(visited, c.length());
}

TEST_P(BuiltinClassical, LeadersAreMinimumWeight) {
    ClassicalCode c = ClassicalCode::builtin(GetParam().name);
    const std::vector<oracle::Word> rows = oracle::rows_of(c.parity_check());
    const std::vector<int> best = oracle::min_weight_by_syndrome(rows, c.length());
    for (Word s = 0; s < best.size(); ++s) {
        const Word l = c.decode_bits(s);
        ASSERT_EQ(oracle::syndrome(rows, l), s);
        ASSERT_EQ(std::popcount(l), best[s]) << "syndrome " << s;
    }
}

INSTANTIATE_TEST_SUITE_P(Builtins, BuiltinClassical,
                         ::testing::Values(Params{"rep3", 3, 1, 3}, Params{"rep5", 5, 1, 5},
                                           Params{"hamming74", 7, 4, 3}, Params{"golay23", 23, 11, 7}),
                         [](const auto& info) { return std::string(info.param.name); });

TEST(ClassicalCode, RepetitionCoupling) {
    ClassicalCode c = ClassicalCode::builtin("rep3");
    EXPECT_EQ(c.coupling(), BinaryMatrix::from_strings({"11"}));
}

TEST(ClassicalCode, TieBreakIsLexicographic) {
    // [4,1,4] repetition: syndrome of weight-2 errors has two leaders.
    ClassicalCode c = ClassicalCode::from_parity_check(
        BinaryMatrix::from_strings({"1100", "1010", "1001"}), 4, "rep4");
    const Word e = 0b0011;  // positions 0 and 1
    const Word leader = c.decode_bits(c.syndrome_bits(e));
    EXPECT_EQ(std::popcount(leader), 2);
    // As strings "1100" and "0011"; the second is smaller.
    EXPECT_EQ(leader, 0b1100U);
}

TEST(ClassicalCode, PermutesNonSystematicInput) {
    // Hamming checks with the identity first.
    BinaryMatrix h = BinaryMatrix::from_strings({"1001101", "0101011", "0010111"});
    ClassicalCode c = ClassicalCode::from_parity_check(h, {}, "h");
    EXPECT_EQ(c.distance(), 3U);
    BinaryMatrix restored(3, 7);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t col = 0; col < 7; ++col) {
            restored.set(i, c.column_permutation()[col], c.parity_check().get(i, col));
        }
    }
    EXPECT_TRUE(oracle::same_span(oracle::rows_of(restored), oracle::rows_of(h)));
}

TEST(ClassicalCode, Errors) {
    EXPECT_THROW(ClassicalCode::from_parity_check(BinaryMatrix::from_strings({"110", "110"})), RankError);
    EXPECT_THROW(ClassicalCode::from_parity_check(BinaryMatrix::from_strings({"110", "011"}), 2), std::invalid_argument);
    EXPECT_THROW(ClassicalCode::builtin("rep7"), UnknownNameError);
}

TEST(ClassicalCode, GolayCheckIsCyclicGolay) {
    BinaryMatrix h = golay_parity_check();
    EXPECT_EQ(h.rows(), 11U);
    EXPECT_EQ(h.cols(), 23U);
    EXPECT_EQ(rank(h), 11U);
    // Cyclic shifts of the generator polynomial are codewords.
    BinaryVector g = BinaryVector::from_string("10101110001100000000000");
    for (std::size_t shift = 0; shift < 23; ++shift) {
        BinaryVector s(23);
        for (std::size_t i = 0; i < 23; ++i) {
            s.set((i + shift) % 23, g.get(i));
        }
        EXPECT_TRUE(h.mul_transpose(s).is_zero());
    }
}
