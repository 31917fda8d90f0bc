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

#include "qdistill/gf2.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdistill/error.hpp"

using namespace qdistill;

namespace {

BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BinaryMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, rng() & 1);
        }
    }
    return m;
}

}  // namespace

TEST(BinaryVector, StringRoundTripAndWeight) {
    BinaryVector v = BinaryVector::from_string("1101000");
    EXPECT_EQ(v.size(), 7U);
    EXPECT_EQ(v.weight(), 3U);
    EXPECT_EQ(v.to_string(), "1101000");
    EXPECT_EQ(v.to_u64(), 0b0001011U);
    EXPECT_EQ(BinaryVector::from_u64(0b0001011, 7), v);
}

TEST(BinaryVector, LongVectorsCrossWordBoundary) {
    BinaryVector a(130);
    BinaryVector b(130);
    a.set(0, true);
    a.set(64, true);
    a.set(129, true);
    b.set(64, true);
    b.set(129, true);
    EXPECT_EQ(a.weight(), 3U);
    EXPECT_FALSE(a.dot(b));
    a ^= b;
    EXPECT_EQ(a.weight(), 1U);
    EXPECT_TRUE(a.get(0));
}

TEST(BinaryVector, RejectsBadCharacters) { EXPECT_THROW(BinaryVector::from_string("10a1"), std::invalid_argument); }

TEST(BinaryMatrix, RankMatchesSpanSize) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 8;
        const std::size_t cols = 1 + rng() % 12;
        BinaryMatrix m = random_matrix(rng, rows, cols);
        const std::size_t span_size = oracle::span(oracle::rows_of(m)).size();
        EXPECT_EQ(std::size_t{1} << rank(m), span_size);
    }
}

TEST(BinaryMatrix, RrefPreservesRowSpace) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 10);
        std::vector<std::size_t> pivots;
        BinaryMatrix r = rref(m, &pivots);
        EXPECT_TRUE(oracle::same_span(oracle::rows_of(m), oracle::rows_of(r)));
        EXPECT_EQ(pivots.size(), rank(m));
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            for (std::size_t j = 0; j < r.rows(); ++j) {
                EXPECT_EQ(r.get(j, pivots[i]), i == j);
            }
        }
    }
}

TEST(BinaryMatrix, NullspaceIsExactKernel) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cols = 1 + rng() % 10;
        BinaryMatrix m = random_matrix(rng, 1 + rng() % 6, cols);
        const std::vector<oracle::Word> rows = oracle::rows_of(m);
        std::set<oracle::Word> kernel;
        for (oracle::Word v = 0; v < (oracle::Word{1} << cols); ++v) {
            if (oracle::syndrome(rows, v) == 0) {
                kernel.insert(v);
            }
        }
        EXPECT_EQ(oracle::span(oracle::rows_of(nullspace_basis(m))), kernel);
    }
}

TEST(BinaryMatrix, MulTransposeAndProduct) {
    std::mt19937_64 rng(14);
    BinaryMatrix a = random_matrix(rng, 5, 9);
    BinaryMatrix b = random_matrix(rng, 9, 4);
    BinaryMatrix c = mat_mul(a, b);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < 9; ++k) {
                s ^= a.get(i, k) & b.get(k, j);
            }
            EXPECT_EQ(c.get(i, j), s == 1);
        }
    }
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_THROW(mat_mul(a, a), DimensionError);
}

TEST(SystematicForm, ProducesIdentityTailAndSameCode) {
    std::mt19937_64 rng(15);
    int checked = 0;
    while (checked < 100) {
        const std::size_t r = 1 + rng() % 5;
        const std::size_t m = r + 1 + rng() % 6;
        BinaryMatrix h = random_matrix(rng, r, m);
        if (rank(h) != r) {
            EXPECT_THROW(systematic_form(h), RankError);
            continue;
        }
        ++checked;
        SystematicForm sf = systematic_form(h);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                EXPECT_EQ(sf.matrix.get(i, m - r + j), i == j);
            }
        }
        // Same row space once the columns are put back.
        BinaryMatrix restored(r, m);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t c = 0; c < m; ++c) {
                restored.set(i, sf.col_perm[c], sf.matrix.get(i, c));
            }
        }
        EXPECT_TRUE(oracle::same_span(oracle::rows_of(restored), oracle::rows_of(h)));
    }
}

TEST(SystematicForm, LeavesSystematicInputUntouched) {
    BinaryMatrix h = BinaryMatrix::from_strings({"1101100", "1011010", "0111001"});
    SystematicForm sf = systematic_form(h);
    EXPECT_EQ(sf.matrix, h);
    for (std::size_t c = 0; c < 7; ++c) {
        EXPECT_EQ(sf.col_perm[c], c);
    }
}
