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

// Dense linear algebra over GF(2).
//
// Vectors and matrix rows are packed 64 bits per word, bit i of a vector
// living in word i / 64 at position i % 64. Padding bits past the logical
// length are always zero; every mutating operation maintains that, so word
// level comparisons and popcounts need no masking.

#ifndef QDISTILL_GF2_HPP
#define QDISTILL_GF2_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace qdistill {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

class BinaryVector {
  public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t len);

    // Parses a string of '0'/'1' characters; position 0 is the first character.
    static BinaryVector from_string(std::string_view bits);
    // Low `len` bits of `value`, bit i of the integer becoming entry i.
    static BinaryVector from_u64(Word value, std::size_t len);
    static BinaryVector unit(std::size_t len, std::size_t index);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    std::size_t weight() const;
    bool is_zero() const;

    // Inner product mod 2.
    bool dot(const BinaryVector& other) const;

    BinaryVector& operator^=(const BinaryVector& other);
    friend BinaryVector operator^(BinaryVector a, const BinaryVector& b) {
        a ^= b;
        return a;
    }

    // Only valid when size() <= 64.
    Word to_u64() const;

    std::span<const Word> words() const { return {words_.data(), words_.size()}; }
    std::span<Word> words() { return {words_.data(), words_.size()}; }

    std::string to_string() const;
    std::vector<int> to_ints() const;

    bool operator==(const BinaryVector& other) const;
    // Lexicographic order of the bit strings (position 0 most significant);
    // vectors of different lengths compare by length first.
    std::strong_ordering operator<=>(const BinaryVector& other) const;

  private:
    std::size_t len_ = 0;
    boost::container::small_vector<Word, 1> words_;
};

class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(std::size_t rows, std::size_t cols);

    static BinaryMatrix identity(std::size_t n);
    static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows, std::size_t cols);
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);
    static BinaryMatrix from_ints(const std::vector<std::vector<int>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U;
    }
    void set(std::size_t r, std::size_t c, bool value);

    BinaryVector row(std::size_t r) const;
    void set_row(std::size_t r, const BinaryVector& v);
    std::span<const Word> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }
    std::span<Word> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }

    void xor_row_into(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);
    void append_row(const BinaryVector& v);

    BinaryMatrix transpose() const;
    // Column c of the result is column perm[c] of this matrix.
    BinaryMatrix permute_columns(std::span<const std::size_t> perm) const;
    BinaryMatrix select_columns(std::size_t first, std::size_t count) const;
    // Rows of `top` followed by rows of `bottom`.
    static BinaryMatrix stack(const BinaryMatrix& top, const BinaryMatrix& bottom);

    // v * M^T, i.e. entry i is <v, row i>.
    BinaryVector mul_transpose(const BinaryVector& v) const;

    bool is_zero() const;
    std::size_t count_ones() const;
    std::vector<std::vector<int>> to_ints() const;
    std::vector<std::string> to_strings() const;

    bool operator==(const BinaryMatrix& other) const = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

// A * B over GF(2). Throws DimensionError if A.cols != B.rows.
BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);

std::size_t rank(const BinaryMatrix& a);

struct SystematicForm {
    BinaryMatrix matrix;                 // [A^T | I_r]
    std::vector<std::size_t> col_perm;   // column c of `matrix` is column col_perm[c] of the input
};

// Row-reduces a full-row-rank H and permutes columns so the last r columns
// form I_r. Pivots are chosen right to left, so an input already of the form
// [A^T | I_r] comes back unchanged with the identity permutation. Throws
// RankError when H is rank deficient.
SystematicForm systematic_form(const BinaryMatrix& h);

// Reduced row echelon form with leftmost pivots (lowest row index on ties).
// Zero rows are dropped. `pivots` receives the pivot column of each row.
BinaryMatrix rref(const BinaryMatrix& a, std::vector<std::size_t>* pivots = nullptr);

// Rows form a basis of {v : A v^T = 0}; there are cols - rank(A) of them.
BinaryMatrix nullspace_basis(const BinaryMatrix& a);

bool in_row_space(const BinaryMatrix& a, const BinaryVector& v);
bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b);

// Inverse of a column permutation as produced by systematic_form.
std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);

}  // namespace qdistill

#endif
