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

#include <algorithm>
#include <bit>
#include <numeric>

#include "qdistill/error.hpp"

namespace qdistill {

namespace {

Word tail_mask(std::size_t len) {
    std::size_t r = len % kWordBits;
    return r == 0 ? ~Word{0} : (Word{1} << r) - 1;
}

}  // namespace

// ---------------------------------------------------------------- BinaryVector

BinaryVector::BinaryVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BinaryVector BinaryVector::from_string(std::string_view bits) {
    BinaryVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i, true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1': " + std::string(bits));
        }
    }
    return v;
}

BinaryVector BinaryVector::from_u64(Word value, std::size_t len) {
    if (len > kWordBits) {
        throw DimensionError("from_u64 supports at most 64 bits");
    }
    BinaryVector v(len);
    if (len > 0) {
        v.words_[0] = value & tail_mask(len);
    }
    return v;
}

BinaryVector BinaryVector::unit(std::size_t len, std::size_t index) {
    BinaryVector v(len);
    v.set(index, true);
    return v;
}

void BinaryVector::set(std::size_t i, bool value) {
    Word bit = Word{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= bit;
    } else {
        words_[i / kWordBits] &= ~bit;
    }
}

std::size_t BinaryVector::weight() const {
    std::size_t w = 0;
    for (Word x : words_) {
        w += static_cast<std::size_t>(std::popcount(x));
    }
    return w;
}

bool BinaryVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word x) { return x == 0; });
}

bool BinaryVector::dot(const BinaryVector& other) const {
    if (other.len_ != len_) {
        throw DimensionError("inner product of vectors of length " + std::to_string(len_) + " and " +
                             std::to_string(other.len_));
    }
    Word acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BinaryVector& BinaryVector::operator^=(const BinaryVector& other) {
    if (other.len_ != len_) {
        throw DimensionError("xor of vectors of length " + std::to_string(len_) + " and " +
                             std::to_string(other.len_));
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

Word BinaryVector::to_u64() const {
    if (len_ > kWordBits) {
        throw DimensionError("to_u64 on a vector longer than 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BinaryVector::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::vector<int> BinaryVector::to_ints() const {
    std::vector<int> out(len_);
    for (std::size_t i = 0; i < len_; ++i) {
        out[i] = get(i) ? 1 : 0;
    }
    return out;
}

bool BinaryVector::operator==(const BinaryVector& other) const {
    return len_ == other.len_ && std::equal(words_.begin(), words_.end(), other.words_.begin());
}

std::strong_ordering BinaryVector::operator<=>(const BinaryVector& other) const {
    if (len_ != other.len_) {
        return len_ <=> other.len_;
    }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // The first differing position decides; a 0 there sorts first.
            Word bit = diff & (~diff + 1);
            return (words_[k] & bit) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
    BinaryMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BinaryVector>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<BinaryVector> vs;
    vs.reserve(rows.size());
    for (const auto& s : rows) {
        if (s.size() != cols) {
            throw DimensionError("ragged matrix rows");
        }
        vs.push_back(BinaryVector::from_string(s));
    }
    return from_rows(vs, cols);
}

BinaryMatrix BinaryMatrix::from_ints(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("ragged matrix rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            int x = rows[r][c];
            if (x != 0 && x != 1) {
                throw std::invalid_argument("matrix entries must be 0 or 1");
            }
            m.set(r, c, x == 1);
        }
    }
    return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    Word bit = Word{1} << (c % kWordBits);
    Word& w = data_[r * stride_ + c / kWordBits];
    w = value ? (w | bit) : (w & ~bit);
}

BinaryVector BinaryMatrix::row(std::size_t r) const {
    BinaryVector v(cols_);
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * stride_), stride_, v.words().begin());
    return v;
}

void BinaryMatrix::set_row(std::size_t r, const BinaryVector& v) {
    if (v.size() != cols_) {
        throw DimensionError("row length " + std::to_string(v.size()) + " does not match " +
                             std::to_string(cols_) + " columns");
    }
    std::copy(v.words().begin(), v.words().end(), data_.begin() + static_cast<std::ptrdiff_t>(r * stride_));
}

void BinaryMatrix::xor_row_into(std::size_t src, std::size_t dst) {
    for (std::size_t k = 0; k < stride_; ++k) {
        data_[dst * stride_ + k] ^= data_[src * stride_ + k];
    }
}

void BinaryMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t k = 0; k < stride_; ++k) {
        std::swap(data_[a * stride_ + k], data_[b * stride_ + k]);
    }
}

void BinaryMatrix::append_row(const BinaryVector& v) {
    if (rows_ == 0 && cols_ == 0) {
        cols_ = v.size();
        stride_ = words_for(cols_);
    }
    if (v.size() != cols_) {
        throw DimensionError("appended row has the wrong length");
    }
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

BinaryMatrix BinaryMatrix::transpose() const {
    BinaryMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, c)) {
                t.set(c, r, true);
            }
        }
    }
    return t;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const std::size_t> perm) const {
    if (perm.size() != cols_) {
        throw DimensionError("permutation length does not match column count");
    }
    BinaryMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (get(r, perm[c])) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::select_columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) {
        throw DimensionError("column range out of bounds");
    }
    BinaryMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < count; ++c) {
            if (get(r, first + c)) {
                out.set(r, c, true);
            }
        }
    }
    return out;
}

BinaryMatrix BinaryMatrix::stack(const BinaryMatrix& top, const BinaryMatrix& bottom) {
    if (top.rows_ == 0) {
        return bottom;
    }
    if (bottom.rows_ == 0) {
        return top;
    }
    if (top.cols_ != bottom.cols_) {
        throw DimensionError("stacking matrices with different column counts");
    }
    BinaryMatrix out = top;
    out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
    out.rows_ += bottom.rows_;
    return out;
}

BinaryVector BinaryMatrix::mul_transpose(const BinaryVector& v) const {
    if (v.size() != cols_) {
        throw DimensionError("vector of length " + std::to_string(v.size()) + " against matrix with " +
                             std::to_string(cols_) + " columns");
    }
    BinaryVector out(rows_);
    auto vw = v.words();
    for (std::size_t r = 0; r < rows_; ++r) {
        Word acc = 0;
        for (std::size_t k = 0; k < stride_; ++k) {
            acc ^= data_[r * stride_ + k] & vw[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(r, true);
        }
    }
    return out;
}

bool BinaryMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Word x) { return x == 0; });
}

std::size_t BinaryMatrix::count_ones() const {
    std::size_t n = 0;
    for (Word x : data_) {
        n += static_cast<std::size_t>(std::popcount(x));
    }
    return n;
}

std::vector<std::vector<int>> BinaryMatrix::to_ints() const {
    std::vector<std::vector<int>> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r).to_ints());
    }
    return out;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out.push_back(row(r).to_string());
    }
    return out;
}

// ---------------------------------------------------------------- algorithms

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    BinaryMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out = c.row_words(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.get(i, k)) {
                auto src = b.row_words(k);
                for (std::size_t w = 0; w < out.size(); ++w) {
                    out[w] ^= src[w];
                }
            }
        }
    }
    return c;
}

BinaryMatrix rref(const BinaryMatrix& a, std::vector<std::size_t>* pivots) {
    BinaryMatrix m = a;
    std::vector<std::size_t> piv;
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < m.rows(); ++c) {
        std::size_t found = m.rows();
        for (std::size_t r = next; r < m.rows(); ++r) {
            if (m.get(r, c)) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) {
            continue;
        }
        m.swap_rows(found, next);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r != next && m.get(r, c)) {
                m.xor_row_into(next, r);
            }
        }
        piv.push_back(c);
        ++next;
    }
    BinaryMatrix out(next, m.cols());
    for (std::size_t r = 0; r < next; ++r) {
        out.set_row(r, m.row(r));
    }
    if (pivots != nullptr) {
        *pivots = std::move(piv);
    }
    return out;
}

std::size_t rank(const BinaryMatrix& a) {
    return rref(a).rows();
}

SystematicForm systematic_form(const BinaryMatrix& h) {
    const std::size_t r = h.rows();
    const std::size_t n = h.cols();
    BinaryMatrix m = h;
    std::vector<std::size_t> pivot_col(r);
    std::size_t next = r;
    for (std::size_t c = n; c-- > 0 && next > 0;) {
        std::size_t found = next;
        for (std::size_t i = 0; i < next; ++i) {
            if (m.get(i, c)) {
                found = i;
                break;
            }
        }
        if (found == next) {
            continue;
        }
        --next;
        m.swap_rows(found, next);
        for (std::size_t i = 0; i < r; ++i) {
            if (i != next && m.get(i, c)) {
                m.xor_row_into(next, i);
            }
        }
        pivot_col[next] = c;
    }
    if (next != 0) {
        throw RankError("parity-check matrix is rank deficient (rank " + std::to_string(r - next) + " < " +
                        std::to_string(r) + " rows)");
    }
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivot_col) {
        is_pivot[c] = true;
    }
    SystematicForm out;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            out.col_perm.push_back(c);
        }
    }
    out.col_perm.insert(out.col_perm.end(), pivot_col.begin(), pivot_col.end());
    out.matrix = m.permute_columns(out.col_perm);
    return out;
}

BinaryMatrix nullspace_basis(const BinaryMatrix& a) {
    std::vector<std::size_t> pivots;
    BinaryMatrix red = rref(a, &pivots);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) {
        is_pivot[c] = true;
    }
    BinaryMatrix basis(0, a.cols());
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        BinaryVector v(a.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            if (red.get(i, f)) {
                v.set(pivots[i], true);
            }
        }
        basis.append_row(v);
    }
    return basis;
}

bool in_row_space(const BinaryMatrix& a, const BinaryVector& v) {
    if (v.size() != a.cols()) {
        throw DimensionError("in_row_space: vector length mismatch");
    }
    std::vector<std::size_t> pivots;
    BinaryMatrix red = rref(a, &pivots);
    BinaryVector w = v;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (w.get(pivots[i])) {
            w ^= red.row(i);
        }
    }
    return w.is_zero();
}

bool same_row_space(const BinaryMatrix& a, const BinaryMatrix& b) {
    if (a.cols() != b.cols()) {
        return false;
    }
    return rref(a) == rref(b);
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
    std::vector<std::size_t> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        inv[perm[i]] = i;
    }
    return inv;
}

}  // namespace qdistill
