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

#ifndef QDISTILL_CLASSICAL_CODE_HPP
#define QDISTILL_CLASSICAL_CODE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qdistill/gf2.hpp"

namespace qdistill {

/// An [m, k, d] binary linear code held in systematic coordinates.
///
/// The parity-check matrix is stored as H = [A^T | I_r] with r = m - k; the
/// first k positions are information positions and the last r are parity
/// positions. When the matrix supplied by the caller was not already of that
/// shape, its columns were permuted and `column_permutation()` records how:
/// position c of this code is column `column_permutation()[c]` of the input.
/// Every vector passed to or returned from the code is in systematic
/// coordinates.
///
/// Decoding is a full syndrome table of minimum-weight coset leaders (ties
/// go to the lexicographically smallest vector), so codes are limited to
/// m <= 63 and r <= 20.
class ClassicalCode {
  public:
    static constexpr std::size_t kMaxLength = 63;
    static constexpr std::size_t kMaxRedundancy = 20;
    static constexpr std::size_t kMaxEnumerableDimension = 26;

    /// Builds a code from a full-row-rank parity-check matrix. The minimum
    /// distance is always computed by enumerating codewords; a declared
    /// distance that disagrees is rejected.
    static ClassicalCode from_parity_check(const BinaryMatrix& h, std::optional<std::size_t> declared_distance = {},
                                           std::string name = {});

    /// rep3, rep5, hamming74 or golay23.
    static ClassicalCode builtin(std::string_view name);
    static std::vector<std::string> builtin_names();

    const std::string& name() const { return name_; }
    std::size_t length() const { return m_; }
    std::size_t dimension() const { return k_; }
    std::size_t redundancy() const { return m_ - k_; }
    std::size_t distance() const { return d_; }
    std::size_t correctable() const { return (d_ - 1) / 2; }

    const BinaryMatrix& parity_check() const { return h_; }
    /// k x r matrix A with H = [A^T | I_r].
    const BinaryMatrix& coupling() const { return a_; }
    /// k x m generator [I_k | A].
    const BinaryMatrix& generator() const { return g_; }
    std::span<const std::size_t> column_permutation() const { return col_perm_; }

    BinaryVector syndrome(const BinaryVector& v) const;
    /// Minimum-weight vector with the given syndrome.
    BinaryVector decode(const BinaryVector& syndrome) const;

    // Word-level forms used on hot paths: bit i of the argument/result is
    // position i.
    Word syndrome_bits(Word v) const;
    Word decode_bits(Word syndrome) const { return leaders_[syndrome]; }

  private:
    ClassicalCode() = default;

    std::string name_;
    std::size_t m_ = 0;
    std::size_t k_ = 0;
    std::size_t d_ = 0;
    BinaryMatrix h_;
    BinaryMatrix a_;
    BinaryMatrix g_;
    std::vector<std::size_t> col_perm_;
    std::vector<Word> check_rows_;
    std::vector<Word> leaders_;
};

/// Syndrome-indexed table of minimum-weight coset leaders for the checks
/// `check_rows` (bit j of a syndrome is the parity against row j). Ties are
/// broken toward the lexicographically smallest vector, position 0 first.
std::vector<Word> coset_leader_table(std::span<const Word> check_rows, std::size_t length);

/// Rows of `h` as single words; requires h.cols() <= 64.
std::vector<Word> pack_rows(const BinaryMatrix& h);

/// 11 x 23 parity-check matrix of the cyclic [23,12,7] Golay code. The code
/// contains its dual, which is the row space of the returned matrix.
BinaryMatrix golay_parity_check();

/// Minimum Hamming weight over the nonzero row combinations of `generator`.
/// Enumerates all 2^k combinations in Gray-code order.
std::size_t minimum_distance(const BinaryMatrix& generator);

}  // namespace qdistill

#endif
