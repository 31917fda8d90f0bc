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

#include "qdistill/css_code.hpp"

#include <bit>

#include "qdistill/classical_code.hpp"
#include "qdistill/error.hpp"

namespace qdistill {

namespace {

constexpr std::size_t kMaxCosetEnumeration = 26;

void check_css_pair(const BinaryMatrix& h_z, const BinaryMatrix& h_x) {
    if (h_z.cols() != h_x.cols()) {
        throw DimensionError("H_Z has " + std::to_string(h_z.cols()) + " columns but H_X has " +
                             std::to_string(h_x.cols()));
    }
    if (!mat_mul(h_x, h_z.transpose()).is_zero()) {
        throw OrthogonalityError("H_X H_Z^T is nonzero");
    }
    if (rank(h_z) != h_z.rows()) {
        throw RankError("H_Z does not have full row rank");
    }
    if (rank(h_x) != h_x.rows()) {
        throw RankError("H_X does not have full row rank");
    }
}

// Minimum-weight element of ker(kernel_of) outside rowspace(stabilizers),
// lexicographically smallest among equal weights. Assumes exactly one
// logical degree of freedom.
BinaryVector minimum_logical(const BinaryMatrix& kernel_of, const BinaryMatrix& stabilizers) {
    BinaryMatrix kernel = nullspace_basis(kernel_of);
    BinaryVector seed;
    for (std::size_t i = 0; i < kernel.rows(); ++i) {
        if (!in_row_space(stabilizers, kernel.row(i))) {
            seed = kernel.row(i);
            break;
        }
    }
    if (seed.empty()) {
        throw UnsupportedCodeError("code has no logical operator");
    }
    const std::size_t g = stabilizers.rows();
    if (g > kMaxCosetEnumeration) {
        throw UnsupportedCodeError("too many stabilizer rows to search for a minimum-weight logical; supply one");
    }
    BinaryVector best = seed;
    BinaryVector cur = seed;
    const std::uint64_t total = std::uint64_t{1} << g;
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= stabilizers.row(static_cast<std::size_t>(std::countr_zero(i)));
        std::size_t w = cur.weight();
        std::size_t bw = best.weight();
        if (w < bw || (w == bw && cur < best)) {
            best = cur;
        }
    }
    return best;
}

Word pack(const BinaryVector& v) { return v.empty() ? 0 : v.to_u64(); }

Word syndrome_of(std::span<const Word> rows, Word v) {
    Word s = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        s |= static_cast<Word>(std::popcount(v & rows[j]) & 1) << j;
    }
    return s;
}

}  // namespace

BinaryMatrix StandardFormCheck::x_rows() const {
    const std::size_t n = num_qubits();
    BinaryMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i) {
        out.set(i, i, true);
        for (std::size_t j = 0; j < s; ++j) {
            out.set(i, r + j, a.get(i, j));
        }
        for (std::size_t j = 0; j < num_logical(); ++j) {
            out.set(i, r + s + j, b.get(i, j));
        }
    }
    return out;
}

BinaryMatrix StandardFormCheck::z_rows() const {
    const std::size_t n = num_qubits();
    BinaryMatrix out(s, n);
    for (std::size_t i = 0; i < s; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            out.set(i, j, d.get(i, j));
        }
        out.set(i, r + i, true);
        for (std::size_t j = 0; j < num_logical(); ++j) {
            out.set(i, r + s + j, f.get(i, j));
        }
    }
    return out;
}

BinaryMatrix StandardFormCheck::x_rows_original() const {
    return x_rows().permute_columns(invert_permutation(qubit_perm));
}

BinaryMatrix StandardFormCheck::z_rows_original() const {
    return z_rows().permute_columns(invert_permutation(qubit_perm));
}

StandardFormCheck standard_form(const BinaryMatrix& h_z, const BinaryMatrix& h_x) {
    check_css_pair(h_z, h_x);
    const std::size_t n = h_x.cols();

    std::vector<std::size_t> x_pivots;
    BinaryMatrix x = rref(h_x, &x_pivots);

    // Z rows are reduced using only columns that are not X pivots. A Z row
    // supported on X pivots alone would anticommute with an X row, so this
    // restriction keeps full rank.
    std::vector<bool> is_x_pivot(n, false);
    for (std::size_t c : x_pivots) {
        is_x_pivot[c] = true;
    }
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < n; ++c) {
        if (!is_x_pivot[c]) {
            order.push_back(c);
        }
    }
    order.insert(order.end(), x_pivots.begin(), x_pivots.end());
    std::vector<std::size_t> z_pivots_local;
    BinaryMatrix z = rref(h_z.permute_columns(order), &z_pivots_local).permute_columns(invert_permutation(order));

    StandardFormCheck form;
    form.r = x.rows();
    form.s = z.rows();
    std::vector<bool> used(is_x_pivot);
    form.qubit_perm = x_pivots;
    for (std::size_t c : z_pivots_local) {
        form.qubit_perm.push_back(order[c]);
        used[order[c]] = true;
    }
    for (std::size_t c = 0; c < n; ++c) {
        if (!used[c]) {
            form.qubit_perm.push_back(c);
        }
    }

    const BinaryMatrix xb = x.permute_columns(form.qubit_perm);
    const BinaryMatrix zb = z.permute_columns(form.qubit_perm);
    const std::size_t k = n - form.r - form.s;
    form.a = BinaryMatrix(form.r, form.s);
    form.b = BinaryMatrix(form.r, k);
    form.d = BinaryMatrix(form.s, form.r);
    form.f = BinaryMatrix(form.s, k);
    for (std::size_t i = 0; i < form.r; ++i) {
        for (std::size_t j = 0; j < form.s; ++j) {
            form.a.set(i, j, xb.get(i, form.r + j));
        }
        for (std::size_t j = 0; j < k; ++j) {
            form.b.set(i, j, xb.get(i, form.r + form.s + j));
        }
    }
    for (std::size_t i = 0; i < form.s; ++i) {
        for (std::size_t j = 0; j < form.r; ++j) {
            form.d.set(i, j, zb.get(i, j));
        }
        for (std::size_t j = 0; j < k; ++j) {
            form.f.set(i, j, zb.get(i, form.r + form.s + j));
        }
    }
    return form;
}

Circuit synthesize_encoding_circuit(const StandardFormCheck& form) {
    const std::size_t n = form.num_qubits();
    const std::size_t r = form.r;
    const std::size_t s = form.s;
    const std::size_t k = form.num_logical();
    Circuit clearing(n);
    const auto& q = form.qubit_perm;
    // CX(i, j) takes X_i to X_i X_j, so it clears entry j of X row i.
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            if (form.a.get(i, j)) {
                clearing.cnot(q[i], q[r + j]);
            }
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (form.b.get(i, j)) {
                clearing.cnot(q[i], q[r + s + j]);
            }
        }
    }
    // The D block is now zero. CX(c, t) takes Z_t to Z_c Z_t, clearing F.
    for (std::size_t l = 0; l < s; ++l) {
        for (std::size_t j = 0; j < k; ++j) {
            if (form.f.get(l, j)) {
                clearing.cnot(q[r + s + j], q[r + l]);
            }
        }
    }
    return clearing.reversed();
}

CssCode CssCode::from_matrices(const BinaryMatrix& h_z, const BinaryMatrix& h_x, std::optional<BinaryVector> logical_x,
                               std::optional<BinaryVector> logical_z, std::string name) {
    check_css_pair(h_z, h_x);
    const std::size_t n = h_x.cols();
    if (n == 0 || n > kMaxQubits) {
        throw UnsupportedCodeError("CSS codes need 1 to " + std::to_string(kMaxQubits) + " qubits, got " +
                                   std::to_string(n));
    }
    if (h_z.rows() + h_x.rows() + 1 != n) {
        throw UnsupportedCodeError("r_Z + r_X = " + std::to_string(h_z.rows() + h_x.rows()) +
                                   " but one logical qubit needs n - 1 = " + std::to_string(n - 1));
    }

    CssCode code;
    code.name_ = std::move(name);
    code.n_ = n;
    code.h_z_ = h_z;
    code.h_x_ = h_x;

    if (logical_x) {
        if (logical_x->size() != n) {
            throw DimensionError("logical X has length " + std::to_string(logical_x->size()));
        }
        if (!h_z.mul_transpose(*logical_x).is_zero() || in_row_space(h_x, *logical_x)) {
            throw std::invalid_argument("supplied logical X is not a nontrivial logical operator");
        }
        code.logical_x_ = *logical_x;
    } else {
        code.logical_x_ = minimum_logical(h_z, h_x);
    }
    if (logical_z) {
        if (logical_z->size() != n) {
            throw DimensionError("logical Z has length " + std::to_string(logical_z->size()));
        }
        if (!h_x.mul_transpose(*logical_z).is_zero() || in_row_space(h_z, *logical_z)) {
            throw std::invalid_argument("supplied logical Z is not a nontrivial logical operator");
        }
        code.logical_z_ = *logical_z;
    } else {
        code.logical_z_ = minimum_logical(h_x, h_z);
    }
    if (!code.logical_x_.dot(code.logical_z_)) {
        throw std::invalid_argument("logical X and logical Z commute");
    }

    code.form_ = qdistill::standard_form(h_z, h_x);
    code.encoder_ = synthesize_encoding_circuit(code.form_);
    code.hz_rows_ = pack_rows(h_z);
    code.hx_rows_ = pack_rows(h_x);
    code.lx_ = pack(code.logical_x_);
    code.lz_ = pack(code.logical_z_);
    code.x_leaders_ = coset_leader_table(code.hz_rows_, n);
    code.z_leaders_ = coset_leader_table(code.hx_rows_, n);
    return code;
}

CssCode CssCode::builtin(std::string_view name) {
    if (name == "steane") {
        BinaryMatrix h = BinaryMatrix::from_strings({"1001101", "0101011", "0010111"});
        BinaryVector logical = BinaryVector::from_string("1101000");
        return from_matrices(h, h, logical, logical, "steane");
    }
    if (name == "golay_q") {
        BinaryMatrix h = golay_parity_check();
        return from_matrices(h, h, {}, {}, "golay_q");
    }
    throw UnknownNameError("unknown CSS code '" + std::string(name) + "'");
}

std::vector<std::string> CssCode::builtin_names() { return {"steane", "golay_q"}; }

Circuit CssCode::preparation_circuit(LogicalState target) const {
    std::vector<GateKind> prep(n_, target == LogicalState::Zero ? GateKind::PrepZero : GateKind::PrepPlus);
    for (std::size_t i = 0; i < form_.r; ++i) {
        prep[form_.qubit_perm[i]] = GateKind::PrepPlus;
    }
    for (std::size_t i = 0; i < form_.s; ++i) {
        prep[form_.qubit_perm[form_.r + i]] = GateKind::PrepZero;
    }
    Circuit c(n_);
    for (std::size_t qb = 0; qb < n_; ++qb) {
        c.append({prep[qb], static_cast<std::uint32_t>(qb)});
    }
    for (const Gate& g : encoder_.gates()) {
        c.append(g);
    }
    return c;
}

Word CssCode::syndrome_x_bits(Word e) const { return syndrome_of(hz_rows_, e); }
Word CssCode::syndrome_z_bits(Word f) const { return syndrome_of(hx_rows_, f); }

BinaryVector CssCode::syndrome_x(const BinaryVector& e) const {
    if (e.size() != n_) {
        throw DimensionError("syndrome_x: vector of length " + std::to_string(e.size()) + " for " +
                             std::to_string(n_) + " qubits");
    }
    return h_z_.mul_transpose(e);
}

BinaryVector CssCode::syndrome_z(const BinaryVector& f) const {
    if (f.size() != n_) {
        throw DimensionError("syndrome_z: vector of length " + std::to_string(f.size()) + " for " +
                             std::to_string(n_) + " qubits");
    }
    return h_x_.mul_transpose(f);
}

bool CssCode::logical_parity(const BinaryVector& v, LogicalOperator which) const {
    return v.dot(which == LogicalOperator::Zbar ? logical_z_ : logical_x_);
}

OuterCssCode OuterCssCode::from_matrices(const BinaryMatrix& h_z, const BinaryMatrix& h_x, std::string name) {
    OuterCssCode code;
    code.form_ = qdistill::standard_form(h_z, h_x);
    const std::size_t m = code.form_.num_qubits();
    if (m > ClassicalCode::kMaxLength) {
        throw UnsupportedCodeError("outer code length " + std::to_string(m) + " exceeds " +
                                   std::to_string(ClassicalCode::kMaxLength));
    }
    if (code.form_.num_logical() == 0) {
        throw UnsupportedCodeError("outer code encodes no qubits");
    }
    code.name_ = std::move(name);
    code.encoder_ = synthesize_encoding_circuit(code.form_);
    const auto& q = code.form_.qubit_perm;
    code.plus_.assign(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(code.form_.r));
    code.zero_.assign(q.begin() + static_cast<std::ptrdiff_t>(code.form_.r),
                      q.begin() + static_cast<std::ptrdiff_t>(code.form_.r + code.form_.s));
    code.info_.assign(q.begin() + static_cast<std::ptrdiff_t>(code.form_.r + code.form_.s), q.end());
    code.z_checks_ = code.form_.z_rows_original();
    code.x_checks_ = code.form_.x_rows_original();
    code.x_leaders_ = coset_leader_table(pack_rows(code.z_checks_), m);
    code.z_leaders_ = coset_leader_table(pack_rows(code.x_checks_), m);
    return code;
}

}  // namespace qdistill
