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

// Slow, independent reference computations used by the tests. Nothing here
// calls the decoders, standard-form routines or frame propagation under
// test; inputs are plain matrices read out of the library objects.

#ifndef QDISTILL_TESTS_ORACLES_HPP
#define QDISTILL_TESTS_ORACLES_HPP

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qdistill/circuit.hpp"
#include "qdistill/gf2.hpp"

namespace oracle {

using Word = std::uint64_t;

inline std::vector<Word> rows_of(const qdistill::BinaryMatrix& h) {
    std::vector<Word> out;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        Word w = 0;
        for (std::size_t c = 0; c < h.cols(); ++c) {
            w |= Word{h.get(r, c)} << c;
        }
        out.push_back(w);
    }
    return out;
}

inline Word syndrome(const std::vector<Word>& rows, Word v) {
    Word s = 0;
    for (std::size_t j = 0; j < rows.size(); ++j) {
        s |= Word(std::popcount(rows[j] & v) & 1) << j;
    }
    return s;
}

inline bool parity(Word v) { return std::popcount(v) & 1; }

/// Every element of the row space.
inline std::set<Word> span(const std::vector<Word>& rows) {
    std::set<Word> out{0};
    for (Word r : rows) {
        std::set<Word> next = out;
        for (Word v : out) {
            next.insert(v ^ r);
        }
        out.swap(next);
    }
    return out;
}

/// Row-space equality by membership of both generator sets in the span of
/// the other, up to 2^20 elements.
inline bool same_span(const std::vector<Word>& a, const std::vector<Word>& b) {
    const std::set<Word> sa = span(a);
    const std::set<Word> sb = span(b);
    return sa == sb;
}

/// Minimum weight of each coset, indexed by syndrome, by enumerating all
/// 2^m words.
inline std::vector<int> min_weight_by_syndrome(const std::vector<Word>& rows, std::size_t m) {
    std::vector<int> best(std::size_t{1} << rows.size(), 1000);
    for (Word v = 0; v < (Word{1} << m); ++v) {
        int& b = best[syndrome(rows, v)];
        b = std::min(b, std::popcount(v));
    }
    return best;
}

/// Dense Pauli operator on n qubits conjugated gate by gate.
struct DensePauli {
    std::vector<int> x;
    std::vector<int> z;
};

inline void conjugate(DensePauli& p, const qdistill::Circuit& c) {
    for (const qdistill::Gate& g : c.gates()) {
        if (g.kind != qdistill::GateKind::Cnot) {
            continue;
        }
        // CX: X_c -> X_c X_t, Z_t -> Z_c Z_t.
        p.x[g.q1] = (p.x[g.q1] + p.x[g.q0]) % 2;
        p.z[g.q0] = (p.z[g.q0] + p.z[g.q1]) % 2;
    }
}

inline Word pack(const std::vector<int>& bits) {
    Word w = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        w |= Word(bits[i] & 1) << i;
    }
    return w;
}

/// Minimum-weight word with the given syndrome, unique ties assumed.
inline Word leader(const std::vector<Word>& rows, std::size_t m, Word s) {
    Word best = 0;
    int best_w = 1000;
    for (Word v = 0; v < (Word{1} << m); ++v) {
        if (syndrome(rows, v) == s && std::popcount(v) < best_w) {
            best = v;
            best_w = std::popcount(v);
        }
    }
    return best;
}

/// Estimated (syndrome, logical) of every input block of an X round: parity
/// blocks j read x_{k+j} plus the coupled data blocks, so the readout of each
/// syndrome bit across the m blocks is the classical syndrome of that bit's
/// m-bit pattern, decoded by minimum weight.
struct Estimate {
    Word syndrome = 0;
    bool logical = false;
    bool operator==(const Estimate&) const = default;
};

inline std::vector<Estimate> x_round_estimates(const std::vector<Word>& block_x, const std::vector<Word>& hz,
                                               Word logical_z, const std::vector<Word>& h_classical,
                                               bool with_logical) {
    const std::size_t m = block_x.size();
    std::vector<Estimate> out(m);
    auto decode_bit = [&](auto bit_of, auto store) {
        Word v = 0;
        for (std::size_t b = 0; b < m; ++b) {
            v |= Word(bit_of(b)) << b;
        }
        const Word guess = leader(h_classical, m, syndrome(h_classical, v));
        for (std::size_t b = 0; b < m; ++b) {
            store(b, (guess >> b) & 1);
        }
    };
    for (std::size_t i = 0; i < hz.size(); ++i) {
        decode_bit([&](std::size_t b) { return (syndrome(hz, block_x[b]) >> i) & 1; },
                   [&](std::size_t b, Word bit) { out[b].syndrome |= bit << i; });
    }
    if (with_logical) {
        decode_bit([&](std::size_t b) { return parity(block_x[b] & logical_z); },
                   [&](std::size_t b, Word bit) { out[b].logical = bit; });
    }
    return out;
}

/// Probability that a single block, hit by independent X flips of rate p and
/// decoded by minimum weight against hz, is restored up to a stabilizer.
/// Full 2^n enumeration.
inline double exact_fidelity(const std::vector<Word>& hz, Word logical_z, std::size_t n, double p) {
    std::vector<Word> leaders(std::size_t{1} << hz.size());
    for (Word s = 0; s < leaders.size(); ++s) {
        leaders[s] = leader(hz, n, s);
    }
    double f = 0.0;
    for (Word e = 0; e < (Word{1} << n); ++e) {
        const Word residual = e ^ leaders[syndrome(hz, e)];
        if (!parity(residual & logical_z)) {
            const int w = std::popcount(e);
            f += std::pow(p, w) * std::pow(1 - p, static_cast<double>(n) - w);
        }
    }
    return f;
}

/// Exact average fidelity of m data blocks whose syndromes are recovered by
/// shared ancillas: for each syndrome bit i the ancillas reveal H v_i where
/// v_i holds bit i of every block's syndrome, and the estimate is the
/// minimum-weight v with that classical syndrome. Ancillas are clean.
///
/// Each block collapses to its (syndrome, logical parity) class; the m-fold
/// product of class distributions is enumerated directly.
inline double exact_saving_fidelity(const std::vector<Word>& hz, Word logical_z, std::size_t n,
                                    const std::vector<Word>& h_classical, std::size_t m, double p) {
    const std::size_t r_q = hz.size();
    const std::size_t syndromes = std::size_t{1} << r_q;
    const std::size_t classes = syndromes * 2;
    std::vector<double> dist(classes, 0.0);
    for (Word e = 0; e < (Word{1} << n); ++e) {
        const int w = std::popcount(e);
        dist[syndrome(hz, e) * 2 + parity(e & logical_z)] += std::pow(p, w) * std::pow(1 - p, static_cast<double>(n) - w);
    }
    std::vector<Word> q_leaders(syndromes);
    for (Word s = 0; s < syndromes; ++s) {
        q_leaders[s] = leader(hz, n, s);
    }
    std::vector<Word> c_leaders(std::size_t{1} << h_classical.size());
    for (Word s = 0; s < c_leaders.size(); ++s) {
        c_leaders[s] = leader(h_classical, m, s);
    }

    double ok_sum = 0.0;
    std::vector<std::size_t> cls(m, 0);
    std::size_t total = 1;
    for (std::size_t b = 0; b < m; ++b) {
        total *= classes;
    }
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        double prob = 1.0;
        for (std::size_t b = 0; b < m; ++b) {
            cls[b] = rest % classes;
            rest /= classes;
            prob *= dist[cls[b]];
        }
        if (prob == 0.0) {
            continue;
        }
        std::vector<Word> estimate(m, 0);
        for (std::size_t i = 0; i < r_q; ++i) {
            Word v = 0;
            for (std::size_t b = 0; b < m; ++b) {
                v |= Word((cls[b] / 2 >> i) & 1) << b;
            }
            const Word guess = c_leaders[syndrome(h_classical, v)];
            for (std::size_t b = 0; b < m; ++b) {
                estimate[b] |= ((guess >> b) & 1) << i;
            }
        }
        std::size_t ok = 0;
        for (std::size_t b = 0; b < m; ++b) {
            const Word true_s = cls[b] / 2;
            const bool logical = cls[b] % 2;
            if (estimate[b] == true_s && logical == parity(q_leaders[true_s] & logical_z)) {
                ++ok;
            }
        }
        ok_sum += prob * static_cast<double>(ok) / static_cast<double>(m);
    }
    return ok_sum;
}

}  // namespace oracle

#endif
