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

// Pauli frames on code blocks, CNOT propagation and the depolarizing noise
// model used for noisy ancilla preparation.

#ifndef QDISTILL_PAULI_FRAME_HPP
#define QDISTILL_PAULI_FRAME_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "qdistill/circuit.hpp"
#include "qdistill/css_code.hpp"
#include "qdistill/gf2.hpp"

namespace qdistill {

/// X_e Z_f on one block of at most 63 qubits, phase dropped. Bit q of `x`
/// (resp. `z`) is entry q of e (resp. f).
struct PauliError {
    Word x = 0;
    Word z = 0;

    static PauliError from_vectors(const BinaryVector& e, const BinaryVector& f);
    BinaryVector x_part(std::size_t n) const { return BinaryVector::from_u64(x, n); }
    BinaryVector z_part(std::size_t n) const { return BinaryVector::from_u64(z, n); }

    bool is_identity() const { return x == 0 && z == 0; }
    PauliError& operator^=(const PauliError& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend PauliError operator^(PauliError a, const PauliError& b) { return a ^= b; }
    bool operator==(const PauliError&) const = default;
};

/// Conjugation by CNOT(c, t): e_t ^= e_c, f_c ^= f_t.
inline void propagate_cnot(PauliError& err, std::size_t c, std::size_t t) {
    err.x ^= ((err.x >> c) & 1U) << t;
    err.z ^= ((err.z >> t) & 1U) << c;
}

/// Checked form of propagate_cnot for an n-qubit block.
PauliError propagate_cnot(PauliError err, std::size_t c, std::size_t t, std::size_t n);

/// Deterministic 64-bit stream keyed by (seed, stream id).
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound) by multiply-shift.
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }
    /// Uniform in (0, 1].
    double unit_open_closed() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

/// Fixed-point form of a probability: an event with this threshold fires
/// when a uniform 64-bit draw is below it. p = 1 maps to "always".
struct Bernoulli {
    explicit Bernoulli(double p);
    bool fires(std::uint64_t draw) const { return always || draw < threshold; }

    std::uint64_t threshold = 0;
    bool always = false;
};

/// Single-qubit depolarizing draw: (x, z) bits, identity w.p. 1 - p and each
/// of X, Y, Z w.p. p/3. Consumes exactly one draw.
std::pair<bool, bool> sample_depolarizing_1q(const Bernoulli& p, RngStream& rng);
/// Two-qubit depolarizing draw as a 4-bit mask x1 | z1 << 1 | x2 << 2 | z2 << 3;
/// each of the 15 nonidentity masks w.p. p/15. Consumes exactly one draw.
unsigned sample_depolarizing_2q(const Bernoulli& p, RngStream& rng);

/// Runs `circuit` gate by gate in the Pauli frame: a single-qubit
/// depolarizing event at every preparation, and a two-qubit event after
/// every CNOT. Measurements are ignored.
PauliError simulate_noisy_circuit(const Circuit& circuit, double p, RngStream& rng);

/// Noisy preparation of |0>_L or |+>_L through the code's encoder.
PauliError simulate_noisy_prep(const CssCode& code, LogicalState target, double p, RngStream& rng);

/// Same distribution and same draws as simulate_noisy_circuit, using the
/// final frame of every possible fault precomputed once.
class NoisyPrepSampler {
  public:
    explicit NoisyPrepSampler(const Circuit& circuit);

    std::size_t num_locations() const { return two_qubit_.size(); }
    /// One draw per fault location, in gate order.
    PauliError sample(const Bernoulli& p, RngStream& rng) const;
    /// Frame left by the `pauli`-th nonidentity fault at `location`
    /// (0..2 for preparations, 0..14 for CNOTs, ordered like the samplers).
    const PauliError& fault(std::size_t location, unsigned pauli) const { return faults_[location * 15 + pauli]; }
    bool is_two_qubit(std::size_t location) const { return two_qubit_[location]; }

  private:
    std::vector<PauliError> faults_;
    std::vector<bool> two_qubit_;
};

/// CNOT from block c to block t applied qubit-wise.
inline void transversal_block_cnot(std::span<PauliError> blocks, std::size_t c, std::size_t t) {
    blocks[t].x ^= blocks[c].x;
    blocks[c].z ^= blocks[t].z;
}

enum class Basis { Z, X };

struct MeasuredParities {
    Word syndrome = 0;
    bool logical = false;

    bool operator==(const MeasuredParities&) const = default;
};

/// Parities a bitwise measurement of a block would reveal. Z basis reads the
/// X part: (e H_Z^T, e . Zbar). X basis reads the Z part: (f H_X^T, f . Xbar).
MeasuredParities frame_measurement_parities(const PauliError& err, const CssCode& code, Basis basis);

}  // namespace qdistill

#endif
