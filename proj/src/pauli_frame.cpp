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

#include "qdistill/pauli_frame.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qdistill/error.hpp"

namespace qdistill {

namespace {

// X, Y, Z as (x, z) bit pairs.
constexpr std::pair<bool, bool> kOneQubit[3] = {{true, false}, {true, true}, {false, true}};

void apply_1q(PauliError& err, std::size_t q, unsigned pauli) {
    err.x ^= Word{kOneQubit[pauli].first} << q;
    err.z ^= Word{kOneQubit[pauli].second} << q;
}

void apply_2q(PauliError& err, std::size_t a, std::size_t b, unsigned mask) {
    err.x ^= Word{mask & 1U} << a;
    err.z ^= Word{(mask >> 1) & 1U} << a;
    err.x ^= Word{(mask >> 2) & 1U} << b;
    err.z ^= Word{(mask >> 3) & 1U} << b;
}

void check_block_size(std::size_t n) {
    if (n > 63) {
        throw UnsupportedCodeError("Pauli frames hold at most 63 qubits per block, got " + std::to_string(n));
    }
}

}  // namespace

PauliError PauliError::from_vectors(const BinaryVector& e, const BinaryVector& f) {
    if (e.size() != f.size()) {
        throw DimensionError("X part has length " + std::to_string(e.size()) + " but Z part has " +
                             std::to_string(f.size()));
    }
    check_block_size(e.size());
    return {e.empty() ? 0 : e.to_u64(), f.empty() ? 0 : f.to_u64()};
}

PauliError propagate_cnot(PauliError err, std::size_t c, std::size_t t, std::size_t n) {
    check_block_size(n);
    if (c >= n || t >= n) {
        throw std::out_of_range("CNOT qubit out of range for a " + std::to_string(n) + "-qubit block");
    }
    if (c == t) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    propagate_cnot(err, c, t);
    return err;
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
}

Bernoulli::Bernoulli(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
    }
    if (p >= 1.0) {
        always = true;
        threshold = ~std::uint64_t{0};
    } else {
        threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
    }
}

// The Pauli is picked from the same draw that decided the fault. Given a
// fault the draw is uniform below a threshold far above 15, so the residue
// is uniform up to a relative bias below 2^-40 for any p >= 2^-20.
std::pair<bool, bool> sample_depolarizing_1q(const Bernoulli& p, RngStream& rng) {
    std::uint64_t u = rng.next();
    if (!p.fires(u)) {
        return {false, false};
    }
    return kOneQubit[u % 3];
}

unsigned sample_depolarizing_2q(const Bernoulli& p, RngStream& rng) {
    std::uint64_t u = rng.next();
    if (!p.fires(u)) {
        return 0;
    }
    return static_cast<unsigned>(u % 15) + 1;
}

PauliError simulate_noisy_circuit(const Circuit& circuit, double p, RngStream& rng) {
    check_block_size(circuit.num_qubits());
    const Bernoulli bern(p);
    PauliError err;
    for (const Gate& g : circuit.gates()) {
        switch (g.kind) {
            case GateKind::PrepZero:
            case GateKind::PrepPlus: {
                auto [x, z] = sample_depolarizing_1q(bern, rng);
                err.x ^= Word{x} << g.q0;
                err.z ^= Word{z} << g.q0;
                break;
            }
            case GateKind::Cnot:
                propagate_cnot(err, g.q0, g.q1);
                apply_2q(err, g.q0, g.q1, sample_depolarizing_2q(bern, rng));
                break;
            case GateKind::MeasZ:
            case GateKind::MeasX:
                break;
        }
    }
    return err;
}

PauliError simulate_noisy_prep(const CssCode& code, LogicalState target, double p, RngStream& rng) {
    return simulate_noisy_circuit(code.preparation_circuit(target), p, rng);
}

NoisyPrepSampler::NoisyPrepSampler(const Circuit& circuit) {
    check_block_size(circuit.num_qubits());
    const auto& gates = circuit.gates();
    auto push_through = [&](PauliError err, std::size_t from) {
        for (std::size_t i = from; i < gates.size(); ++i) {
            if (gates[i].kind == GateKind::Cnot) {
                propagate_cnot(err, gates[i].q0, gates[i].q1);
            }
        }
        return err;
    };
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.kind == GateKind::PrepZero || g.kind == GateKind::PrepPlus) {
            two_qubit_.push_back(false);
            for (unsigned k = 0; k < 15; ++k) {
                PauliError err;
                if (k < 3) {
                    apply_1q(err, g.q0, k);
                }
                faults_.push_back(push_through(err, i + 1));
            }
        } else if (g.kind == GateKind::Cnot) {
            two_qubit_.push_back(true);
            for (unsigned k = 0; k < 15; ++k) {
                PauliError err;
                apply_2q(err, g.q0, g.q1, k + 1);
                faults_.push_back(push_through(err, i + 1));
            }
        }
    }
}

PauliError NoisyPrepSampler::sample(const Bernoulli& p, RngStream& rng) const {
    PauliError err;
    for (std::size_t loc = 0; loc < two_qubit_.size(); ++loc) {
        std::uint64_t u = rng.next();
        if (p.fires(u)) {
            err ^= faults_[loc * 15 + (two_qubit_[loc] ? u % 15 : u % 3)];
        }
    }
    return err;
}

MeasuredParities frame_measurement_parities(const PauliError& err, const CssCode& code, Basis basis) {
    if (basis == Basis::Z) {
        return {code.syndrome_x_bits(err.x), (std::popcount(err.x & code.logical_z_bits()) & 1) != 0};
    }
    return {code.syndrome_z_bits(err.z), (std::popcount(err.z & code.logical_x_bits()) & 1) != 0};
}

}  // namespace qdistill
