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

#include "qdistill/trace.hpp"

#include <sstream>

#include <json.hpp>

#include "qdistill/classical_code.hpp"
#include "qdistill/protocols.hpp"

namespace qdistill {

namespace {

using Json = nlohmann::ordered_json;

std::string bits(Word v, std::size_t n) { return BinaryVector::from_u64(v, n).to_string(); }

// "X1X2X4" style label with 1-based qubit numbers.
std::string x_label(Word x) {
    std::string s;
    for (std::size_t q = 0; x >> q; ++q) {
        if ((x >> q) & 1U) {
            s += "X" + std::to_string(q + 1);
        }
    }
    return s.empty() ? "I" : s;
}

}  // namespace

std::string format_parities(Word syndrome, std::size_t positions, bool logical) {
    return bits(syndrome, positions) + "|" + (logical ? "1" : "0");
}

std::string example1_trace() {
    const CssCode css = CssCode::builtin("steane");
    const ClassicalCode rep3 = ClassicalCode::builtin("rep3");
    const std::size_t n = css.num_qubits();
    const std::size_t rz = css.h_z().rows();
    std::ostringstream out;
    auto emit = [&](const Json& j) { out << j.dump() << '\n'; };

    const PauliError injected[3] = {
        {css.logical_x_bits(), 0},
        {Word{1} << 2, 0},
        {(Word{1} << 5) | (Word{1} << 6), 0},
    };
    const char* labels[3] = {"Xbar", "X3", "X6X7"};
    for (std::size_t i = 0; i < 3; ++i) {
        MeasuredParities s = frame_measurement_parities(injected[i], css, Basis::Z);
        Json j = {{"event", "inject"},
                  {"block", i},
                  {"label", labels[i]},
                  {"x", bits(injected[i].x, n)},
                  {"z", bits(injected[i].z, n)},
                  {"parities", format_parities(s.syndrome, rz, s.logical)}};
        if (i == 2) {
            j["errata"] = {{"quoted", "110|0"}, {"recomputed", format_parities(s.syndrome, rz, s.logical)}};
        }
        emit(j);
    }

    const Circuit ud = build_UD(rep3);
    Json gates = Json::array();
    std::istringstream lines(ud.to_text());
    for (std::string line; std::getline(lines, line);) {
        gates.push_back(line);
    }
    emit({{"event", "block_circuit"}, {"name", "U_D"}, {"gates", gates}});

    std::vector<PauliError> after(std::begin(injected), std::end(injected));
    for (const Gate& g : ud.gates()) {
        transversal_block_cnot(after, g.q0, g.q1);
    }
    for (std::size_t i = 0; i < 3; ++i) {
        Json j = {{"event", "frame_after_circuit"}, {"block", i}, {"x", bits(after[i].x, n)}, {"label", x_label(after[i].x)}};
        if (i == 2) {
            j["errata"] = {{"quoted", "X1X2X4X5X6"}, {"recomputed", x_label(after[i].x)}};
        }
        emit(j);
    }

    RoundResult res = distill_round(injected, rep3, css, RoundType::XRound, LogicalState::Zero);
    for (std::size_t j = 0; j < res.measured.size(); ++j) {
        const MeasuredParities& m = res.measured[j];
        Json line = {{"event", "measure"},
                     {"block", rep3.dimension() + j},
                     {"basis", "Z"},
                     {"sigma", format_parities(m.syndrome, rz, m.logical)}};
        if (j == 1) {
            line["errata"] = {{"quoted", "110|1"}, {"recomputed", format_parities(m.syndrome, rz, m.logical)}};
        }
        emit(line);
    }

    for (std::size_t b = 0; b <= rz; ++b) {
        Word syndrome = 0;
        for (std::size_t j = 0; j < res.measured.size(); ++j) {
            bool bit = b < rz ? ((res.measured[j].syndrome >> b) & 1U) != 0 : res.measured[j].logical;
            syndrome |= Word{bit} << j;
        }
        emit({{"event", "decode"},
              {"position", b < rz ? "s" + std::to_string(b + 1) : std::string("logical")},
              {"classical_syndrome", bits(syndrome, rep3.redundancy())},
              {"estimated_pattern", bits(rep3.decode_bits(syndrome), rep3.length())}});
    }

    const SyndromeRecord& rec = res.records[0];
    emit({{"event", "estimate"}, {"block", 0}, {"s_tilde", format_parities(rec.x_syndrome, rz, rec.x_logical)}});

    PauliError fix;
    correct_x(fix, rec, css, true);
    std::string label = fix.x == 0 ? "I" : fix.x == css.logical_x_bits() ? "Xbar" : bits(fix.x, n);
    emit({{"event", "correct"}, {"block", 0}, {"correction", label}, {"x", bits(fix.x, n)}});

    const PauliError& survivor = res.survivors[0];
    const bool failed = is_failure(survivor, css, LogicalState::Zero);
    emit({{"event", "result"},
          {"block", 0},
          {"residual", survivor.is_identity() ? "clean" : failed ? "error" : "stabilizer"},
          {"classification", failed ? "failure" : "stabilizer"},
          {"state", failed ? "corrupted" : "|0>_L"}});
    return out.str();
}

}  // namespace qdistill
