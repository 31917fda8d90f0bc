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

#include "qdistill/circuit.hpp"

#include <gtest/gtest.h>

#include "qdistill/css_code.hpp"

using namespace qdistill;

TEST(Circuit, TextRoundTrip) {
    Circuit c(4);
    c.prep_zero(0);
    c.prep_plus(1);
    c.cnot(1, 0);
    c.cnot(0, 3);
    c.measure_z(0);
    c.measure_x(1);
    const std::string text = c.to_text();
    EXPECT_EQ(text, "P0 0\nP+ 1\nCX 1 0\nCX 0 3\nMZ 0\nMX 1\n");
    EXPECT_EQ(Circuit::from_text(text, 4), c);
}

TEST(Circuit, ParsesCommentsAndBlankLines) {
    Circuit c = Circuit::from_text("# encoder\n\nCX 0 2\n  CX 1 2\n");
    EXPECT_EQ(c.num_qubits(), 3U);
    EXPECT_EQ(c.cnot_count(), 2U);
}

TEST(Circuit, RejectsMalformedText) {
    EXPECT_THROW(Circuit::from_text("CX 0\n"), std::invalid_argument);
    EXPECT_THROW(Circuit::from_text("CZ 0 1\n"), std::invalid_argument);
    EXPECT_THROW(Circuit::from_text("CX 1 1\n"), std::invalid_argument);
    EXPECT_THROW(Circuit::from_text("P0 x\n"), std::invalid_argument);
}

TEST(Circuit, MeasuredQubitIsFinal) {
    Circuit c(2);
    c.measure_z(0);
    EXPECT_THROW(c.cnot(0, 1), std::invalid_argument);
    EXPECT_THROW(c.prep_zero(5), std::out_of_range);
}

TEST(Circuit, ReversedInvertsCnots) {
    Circuit c(3);
    c.cnot(0, 1);
    c.cnot(1, 2);
    Circuit r = c.reversed();
    ASSERT_EQ(r.size(), 2U);
    EXPECT_EQ(r.gates()[0], (Gate{GateKind::Cnot, 1, 2}));
    EXPECT_EQ(r.gates()[1], (Gate{GateKind::Cnot, 0, 1}));
}

TEST(Circuit, GolayEncoderParsesBackIdentically) {
    const CssCode golay = CssCode::builtin("golay_q");
    const Circuit& enc = golay.encoding_circuit();
    EXPECT_GT(enc.cnot_count(), 0U);
    EXPECT_EQ(Circuit::from_text(enc.to_text(), enc.num_qubits()), enc);
}
