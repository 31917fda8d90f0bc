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

#include "qdistill/montecarlo.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdistill/error.hpp"

using namespace qdistill;

namespace {

const CssCode& steane() {
    static const CssCode code = CssCode::builtin("steane");
    return code;
}

double binomial_sigma(double rate, double n) { return std::sqrt(rate * (1 - rate) / n); }

SweepResult power_law(double c, double power, const std::vector<double>& grid) {
    SweepResult s;
    for (double p : grid) {
        const double r = c * std::pow(p, power);
        s.points.push_back({p, 1, 0, 1, r, r, r});
    }
    return s;
}

}  // namespace

TEST(Wilson, MatchesClosedForm) {
    const double z = 1.959963984540054;
    for (auto [k, n] : {std::pair{0, 10}, std::pair{3, 10}, std::pair{50, 100}, std::pair{10, 10}}) {
        Interval ci = wilson_interval(k, n);
        const double ph = static_cast<double>(k) / n;
        const double denom = 1 + z * z / n;
        const double centre = (ph + z * z / (2.0 * n)) / denom;
        const double half = z * std::sqrt(ph * (1 - ph) / n + z * z / (4.0 * n * n)) / denom;
        EXPECT_NEAR(ci.low, std::max(0.0, centre - half), 1e-12);
        EXPECT_NEAR(ci.high, std::min(1.0, centre + half), 1e-12);
        EXPECT_LE(ci.low, ph);
        EXPECT_GE(ci.high, ph);
    }
}

TEST(Grid, LogGridEndsAndSpacing) {
    std::vector<double> g = log_grid(1e-3, 1e-1, 5);
    ASSERT_EQ(g.size(), 5U);
    EXPECT_DOUBLE_EQ(g.front(), 1e-3);
    EXPECT_DOUBLE_EQ(g.back(), 1e-1);
    EXPECT_NEAR(g[2], 1e-2, 1e-15);
}

TEST(Csv, HeaderAndFormat) {
    SweepResult s;
    s.points.push_back({0.01, 100, 3, 100, 0.03, 0.01, 0.08});
    s.metadata = {{"protocol", "distill"}, {"seed", "7"}};
    EXPECT_EQ(to_csv(s), "p,trials,failures,rate,ci_low,ci_high\n0.01,100,3,0.03,0.01,0.08\n");
    EXPECT_EQ(metadata_json(s).find("\"protocol\": \"distill\"") != std::string::npos ||
                  metadata_json(s).find("\"protocol\":\"distill\"") != std::string::npos,
              true);
}

TEST(ExactFidelity, SteaneMatchesEnumerationOracle) {
    const std::vector<oracle::Word> hz = oracle::rows_of(steane().h_z());
    for (double p : {0.0, 1e-3, 0.01, 0.1, 0.3}) {
        ExactFidelity f = brute_force_channel_fidelity(steane(), p);
        EXPECT_NEAR(f.fidelity, oracle::exact_fidelity(hz, steane().logical_z_bits(), 7, p), 1e-14);
        EXPECT_EQ(f.tail_bound, 0.0);
    }
    EXPECT_NEAR(brute_force_channel_fidelity(steane(), 0.01).fidelity, 0.997996, 5e-7);
}

TEST(ExactFidelity, WeightCountsForSteane) {
    // Every weight-1 error is corrected; weight-2 errors never are.
    std::vector<std::uint64_t> counts = correctable_weight_counts(steane(), 7);
    EXPECT_EQ(counts[0], 1U);
    EXPECT_EQ(counts[1], 7U);
    EXPECT_EQ(counts[2], 0U);
    std::uint64_t total = 0;
    for (std::uint64_t c : counts) {
        total += c;
    }
    EXPECT_EQ(total, 64U);  // 8 syndromes times 8 X stabilizers
}

TEST(ExactFidelity, GolayCutoffBracketsTheValue) {
    const CssCode golay = CssCode::builtin("golay_q");
    const double p = 0.02;
    ExactFidelity f = brute_force_channel_fidelity(golay, p, 3);
    // Perfect code: all errors up to weight 3 are corrected.
    double want = 0.0;
    double binom = 1.0;
    for (int w = 0; w <= 3; ++w) {
        want += binom * std::pow(p, w) * std::pow(1 - p, 23 - w);
        binom = binom * (23 - w) / (w + 1);
    }
    EXPECT_NEAR(f.fidelity, want, 1e-14);
    EXPECT_NEAR(f.fidelity + f.tail_bound, 1.0, 1e-12);
    ExactFidelity full = brute_force_channel_fidelity(golay, p);
    EXPECT_GE(full.fidelity, f.fidelity);
    EXPECT_LE(full.fidelity, f.fidelity + f.tail_bound + 1e-15);
    EXPECT_THROW(brute_force_channel_fidelity(steane(), 1.5), std::invalid_argument);
}

TEST(FidelityMc, NoSavingAgreesWithExact) {
    RunOptions o;
    o.trials = 200000;
    o.seed = 3;
    for (double p : {0.01, 0.05}) {
        SweepPoint pt = estimate_avg_channel_fidelity(steane(), nullptr, p, o);
        const double exact = brute_force_channel_fidelity(steane(), p).fidelity;
        EXPECT_NEAR(pt.rate, exact, 4 * binomial_sigma(exact, o.trials));
        EXPECT_EQ(pt.denominator, o.trials);
        EXPECT_EQ(pt.failures, o.trials - static_cast<std::uint64_t>(std::llround(pt.rate * o.trials)));
    }
}

TEST(FidelityMc, SavingAgreesWithExactOracle) {
    const std::vector<oracle::Word> hz = oracle::rows_of(steane().h_z());
    RunOptions o;
    o.trials = 100000;
    o.seed = 4;
    for (const char* name : {"rep3", "rep5"}) {
        ClassicalCode code = ClassicalCode::builtin(name);
        const std::vector<oracle::Word> hc = oracle::rows_of(code.parity_check());
        for (double p : {0.01, 0.04}) {
            const double exact =
                oracle::exact_saving_fidelity(hz, steane().logical_z_bits(), 7, hc, code.length(), p);
            SweepPoint pt = estimate_avg_channel_fidelity(steane(), &code, p, o);
            // Blocks within a trial are correlated, but the per-trial mean
            // spreads no more than a single block does.
            EXPECT_NEAR(pt.rate, exact, 4 * binomial_sigma(exact, static_cast<double>(o.trials))) << name << " " << p;
        }
    }
}

TEST(FidelityMc, SavingCostsFidelity) {
    RunOptions o;
    o.trials = 100000;
    ClassicalCode rep3 = ClassicalCode::builtin("rep3");
    const double plain = brute_force_channel_fidelity(steane(), 0.01).fidelity;
    EXPECT_LT(estimate_avg_channel_fidelity(steane(), &rep3, 0.01, o).rate, plain);
}

TEST(Reproducibility, ThreadCountDoesNotChangeTallies) {
    ClassicalCode rep3 = ClassicalCode::builtin("rep3");
    DistillationConfig cfg{&steane(), &rep3, &rep3, LogicalState::Zero};
    RunOptions a;
    a.trials = 3 * kBatchTrials + 123;
    a.seed = 9;
    a.threads = 1;
    RunOptions b = a;
    b.threads = 4;
    SweepPoint x = estimate_distillation_rate(cfg, 0.01, a);
    SweepPoint y = estimate_distillation_rate(cfg, 0.01, b);
    EXPECT_EQ(x.failures, y.failures);
    EXPECT_EQ(x.denominator, y.denominator);
    EXPECT_EQ(estimate_avg_channel_fidelity(steane(), &rep3, 0.02, a).failures,
              estimate_avg_channel_fidelity(steane(), &rep3, 0.02, b).failures);
    EXPECT_EQ(no_distillation_reference(steane(), LogicalState::Plus, 0.01, a).failures,
              no_distillation_reference(steane(), LogicalState::Plus, 0.01, b).failures);
    RunOptions c = a;
    c.seed = 10;
    EXPECT_NE(estimate_distillation_rate(cfg, 0.01, c).failures, x.failures);
}

TEST(Distillation, NoiselessRunsNeverFail) {
    ClassicalCode ham = ClassicalCode::builtin("hamming74");
    ClassicalCode rep5 = ClassicalCode::builtin("rep5");
    DistillationConfig cfg{&steane(), &ham, &rep5, LogicalState::Plus};
    RunOptions o;
    o.trials = 5000;
    SweepPoint pt = estimate_distillation_rate(cfg, 0.0, o);
    EXPECT_EQ(pt.failures, 0U);
    EXPECT_GT(pt.denominator, 0U);
    EXPECT_EQ(no_distillation_reference(steane(), LogicalState::Zero, 0.0, o).failures, 0U);
    EXPECT_THROW(estimate_distillation_rate(cfg, -0.1, o), std::invalid_argument);
    o.trials = 0;
    EXPECT_THROW(estimate_distillation_rate(cfg, 0.01, o), std::invalid_argument);
}

TEST(Distillation, ReferenceMatchesFirstOrderFaultCount) {
    // At small p the failure rate is p times the mean fraction of failing
    // Paulis per location, counted through an independent conjugation.
    for (LogicalState target : {LogicalState::Zero, LogicalState::Plus}) {
        const Circuit prep = steane().preparation_circuit(target);
        const std::vector<oracle::Word> hz = oracle::rows_of(steane().h_z());
        const std::vector<oracle::Word> hx = oracle::rows_of(steane().h_x());
        auto fails = [&](const oracle::DensePauli& e) {
            const oracle::Word x = oracle::pack(e.x);
            const oracle::Word z = oracle::pack(e.z);
            if (oracle::syndrome(hz, x) || oracle::syndrome(hx, z)) return true;
            return target == LogicalState::Zero ? oracle::parity(x & steane().logical_z_bits())
                                                : oracle::parity(z & steane().logical_x_bits());
        };
        double first_order = 0.0;
        for (std::size_t i = 0; i < prep.size(); ++i) {
            const Gate& g = prep.gates()[i];
            Circuit suffix(7);
            for (std::size_t j = i + 1; j < prep.size(); ++j) {
                if (prep.gates()[j].kind == GateKind::Cnot) suffix.cnot(prep.gates()[j].q0, prep.gates()[j].q1);
            }
            const bool two = g.kind == GateKind::Cnot;
            const unsigned count = two ? 15 : 3;
            unsigned bad = 0;
            for (unsigned k = 1; k <= count; ++k) {
                oracle::DensePauli e{std::vector<int>(7), std::vector<int>(7)};
                if (two) {
                    e.x[g.q0] = k & 1;
                    e.z[g.q0] = (k >> 1) & 1;
                    e.x[g.q1] = (k >> 2) & 1;
                    e.z[g.q1] = (k >> 3) & 1;
                } else {
                    e.x[g.q0] = k != 3;  // X, Y, Z
                    e.z[g.q0] = k != 1;
                }
                oracle::conjugate(e, suffix);
                bad += fails(e);
            }
            first_order += static_cast<double>(bad) / count;
        }
        const double p = 1e-4;
        RunOptions o;
        o.trials = 1000000;
        SweepPoint pt = no_distillation_reference(steane(), target, p, o);
        const double want = first_order * p;
        EXPECT_NEAR(pt.rate, want, 4 * std::sqrt(want / o.trials) + want * want);
    }
}

TEST(Crossover, SyntheticShapes) {
    CrossoverResult found = locate_crossover([](double p) { return p - 0.005; }, 1e-3, 2e-2, 8, 1e-6);
    EXPECT_EQ(found.status, CrossoverStatus::Found);
    EXPECT_NEAR(found.p_star, 0.005, 1e-8);
    EXPECT_GT(found.evaluations.size(), 8U);
    EXPECT_EQ(locate_crossover([](double) { return 0.1; }, 1e-3, 2e-2, 8, 1e-3).status, CrossoverStatus::NoGain);
    EXPECT_EQ(locate_crossover([](double) { return 0.0; }, 1e-3, 2e-2, 8, 1e-3).status, CrossoverStatus::Identical);
    EXPECT_THROW(locate_crossover([](double) { return -1.0; }, 1e-3, 2e-2, 8, 1e-3), NoBracketError);
    EXPECT_THROW(locate_crossover([](double p) { return 0.005 - p; }, 1e-3, 2e-2, 8, 1e-3), NoBracketError);
    EXPECT_THROW(locate_crossover([](double p) { return p; }, 2e-2, 1e-3, 8, 1e-3), std::invalid_argument);
}

TEST(Threshold, PowerLawCrossing) {
    const std::vector<double> grid = log_grid(1e-3, 1e-1, 9);
    ThresholdResult t = estimate_threshold(power_law(100.0, 2.0, grid), power_law(1.0, 1.0, grid));
    EXPECT_NEAR(t.p_th, 0.01, 1e-12);
    ASSERT_TRUE(t.p_th_low.has_value());
    ASSERT_TRUE(t.p_th_high.has_value());
    EXPECT_NEAR(*t.p_th_low, 0.01, 1e-12);
    EXPECT_THROW(estimate_threshold(power_law(0.1, 2.0, grid), power_law(1.0, 1.0, grid)), NoBracketError);
    EXPECT_THROW(estimate_threshold(power_law(100.0, 2.0, grid), power_law(1.0, 1.0, log_grid(1e-3, 1e-1, 8))),
                 DimensionError);
}

TEST(Slope, PowerLawFit) {
    const std::vector<double> grid = log_grid(1e-3, 1e-1, 7);
    EXPECT_NEAR(fit_loglog_slope(power_law(3.0, 2.0, grid), 3e-3, 1e-2), 2.0, 1e-9);
    EXPECT_NEAR(fit_loglog_slope(power_law(0.5, 3.0, grid), 1e-3, 1e-1), 3.0, 1e-9);
    EXPECT_THROW(fit_loglog_slope(power_law(1.0, 1.0, grid), 0.5, 0.6), std::invalid_argument);
}

TEST(Threads, EnvironmentCapsWorkers) {
    EXPECT_EQ(resolve_thread_count(3), 3U);
    setenv("QDISTILL_THREADS", "2", 1);
    EXPECT_EQ(resolve_thread_count(0), 2U);
    unsetenv("QDISTILL_THREADS");
    EXPECT_GE(resolve_thread_count(0), 1U);
}
