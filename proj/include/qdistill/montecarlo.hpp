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

// Monte Carlo estimators, the exact channel-fidelity oracle, crossover and
// threshold extraction.
//
// Trials are cut into fixed batches of kBatchTrials. Batch b draws from
// RngStream(seed, b) no matter which worker runs it, and batch tallies are
// summed in batch order, so results depend only on (inputs, seed) and never
// on the worker count. Every point of a sweep reuses the same streams.

#ifndef QDISTILL_MONTECARLO_HPP
#define QDISTILL_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdistill/classical_code.hpp"
#include "qdistill/css_code.hpp"
#include "qdistill/protocols.hpp"

namespace qdistill {

inline constexpr std::uint64_t kBatchTrials = std::uint64_t{1} << 14;

struct RunOptions {
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: QDISTILL_THREADS, else hardware concurrency
};

/// Requested count if nonzero, else QDISTILL_THREADS if set and positive,
/// else std::thread::hardware_concurrency() (at least 1).
unsigned resolve_thread_count(unsigned requested);

struct Interval {
    double low = 0.0;
    double high = 0.0;
};

/// 95% Wilson score interval for `successes` out of `n`.
Interval wilson_interval(std::uint64_t successes, std::uint64_t n);

/// One row of a sweep. `denominator` counts the blocks classified (trials
/// times blocks per trial). For error rates rate = failures / denominator;
/// for fidelities rate = 1 - failures / denominator.
struct SweepPoint {
    double p = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    std::uint64_t denominator = 0;
    double rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> points;
    std::vector<std::pair<std::string, std::string>> metadata;
};

/// CSV with header `p,trials,failures,rate,ci_low,ci_high`.
std::string to_csv(const SweepResult& sweep);
/// Metadata plus per-point denominators as a JSON object.
std::string metadata_json(const SweepResult& sweep);

/// n points log-spaced from a to b inclusive.
std::vector<double> log_grid(double a, double b, std::size_t n);

/// Final error rate of two-round distillation: every trial prepares m1 * m2
/// noisy blocks, runs Protocol I and counts survivors that fail.
SweepPoint estimate_distillation_rate(const DistillationConfig& cfg, double p, const RunOptions& opts);

/// Failure fraction of raw noisy preparations.
SweepPoint no_distillation_reference(const CssCode& css, LogicalState target, double p, const RunOptions& opts);

/// Average channel fidelity under the X-only channel (X w.p. p per qubit).
/// With a classical code each trial holds m data blocks whose syndromes are
/// recovered by ancilla saving with clean ancillas; without one each trial
/// is a single block read out exactly. Each block is then decoded with the
/// CSS coset leaders and counts as correctable when the residual is a
/// stabilizer.
SweepPoint estimate_avg_channel_fidelity(const CssCode& css, const ClassicalCode* code, double p,
                                         const RunOptions& opts);

/// Number of correctable X patterns of each weight (index = weight) up to
/// max_weight, for coset-leader decoding.
std::vector<std::uint64_t> correctable_weight_counts(const CssCode& css, std::size_t max_weight);

struct ExactFidelity {
    double fidelity = 0.0;
    /// Probability mass of patterns above the enumerated weight; the true
    /// value lies in [fidelity, fidelity + tail_bound].
    double tail_bound = 0.0;
    std::size_t max_weight = 0;
};

/// Exact F_C for the X-only channel. Enumerates every pattern when n <= 24;
/// larger codes need `max_weight`.
ExactFidelity brute_force_channel_fidelity(const CssCode& css, double p, std::optional<std::size_t> max_weight = {});

enum class CrossoverStatus { Found, NoGain, Identical };

struct CrossoverResult {
    CrossoverStatus status = CrossoverStatus::NoGain;
    double p_star = 0.0;
    /// (p, difference) at every scanned and bisected point, in evaluation order.
    std::vector<std::pair<double, double>> evaluations;
};

/// Scans `points` log-spaced values of diff(p) on [lo, hi]. A first change
/// from negative to positive is refined by bisection in log p until the
/// bracket ratio falls below 1 + rel_tol, then interpolated linearly.
/// diff >= 0 everywhere reports NoGain, diff == 0 everywhere Identical.
/// diff < 0 everywhere throws NoBracketError.
CrossoverResult locate_crossover(const std::function<double(double)>& diff, double lo, double hi,
                                 std::size_t points, double rel_tol);

/// diff(p) = F_o(p) - F_comb(r p / m): F_o from the exact oracle, F_comb by
/// Monte Carlo with the same seed at every p.
CrossoverResult find_crossover(const CssCode& css, const ClassicalCode& code, double lo, double hi,
                               const RunOptions& opts, std::size_t points = 12, double rel_tol = 1e-3);

struct ThresholdResult {
    double p_th = 0.0;
    /// Crossings of the interval curves (distilled upper vs reference lower,
    /// and the reverse); unset when the interval curves do not cross.
    std::optional<double> p_th_low;
    std::optional<double> p_th_high;
};

/// First p where the distilled curve rises through the reference curve,
/// interpolated linearly in log-log coordinates. Both sweeps must share the
/// p grid. Throws NoBracketError when the curves do not cross.
ThresholdResult estimate_threshold(const SweepResult& distilled, const SweepResult& reference);

/// Least-squares slope of log(rate) against log(p) over points with p in
/// [lo, hi] and rate > 0. Needs at least two such points.
double fit_loglog_slope(const SweepResult& sweep, double lo, double hi);

}  // namespace qdistill

#endif
