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

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <thread>

#include <json.hpp>

#include "qdistill/error.hpp"
#include "qdistill/pauli_frame.hpp"

namespace qdistill {

namespace {

struct Tally {
    std::uint64_t failures = 0;
    std::uint64_t denominator = 0;
};

using BatchFn = std::function<Tally(RngStream&, std::uint64_t)>;

Tally run_batches(std::uint64_t trials, std::uint64_t seed, unsigned threads,
                  const std::function<BatchFn()>& make_worker) {
    const std::uint64_t batches = (trials + kBatchTrials - 1) / kBatchTrials;
    std::vector<Tally> tallies(batches);
    std::atomic<std::uint64_t> next{0};
    auto work = [&]() {
        BatchFn fn = make_worker();
        for (std::uint64_t b = next.fetch_add(1); b < batches; b = next.fetch_add(1)) {
            RngStream rng(seed, b);
            tallies[b] = fn(rng, std::min(kBatchTrials, trials - b * kBatchTrials));
        }
    };
    const unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(resolve_thread_count(threads), batches));
    if (n <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    Tally total;
    for (const Tally& t : tallies) {
        total.failures += t.failures;
        total.denominator += t.denominator;
    }
    return total;
}

void check_run(double p, const RunOptions& opts) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
    }
    if (opts.trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
}

SweepPoint error_rate_point(double p, std::uint64_t trials, const Tally& t) {
    Interval ci = wilson_interval(t.failures, t.denominator);
    return {p, trials, t.failures, t.denominator, static_cast<double>(t.failures) / static_cast<double>(t.denominator),
            ci.low, ci.high};
}

SweepPoint fidelity_point(double p, std::uint64_t trials, const Tally& t) {
    Interval ci = wilson_interval(t.denominator - t.failures, t.denominator);
    return {p,
            trials,
            t.failures,
            t.denominator,
            1.0 - static_cast<double>(t.failures) / static_cast<double>(t.denominator),
            ci.low,
            ci.high};
}

// Faults over a flat run of `total` locations, located by geometric skips
// so the cost scales with the number of faults rather than locations.
class FaultSkipper {
  public:
    FaultSkipper(double p, std::uint64_t total) : p_(p), total_(total), log_q_(std::log1p(-p)) {}

    // Number of fault-free locations before the next fault, capped at total.
    std::uint64_t skip(RngStream& rng) const {
        if (p_ <= 0.0) {
            return total_;
        }
        if (p_ >= 1.0) {
            return 0;
        }
        double g = std::floor(std::log(rng.unit_open_closed()) / log_q_);
        return g >= static_cast<double>(total_) ? total_ : static_cast<std::uint64_t>(g);
    }

  private:
    double p_;
    std::uint64_t total_;
    double log_q_;
};

void sample_pool(std::span<PauliError> pool, const NoisyPrepSampler& sampler, const FaultSkipper& skipper,
                 RngStream& rng) {
    const std::uint64_t per_block = sampler.num_locations();
    const std::uint64_t total = per_block * pool.size();
    std::fill(pool.begin(), pool.end(), PauliError{});
    for (std::uint64_t pos = skipper.skip(rng); pos < total;) {
        const std::size_t block = pos / per_block;
        const std::size_t loc = pos % per_block;
        const unsigned pauli = sampler.is_two_qubit(loc) ? rng.below(15) : rng.below(3);
        pool[block] ^= sampler.fault(loc, pauli);
        const std::uint64_t gap = skipper.skip(rng);
        pos = gap >= total - pos ? total : pos + 1 + gap;
    }
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

double binomial(std::size_t n, std::size_t k) {
    double c = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return c;
}

// First upward crossing of d through r on the shared grid, interpolated in
// log-log coordinates when both sides are positive and linearly otherwise.
std::optional<double> upward_crossing(const std::vector<double>& ps, const std::vector<double>& d,
                                      const std::vector<double>& r) {
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
        if (!(d[i] < r[i] && d[i + 1] >= r[i + 1])) {
            continue;
        }
        if (d[i] > 0 && r[i] > 0 && d[i + 1] > 0 && r[i + 1] > 0) {
            double a = std::log(d[i]) - std::log(r[i]);
            double b = std::log(d[i + 1]) - std::log(r[i + 1]);
            double t = a / (a - b);
            return std::exp(std::log(ps[i]) + t * (std::log(ps[i + 1]) - std::log(ps[i])));
        }
        double a = d[i] - r[i];
        double b = d[i + 1] - r[i + 1];
        return ps[i] + a / (a - b) * (ps[i + 1] - ps[i]);
    }
    return std::nullopt;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("QDISTILL_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t n) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    constexpr double z = 1.959963984540054;
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(successes) / nn;
    const double denom = 1.0 + z * z / nn;
    const double center = (phat + z * z / (2 * nn)) / denom;
    const double half = z / denom * std::sqrt(phat * (1 - phat) / nn + z * z / (4 * nn * nn));
    // Rounding can leave an endpoint just inside phat at 0 or n successes.
    return {successes == 0 ? 0.0 : std::max(0.0, center - half), successes == n ? 1.0 : std::min(1.0, center + half)};
}

std::string to_csv(const SweepResult& sweep) {
    std::string out = "p,trials,failures,rate,ci_low,ci_high\n";
    for (const SweepPoint& pt : sweep.points) {
        out += format_double(pt.p) + "," + std::to_string(pt.trials) + "," + std::to_string(pt.failures) + "," +
               format_double(pt.rate) + "," + format_double(pt.ci_low) + "," + format_double(pt.ci_high) + "\n";
    }
    return out;
}

std::string metadata_json(const SweepResult& sweep) {
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    for (const auto& [k, v] : sweep.metadata) {
        meta[k] = v;
    }
    nlohmann::ordered_json denominators = nlohmann::ordered_json::array();
    for (const SweepPoint& pt : sweep.points) {
        denominators.push_back(pt.denominator);
    }
    nlohmann::ordered_json j = {{"metadata", meta}, {"denominators", denominators}};
    return j.dump(2) + "\n";
}

std::vector<double> log_grid(double a, double b, std::size_t n) {
    if (n == 0 || !(a > 0) || !(b > 0)) {
        throw std::invalid_argument("log grid needs positive endpoints and at least one point");
    }
    if (n == 1) {
        return {a};
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * std::pow(b / a, static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.back() = b;
    return out;
}

SweepPoint estimate_distillation_rate(const DistillationConfig& cfg, double p, const RunOptions& opts) {
    check_run(p, opts);
    if (cfg.css == nullptr || cfg.code_round1 == nullptr || cfg.code_round2 == nullptr) {
        throw std::invalid_argument("distillation config is missing a code");
    }
    const std::size_t pool_size = cfg.code_round1->length() * cfg.code_round2->length();
    const NoisyPrepSampler sampler(cfg.css->preparation_circuit(cfg.target));
    const FaultSkipper skipper(p, sampler.num_locations() * pool_size);
    Tally t = run_batches(opts.trials, opts.seed, opts.threads, [&]() -> BatchFn {
        auto runner = std::make_shared<ProtocolIRunner>(cfg, pool_size);
        auto pool = std::make_shared<std::vector<PauliError>>(pool_size);
        return [&, runner, pool](RngStream& rng, std::uint64_t count) {
            Tally tally;
            for (std::uint64_t i = 0; i < count; ++i) {
                sample_pool(*pool, sampler, skipper, rng);
                for (const PauliError& s : runner->run(*pool)) {
                    tally.failures += is_failure(s, *cfg.css, cfg.target);
                }
                tally.denominator += runner->survivor_count();
            }
            return tally;
        };
    });
    return error_rate_point(p, opts.trials, t);
}

SweepPoint no_distillation_reference(const CssCode& css, LogicalState target, double p, const RunOptions& opts) {
    check_run(p, opts);
    const NoisyPrepSampler sampler(css.preparation_circuit(target));
    const FaultSkipper skipper(p, sampler.num_locations());
    Tally t = run_batches(opts.trials, opts.seed, opts.threads, [&]() -> BatchFn {
        return [&](RngStream& rng, std::uint64_t count) {
            Tally tally;
            PauliError block;
            for (std::uint64_t i = 0; i < count; ++i) {
                sample_pool({&block, 1}, sampler, skipper, rng);
                tally.failures += is_failure(block, css, target);
            }
            tally.denominator = count;
            return tally;
        };
    });
    return error_rate_point(p, opts.trials, t);
}

SweepPoint estimate_avg_channel_fidelity(const CssCode& css, const ClassicalCode* code, double p,
                                         const RunOptions& opts) {
    check_run(p, opts);
    const Bernoulli bern(p);
    const std::size_t n = css.num_qubits();
    const std::size_t m = code != nullptr ? code->length() : 1;
    const std::size_t r = code != nullptr ? code->redundancy() : 0;
    Tally t = run_batches(opts.trials, opts.seed, opts.threads, [&]() -> BatchFn {
        return [&, data = std::vector<PauliError>(m), plus = std::vector<PauliError>(r),
                zero = std::vector<PauliError>(r)](RngStream& rng, std::uint64_t count) mutable {
            Tally tally;
            for (std::uint64_t i = 0; i < count; ++i) {
                for (PauliError& d : data) {
                    d = {};
                    for (std::size_t q = 0; q < n; ++q) {
                        d.x |= Word{bern.fires(rng.next())} << q;
                    }
                }
                std::vector<SyndromeRecord> records;
                if (code != nullptr) {
                    std::fill(plus.begin(), plus.end(), PauliError{});
                    std::fill(zero.begin(), zero.end(), PauliError{});
                    records = ancilla_saving(data, plus, zero, *code, css);
                } else {
                    records.push_back({css.syndrome_x_bits(data[0].x), false, 0, false});
                }
                for (std::size_t b = 0; b < m; ++b) {
                    Word residual = data[b].x ^ css.x_correction(records[b].x_syndrome);
                    bool ok = css.syndrome_x_bits(residual) == 0 &&
                              (std::popcount(residual & css.logical_z_bits()) & 1) == 0;
                    tally.failures += !ok;
                }
            }
            tally.denominator = count * m;
            return tally;
        };
    });
    return fidelity_point(p, opts.trials, t);
}

std::vector<std::uint64_t> correctable_weight_counts(const CssCode& css, std::size_t max_weight) {
    const std::size_t n = css.num_qubits();
    max_weight = std::min(max_weight, n);
    std::vector<std::uint64_t> counts(max_weight + 1, 0);
    auto correctable = [&](Word e) {
        Word residual = e ^ css.x_correction(css.syndrome_x_bits(e));
        return (std::popcount(residual & css.logical_z_bits()) & 1) == 0;
    };
    counts[0] = correctable(0);
    for (std::size_t w = 1; w <= max_weight; ++w) {
        const Word last = ((Word{1} << w) - 1) << (n - w);
        for (Word v = (Word{1} << w) - 1;;) {
            counts[w] += correctable(v);
            if (v == last) {
                break;
            }
            Word low = v & (~v + 1);
            Word ripple = v + low;
            v = (((ripple ^ v) >> 2) / low) | ripple;
        }
    }
    return counts;
}

ExactFidelity brute_force_channel_fidelity(const CssCode& css, double p, std::optional<std::size_t> max_weight) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(p) + " outside [0, 1]");
    }
    const std::size_t n = css.num_qubits();
    if (!max_weight && n > 24) {
        throw UnsupportedCodeError("exhaustive enumeration limited to 24 qubits; give a weight cutoff");
    }
    const std::size_t w_max = std::min(max_weight.value_or(n), n);
    const std::vector<std::uint64_t> counts = correctable_weight_counts(css, w_max);
    ExactFidelity out;
    out.max_weight = w_max;
    for (std::size_t w = 0; w <= w_max; ++w) {
        out.fidelity += static_cast<double>(counts[w]) * std::pow(p, static_cast<double>(w)) *
                        std::pow(1 - p, static_cast<double>(n - w));
    }
    for (std::size_t w = w_max + 1; w <= n; ++w) {
        out.tail_bound +=
            binomial(n, w) * std::pow(p, static_cast<double>(w)) * std::pow(1 - p, static_cast<double>(n - w));
    }
    return out;
}

CrossoverResult locate_crossover(const std::function<double(double)>& diff, double lo, double hi,
                                 std::size_t points, double rel_tol) {
    if (!(lo > 0) || !(hi > lo) || points < 2 || !(rel_tol > 0)) {
        throw std::invalid_argument("crossover scan needs 0 < lo < hi, at least two points and rel_tol > 0");
    }
    CrossoverResult out;
    const std::vector<double> grid = log_grid(lo, hi, points);
    std::vector<double> values;
    for (double p : grid) {
        values.push_back(diff(p));
        out.evaluations.emplace_back(p, values.back());
    }
    if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; })) {
        out.status = CrossoverStatus::Identical;
        return out;
    }
    if (std::all_of(values.begin(), values.end(), [](double v) { return v >= 0.0; })) {
        out.status = CrossoverStatus::NoGain;
        return out;
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!(values[i] < 0.0 && values[i + 1] >= 0.0)) {
            continue;
        }
        double a = grid[i], b = grid[i + 1];
        double da = values[i], db = values[i + 1];
        while (b / a > 1.0 + rel_tol) {
            double mid = std::sqrt(a * b);
            double dm = diff(mid);
            out.evaluations.emplace_back(mid, dm);
            if (dm < 0.0) {
                a = mid;
                da = dm;
            } else {
                b = mid;
                db = dm;
            }
        }
        double t = da / (da - db);
        out.status = CrossoverStatus::Found;
        out.p_star = std::exp(std::log(a) + t * (std::log(b) - std::log(a)));
        return out;
    }
    throw NoBracketError("difference never rises through zero on [" + format_double(lo) + ", " +
                         format_double(hi) + "]");
}

CrossoverResult find_crossover(const CssCode& css, const ClassicalCode& code, double lo, double hi,
                               const RunOptions& opts, std::size_t points, double rel_tol) {
    const double scale = static_cast<double>(code.redundancy()) / static_cast<double>(code.length());
    auto diff = [&](double p) {
        double original = brute_force_channel_fidelity(css, p).fidelity;
        double combined = estimate_avg_channel_fidelity(css, &code, scale * p, opts).rate;
        return original - combined;
    };
    return locate_crossover(diff, lo, hi, points, rel_tol);
}

ThresholdResult estimate_threshold(const SweepResult& distilled, const SweepResult& reference) {
    if (distilled.points.size() != reference.points.size() || distilled.points.size() < 2) {
        throw DimensionError("threshold needs two sweeps on the same grid of at least two points");
    }
    std::vector<double> ps, d, d_low, d_high, r, r_low, r_high;
    for (std::size_t i = 0; i < distilled.points.size(); ++i) {
        const SweepPoint& a = distilled.points[i];
        const SweepPoint& b = reference.points[i];
        if (std::abs(a.p - b.p) > 1e-12 * std::max(std::abs(a.p), std::abs(b.p))) {
            throw DimensionError("sweeps disagree at grid point " + std::to_string(i));
        }
        ps.push_back(a.p);
        d.push_back(a.rate);
        d_low.push_back(a.ci_low);
        d_high.push_back(a.ci_high);
        r.push_back(b.rate);
        r_low.push_back(b.ci_low);
        r_high.push_back(b.ci_high);
    }
    std::optional<double> central = upward_crossing(ps, d, r);
    if (!central) {
        throw NoBracketError("distilled curve does not cross the reference on the sweep grid");
    }
    ThresholdResult out;
    out.p_th = *central;
    out.p_th_low = upward_crossing(ps, d_high, r_low);
    out.p_th_high = upward_crossing(ps, d_low, r_high);
    return out;
}

double fit_loglog_slope(const SweepResult& sweep, double lo, double hi) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    for (const SweepPoint& pt : sweep.points) {
        if (pt.p < lo * (1 - 1e-9) || pt.p > hi * (1 + 1e-9) || !(pt.rate > 0)) {
            continue;
        }
        double x = std::log(pt.p), y = std::log(pt.rate);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) {
        throw std::invalid_argument("slope fit needs at least two points with positive rate in the window");
    }
    const double c = static_cast<double>(count);
    return (c * sxy - sx * sy) / (c * sxx - sx * sx);
}

}  // namespace qdistill
