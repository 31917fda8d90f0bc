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

#include "qdistill/qdistill.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include <json.hpp>

#include "qdistill/catalog.hpp"
#include "qdistill/error.hpp"
#include "qdistill/montecarlo.hpp"
#include "qdistill/trace.hpp"

struct qd_catalog {
    qdistill::CodeCatalog catalog;
};

struct qd_css_code {
    std::shared_ptr<const qdistill::CssCode> code;
};

struct qd_classical_code {
    std::shared_ptr<const qdistill::ClassicalCode> code;
};

struct qd_sweep {
    qdistill::SweepResult result;
};

namespace {

thread_local std::string last_error;

qd_status fail(qd_status status, const std::string& message) {
    last_error = message;
    return status;
}

// Runs `body`, mapping exceptions onto status codes.
template <typename Fn>
qd_status guarded(Fn&& body) {
    try {
        last_error.clear();
        body();
        return QD_OK;
    } catch (const qdistill::DimensionError& e) {
        return fail(QD_ERR_DIMENSION, e.what());
    } catch (const qdistill::RankError& e) {
        return fail(QD_ERR_RANK, e.what());
    } catch (const qdistill::OrthogonalityError& e) {
        return fail(QD_ERR_ORTHOGONALITY, e.what());
    } catch (const qdistill::UnsupportedCodeError& e) {
        return fail(QD_ERR_UNSUPPORTED, e.what());
    } catch (const qdistill::UnknownNameError& e) {
        return fail(QD_ERR_UNKNOWN_NAME, e.what());
    } catch (const qdistill::NoBracketError& e) {
        return fail(QD_ERR_NO_BRACKET, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(QD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(QD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range& e) {
        return fail(QD_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(QD_ERR_INTERNAL, "out of memory");
    } catch (const std::runtime_error& e) {
        return fail(QD_ERR_IO, e.what());
    } catch (const std::exception& e) {
        return fail(QD_ERR_INTERNAL, e.what());
    }
}

void require(const void* ptr, const char* what) {
    if (ptr == nullptr) {
        throw std::invalid_argument(std::string(what) + " is null");
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.data(), s.size() + 1);
    return out;
}

qdistill::LogicalState to_state(qd_target t) {
    if (t != QD_TARGET_ZERO && t != QD_TARGET_PLUS) {
        throw std::invalid_argument("unknown target state");
    }
    return t == QD_TARGET_ZERO ? qdistill::LogicalState::Zero : qdistill::LogicalState::Plus;
}

qdistill::RunOptions to_options(const qd_run_options* opts) {
    require(opts, "run options");
    return {opts->trials, opts->seed, opts->threads};
}

void check_grid(const double* p, std::size_t count) {
    if (count == 0) {
        throw std::invalid_argument("empty probability list");
    }
    require(p, "probability list");
}

void add_run_metadata(qdistill::SweepResult& r, const qdistill::RunOptions& o) {
    r.metadata.emplace_back("trials", std::to_string(o.trials));
    r.metadata.emplace_back("seed", std::to_string(o.seed));
    r.metadata.emplace_back("batch_trials", std::to_string(qdistill::kBatchTrials));
}

const char* target_name(qd_target t) { return t == QD_TARGET_ZERO ? "zero" : "plus"; }

}  // namespace

extern "C" {

const char* qd_version(void) { return "0.1.0"; }

const char* qd_last_error(void) { return last_error.c_str(); }

const char* qd_status_name(qd_status status) {
    switch (status) {
        case QD_OK: return "ok";
        case QD_ERR_INVALID_ARGUMENT: return "invalid argument";
        case QD_ERR_DIMENSION: return "dimension mismatch";
        case QD_ERR_RANK: return "rank deficient";
        case QD_ERR_ORTHOGONALITY: return "not orthogonal";
        case QD_ERR_UNSUPPORTED: return "unsupported code";
        case QD_ERR_UNKNOWN_NAME: return "unknown name";
        case QD_ERR_NO_BRACKET: return "no bracket";
        case QD_ERR_IO: return "i/o error";
        case QD_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void qd_string_free(char* s) { std::free(s); }

qd_status qd_catalog_new(qd_catalog** out) {
    return guarded([&] {
        require(out, "output");
        *out = new qd_catalog();
    });
}

qd_status qd_catalog_load_file(qd_catalog* catalog, const char* path) {
    return guarded([&] {
        require(catalog, "catalog");
        require(path, "path");
        catalog->catalog.load_file(path);
    });
}

qd_status qd_catalog_load_json(qd_catalog* catalog, const char* json) {
    return guarded([&] {
        require(catalog, "catalog");
        require(json, "json");
        catalog->catalog.load_json(json);
    });
}

qd_status qd_catalog_describe(const qd_catalog* catalog, char** json_out) {
    return guarded([&] {
        require(catalog, "catalog");
        require(json_out, "output");
        *json_out = copy_string(catalog->catalog.describe_json());
    });
}

void qd_catalog_free(qd_catalog* catalog) { delete catalog; }

qd_status qd_catalog_css(const qd_catalog* catalog, const char* name, qd_css_code** out) {
    return guarded([&] {
        require(catalog, "catalog");
        require(name, "name");
        require(out, "output");
        *out = new qd_css_code{std::make_shared<const qdistill::CssCode>(catalog->catalog.css(name))};
    });
}

qd_status qd_catalog_classical(const qd_catalog* catalog, const char* name, qd_classical_code** out) {
    return guarded([&] {
        require(catalog, "catalog");
        require(name, "name");
        require(out, "output");
        *out = new qd_classical_code{std::make_shared<const qdistill::ClassicalCode>(catalog->catalog.classical(name))};
    });
}

qd_status qd_css_num_qubits(const qd_css_code* code, size_t* out) {
    return guarded([&] {
        require(code, "code");
        require(out, "output");
        *out = code->code->num_qubits();
    });
}

qd_status qd_css_encoder_text(const qd_css_code* code, char** out) {
    return guarded([&] {
        require(code, "code");
        require(out, "output");
        *out = copy_string(code->code->encoding_circuit().to_text());
    });
}

qd_status qd_css_preparation_text(const qd_css_code* code, qd_target target, char** out) {
    return guarded([&] {
        require(code, "code");
        require(out, "output");
        *out = copy_string(code->code->preparation_circuit(to_state(target)).to_text());
    });
}

void qd_css_free(qd_css_code* code) { delete code; }

qd_status qd_classical_params(const qd_classical_code* code, size_t* m, size_t* k, size_t* d) {
    return guarded([&] {
        require(code, "code");
        if (m != nullptr) *m = code->code->length();
        if (k != nullptr) *k = code->code->dimension();
        if (d != nullptr) *d = code->code->distance();
    });
}

void qd_classical_free(qd_classical_code* code) { delete code; }

qd_status qd_distill_sweep(const qd_css_code* css, const qd_classical_code* round1, const qd_classical_code* round2,
                           qd_target target, const double* p, size_t count, const qd_run_options* opts,
                           qd_sweep** out) {
    return guarded([&] {
        require(css, "css code");
        require(round1, "round-1 code");
        require(round2, "round-2 code");
        require(out, "output");
        check_grid(p, count);
        const qdistill::RunOptions o = to_options(opts);
        qdistill::DistillationConfig cfg{css->code.get(), round1->code.get(), round2->code.get(), to_state(target)};
        auto sweep = std::make_unique<qd_sweep>();
        auto& r = sweep->result;
        r.metadata = {{"protocol", "distill"},
                      {"css", css->code->name()},
                      {"code1", round1->code->name()},
                      {"code2", round2->code->name()},
                      {"target", target_name(target)},
                      {"rate", "failing survivors / survivors"}};
        add_run_metadata(r, o);
        for (size_t i = 0; i < count; ++i) {
            r.points.push_back(qdistill::estimate_distillation_rate(cfg, p[i], o));
        }
        *out = sweep.release();
    });
}

qd_status qd_reference_sweep(const qd_css_code* css, qd_target target, const double* p, size_t count,
                             const qd_run_options* opts, qd_sweep** out) {
    return guarded([&] {
        require(css, "css code");
        require(out, "output");
        check_grid(p, count);
        const qdistill::RunOptions o = to_options(opts);
        auto sweep = std::make_unique<qd_sweep>();
        auto& r = sweep->result;
        r.metadata = {{"protocol", "no_distillation"},
                      {"css", css->code->name()},
                      {"target", target_name(target)},
                      {"rate", "failing preparations / preparations"}};
        add_run_metadata(r, o);
        for (size_t i = 0; i < count; ++i) {
            r.points.push_back(qdistill::no_distillation_reference(*css->code, to_state(target), p[i], o));
        }
        *out = sweep.release();
    });
}

qd_status qd_fidelity_sweep(const qd_css_code* css, const qd_classical_code* save, int effective, const double* p,
                            size_t count, const qd_run_options* opts, qd_sweep** out) {
    return guarded([&] {
        require(css, "css code");
        require(out, "output");
        check_grid(p, count);
        const qdistill::RunOptions o = to_options(opts);
        const qdistill::ClassicalCode* code = save != nullptr ? save->code.get() : nullptr;
        double scale = 1.0;
        if (effective != 0 && code != nullptr) {
            scale = static_cast<double>(code->redundancy()) / static_cast<double>(code->length());
        }
        auto sweep = std::make_unique<qd_sweep>();
        auto& r = sweep->result;
        r.metadata = {{"protocol", "fidelity"},
                      {"css", css->code->name()},
                      {"save", code != nullptr ? code->name() : "none"},
                      {"effective", effective != 0 ? "true" : "false"},
                      {"evaluated_at", effective != 0 && code != nullptr ? "r*p/m" : "p"},
                      {"rate", "correctable blocks / blocks"},
                      {"failures", "uncorrectable blocks"}};
        add_run_metadata(r, o);
        for (size_t i = 0; i < count; ++i) {
            qdistill::SweepPoint pt = qdistill::estimate_avg_channel_fidelity(*css->code, code, scale * p[i], o);
            pt.p = p[i];
            r.points.push_back(pt);
        }
        *out = sweep.release();
    });
}

qd_status qd_exact_fidelity_sweep(const qd_css_code* css, const double* p, size_t count, qd_sweep** out) {
    return guarded([&] {
        require(css, "css code");
        require(out, "output");
        check_grid(p, count);
        auto sweep = std::make_unique<qd_sweep>();
        auto& r = sweep->result;
        r.metadata = {{"protocol", "fidelity_exact"}, {"css", css->code->name()}, {"rate", "exact F_C"}};
        for (size_t i = 0; i < count; ++i) {
            qdistill::ExactFidelity f = qdistill::brute_force_channel_fidelity(*css->code, p[i]);
            r.points.push_back({p[i], 0, 0, 0, f.fidelity, f.fidelity, f.fidelity + f.tail_bound});
        }
        *out = sweep.release();
    });
}

qd_status qd_sweep_size(const qd_sweep* sweep, size_t* out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        *out = sweep->result.points.size();
    });
}

qd_status qd_sweep_point(const qd_sweep* sweep, size_t index, qd_point* out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        const qdistill::SweepPoint& pt = sweep->result.points.at(index);
        *out = {pt.p, pt.trials, pt.failures, pt.denominator, pt.rate, pt.ci_low, pt.ci_high};
    });
}

qd_status qd_sweep_csv(const qd_sweep* sweep, char** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        *out = copy_string(qdistill::to_csv(sweep->result));
    });
}

qd_status qd_sweep_metadata_json(const qd_sweep* sweep, char** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        *out = copy_string(qdistill::metadata_json(sweep->result));
    });
}

void qd_sweep_free(qd_sweep* sweep) { delete sweep; }

qd_status qd_threshold(const qd_sweep* distilled, const qd_sweep* reference, qd_threshold_result* out) {
    return guarded([&] {
        require(distilled, "distilled sweep");
        require(reference, "reference sweep");
        require(out, "output");
        qdistill::ThresholdResult t = qdistill::estimate_threshold(distilled->result, reference->result);
        *out = {t.p_th, t.p_th_low.has_value(), t.p_th_low.value_or(0.0), t.p_th_high.has_value(),
                t.p_th_high.value_or(0.0)};
    });
}

qd_status qd_slope(const qd_sweep* sweep, double p_lo, double p_hi, double* out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "output");
        *out = qdistill::fit_loglog_slope(sweep->result, p_lo, p_hi);
    });
}

qd_status qd_crossover(const qd_css_code* css, const qd_classical_code* code, double p_lo, double p_hi, size_t points,
                       double rel_tol, const qd_run_options* opts, qd_crossover_result* out) {
    return guarded([&] {
        require(css, "css code");
        require(code, "classical code");
        require(out, "output");
        qdistill::CrossoverResult c =
            qdistill::find_crossover(*css->code, *code->code, p_lo, p_hi, to_options(opts), points, rel_tol);
        qd_crossover_status status = QD_CROSSOVER_FOUND;
        if (c.status == qdistill::CrossoverStatus::NoGain) status = QD_CROSSOVER_NO_GAIN;
        if (c.status == qdistill::CrossoverStatus::Identical) status = QD_CROSSOVER_IDENTICAL;
        *out = {status, c.p_star, c.evaluations.size()};
    });
}

qd_status qd_trace_example1(char** out) {
    return guarded([&] {
        require(out, "output");
        *out = copy_string(qdistill::example1_trace());
    });
}

}  // extern "C"
