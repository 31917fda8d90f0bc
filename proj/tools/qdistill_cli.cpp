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

// Command-line driver over the C API.
//
//   qdistill distill --css steane --code1 rep3 --code2 rep3 --p 1e-3:1e-2:log8
//   qdistill fidelity --css steane --save rep3 --p 0.01
//   qdistill threshold --code1 rep3 --code2 rep3 --p 3e-3:5e-2:log12
//   qdistill crossover --css steane --save rep5 --p 0.002:0.02
//   qdistill trace-example1
//   qdistill dump-circuit --css golay_q [--prep zero|plus]
//   qdistill catalog [--catalog extra.json]
//
// Exit codes: 0 ok, 1 configuration error, 2 runtime error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdistill/qdistill.h"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::string config;
    std::string catalog;
    std::string css = "steane";
    std::string code1 = "rep3";
    std::string code2;
    std::string save;
    std::string target = "zero";
    std::string p;
    std::string trials = "1e6";
    std::uint64_t seed = 1;
    std::string out;
    bool exact = false;
    bool effective = false;
    std::size_t points = 12;
    double rel_tol = 1e-3;
    std::string prep;
};

void check(qd_status status) {
    if (status == QD_OK) {
        return;
    }
    std::string message = std::string(qd_status_name(status)) + ": " + qd_last_error();
    switch (status) {
        case QD_ERR_NO_BRACKET:
        case QD_ERR_INTERNAL:
            throw RuntimeError(message);
        default:
            throw ConfigError(message);
    }
}

struct CatalogDeleter {
    void operator()(qd_catalog* c) const { qd_catalog_free(c); }
};
struct CssDeleter {
    void operator()(qd_css_code* c) const { qd_css_free(c); }
};
struct ClassicalDeleter {
    void operator()(qd_classical_code* c) const { qd_classical_free(c); }
};
struct SweepDeleter {
    void operator()(qd_sweep* s) const { qd_sweep_free(s); }
};
using CatalogPtr = std::unique_ptr<qd_catalog, CatalogDeleter>;
using CssPtr = std::unique_ptr<qd_css_code, CssDeleter>;
using ClassicalPtr = std::unique_ptr<qd_classical_code, ClassicalDeleter>;
using SweepPtr = std::unique_ptr<qd_sweep, SweepDeleter>;

std::string take_string(char* s) {
    std::string out(s);
    qd_string_free(s);
    return out;
}

double parse_double(const std::string& text, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError(what + ": cannot parse '" + text + "'");
    }
    if (used != text.size()) {
        throw ConfigError(what + ": cannot parse '" + text + "'");
    }
    return v;
}

std::uint64_t parse_trials(const std::string& text) {
    const double v = parse_double(text, "--trials");
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e15) {
        throw ConfigError("--trials must be a positive integer, got '" + text + "'");
    }
    return static_cast<std::uint64_t>(v);
}

// "a:b:logN" (N log-spaced points, ends included), "a,b,c" or a single value.
std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    if (text.empty()) {
        throw ConfigError("--p: empty probability list");
    }
    const auto first = text.find(':');
    if (first != std::string::npos) {
        const auto second = text.find(':', first + 1);
        const double a = parse_double(text.substr(0, first), "--p");
        double b = 0.0;
        std::size_t n = 2;
        if (second == std::string::npos) {
            b = parse_double(text.substr(first + 1), "--p");
        } else {
            b = parse_double(text.substr(first + 1, second - first - 1), "--p");
            const std::string count_text = text.substr(second + 1);
            if (count_text.rfind("log", 0) != 0) {
                throw ConfigError("--p: expected a:b:logN, got '" + text + "'");
            }
            const double count = parse_double(count_text.substr(3), "--p");
            if (count < 1.0 || count != std::floor(count)) {
                throw ConfigError("--p: point count must be a positive integer");
            }
            n = static_cast<std::size_t>(count);
        }
        if (!(a > 0.0) || !(b > 0.0)) {
            throw ConfigError("--p: grid ends must be positive");
        }
        if (n == 1) {
            out.push_back(a);
        } else {
            const double la = std::log(a);
            const double lb = std::log(b);
            for (std::size_t i = 0; i < n; ++i) {
                out.push_back(i + 1 == n ? b : std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(n - 1)));
            }
            out.front() = a;
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) {
                out.push_back(parse_double(item, "--p"));
            }
        }
    }
    if (out.empty()) {
        throw ConfigError("--p: empty probability list");
    }
    for (double p : out) {
        if (!(p > 0.0 && p < 1.0)) {
            throw ConfigError("--p: probabilities must lie in (0, 1)");
        }
    }
    return out;
}

qd_target parse_target(const std::string& text) {
    if (text == "zero" || text == "0") return QD_TARGET_ZERO;
    if (text == "plus" || text == "+") return QD_TARGET_PLUS;
    throw ConfigError("--target must be zero or plus, got '" + text + "'");
}

// Fills settings from a JSON config file for every option the command line
// left unset.
void apply_config(Settings& s, const CLI::App& cmd) {
    if (s.config.empty()) {
        return;
    }
    std::ifstream in(s.config);
    if (!in) {
        throw ConfigError("cannot read config file '" + s.config + "'");
    }
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + s.config + "': " + e.what());
    }
    if (!doc.is_object()) {
        throw ConfigError("config file must hold a JSON object");
    }
    auto unset = [&](const char* flag) {
        try {
            return cmd.count(flag) == 0;
        } catch (const CLI::OptionNotFound&) {
            return false;
        }
    };
    auto text = [](const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string joined;
            for (const auto& x : v) {
                joined += (joined.empty() ? "" : ",") + x.dump();
            }
            return joined;
        }
        return v.dump();
    };
    try {
        for (const auto& [key, value] : doc.items()) {
            const std::string flag = "--" + key;
            if (key == "css" && unset("--css")) s.css = value.get<std::string>();
            else if (key == "code1" && unset("--code1")) s.code1 = value.get<std::string>();
            else if (key == "code2" && unset("--code2")) s.code2 = value.get<std::string>();
            else if (key == "save" && unset("--save")) s.save = value.get<std::string>();
            else if (key == "target" && unset("--target")) s.target = value.get<std::string>();
            else if (key == "catalog" && unset("--catalog")) s.catalog = value.get<std::string>();
            else if (key == "out" && unset("--out")) s.out = value.get<std::string>();
            else if (key == "p" && unset("--p")) s.p = text(value);
            else if (key == "trials" && unset("--trials")) s.trials = text(value);
            else if (key == "seed" && unset("--seed")) s.seed = value.get<std::uint64_t>();
            else if (key == "exact" && unset("--exact")) s.exact = value.get<bool>();
            else if (key == "effective" && unset("--effective")) s.effective = value.get<bool>();
            else if (key == "points" && unset("--points")) s.points = value.get<std::size_t>();
            else if (key == "rel_tol" && unset("--rel-tol")) s.rel_tol = value.get<double>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file '" + s.config + "': " + e.what());
    }
}

CatalogPtr open_catalog(const Settings& s) {
    qd_catalog* raw = nullptr;
    check(qd_catalog_new(&raw));
    CatalogPtr catalog(raw);
    if (!s.catalog.empty()) {
        check(qd_catalog_load_file(catalog.get(), s.catalog.c_str()));
    }
    return catalog;
}

CssPtr css_code(const qd_catalog* catalog, const std::string& name) {
    qd_css_code* raw = nullptr;
    check(qd_catalog_css(catalog, name.c_str(), &raw));
    return CssPtr(raw);
}

ClassicalPtr classical_code(const qd_catalog* catalog, const std::string& name) {
    qd_classical_code* raw = nullptr;
    check(qd_catalog_classical(catalog, name.c_str(), &raw));
    return ClassicalPtr(raw);
}

qd_run_options run_options(const Settings& s) {
    qd_run_options o{};
    o.trials = parse_trials(s.trials);
    o.seed = s.seed;
    o.threads = 0;
    return o;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) {
        throw RuntimeError("cannot write '" + path + "'");
    }
}

// CSV to --out (with a .json metadata sidecar) or to stdout.
void emit_sweep(const Settings& s, const qd_sweep* sweep) {
    char* csv = nullptr;
    check(qd_sweep_csv(sweep, &csv));
    const std::string text = take_string(csv);
    if (s.out.empty()) {
        std::cout << text << std::flush;
        return;
    }
    char* meta = nullptr;
    check(qd_sweep_metadata_json(sweep, &meta));
    write_text(s.out, text);
    write_text(std::filesystem::path(s.out).replace_extension(".json").string(), take_string(meta));
}

void emit_text(const Settings& s, const std::string& text) {
    if (s.out.empty()) {
        std::cout << text << std::flush;
    } else {
        write_text(s.out, text);
    }
}

void cmd_distill(const Settings& s) {
    const std::vector<double> grid = parse_grid(s.p);
    const qd_run_options opts = run_options(s);
    CatalogPtr catalog = open_catalog(s);
    CssPtr css = css_code(catalog.get(), s.css);
    ClassicalPtr c1 = classical_code(catalog.get(), s.code1);
    ClassicalPtr c2 = classical_code(catalog.get(), s.code2.empty() ? s.code1 : s.code2);
    qd_sweep* raw = nullptr;
    check(qd_distill_sweep(css.get(), c1.get(), c2.get(), parse_target(s.target), grid.data(), grid.size(), &opts,
                           &raw));
    SweepPtr sweep(raw);
    emit_sweep(s, sweep.get());
}

void cmd_fidelity(const Settings& s) {
    const std::vector<double> grid = parse_grid(s.p);
    CatalogPtr catalog = open_catalog(s);
    CssPtr css = css_code(catalog.get(), s.css);
    qd_sweep* raw = nullptr;
    if (s.exact) {
        if (!s.save.empty()) {
            throw ConfigError("--exact evaluates the code without ancilla saving; drop --save");
        }
        check(qd_exact_fidelity_sweep(css.get(), grid.data(), grid.size(), &raw));
    } else {
        const qd_run_options opts = run_options(s);
        ClassicalPtr save;
        if (!s.save.empty()) {
            save = classical_code(catalog.get(), s.save);
        } else if (s.effective) {
            throw ConfigError("--effective needs --save");
        }
        check(qd_fidelity_sweep(css.get(), save.get(), s.effective ? 1 : 0, grid.data(), grid.size(), &opts, &raw));
    }
    SweepPtr sweep(raw);
    emit_sweep(s, sweep.get());
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void cmd_threshold(const Settings& s) {
    const std::vector<double> grid = parse_grid(s.p);
    const qd_run_options opts = run_options(s);
    CatalogPtr catalog = open_catalog(s);
    CssPtr css = css_code(catalog.get(), s.css);
    ClassicalPtr c1 = classical_code(catalog.get(), s.code1);
    ClassicalPtr c2 = classical_code(catalog.get(), s.code2.empty() ? s.code1 : s.code2);
    const qd_target target = parse_target(s.target);
    qd_sweep* raw = nullptr;
    check(qd_distill_sweep(css.get(), c1.get(), c2.get(), target, grid.data(), grid.size(), &opts, &raw));
    SweepPtr distilled(raw);
    check(qd_reference_sweep(css.get(), target, grid.data(), grid.size(), &opts, &raw));
    SweepPtr reference(raw);
    qd_threshold_result t{};
    check(qd_threshold(distilled.get(), reference.get(), &t));
    nlohmann::ordered_json out;
    out["css"] = s.css;
    out["code1"] = s.code1;
    out["code2"] = s.code2.empty() ? s.code1 : s.code2;
    out["target"] = s.target;
    out["seed"] = s.seed;
    out["trials"] = opts.trials;
    out["p_th"] = format_double(t.p_th);
    out["p_th_low"] = t.has_low ? nlohmann::ordered_json(format_double(t.p_th_low)) : nullptr;
    out["p_th_high"] = t.has_high ? nlohmann::ordered_json(format_double(t.p_th_high)) : nullptr;
    emit_text(s, out.dump() + "\n");
}

void cmd_crossover(const Settings& s) {
    const std::vector<double> grid = parse_grid(s.p);
    if (grid.size() < 2) {
        throw ConfigError("--p: crossover needs a range a:b");
    }
    if (s.save.empty()) {
        throw ConfigError("crossover needs --save");
    }
    const qd_run_options opts = run_options(s);
    CatalogPtr catalog = open_catalog(s);
    CssPtr css = css_code(catalog.get(), s.css);
    ClassicalPtr save = classical_code(catalog.get(), s.save);
    qd_crossover_result r{};
    check(qd_crossover(css.get(), save.get(), grid.front(), grid.back(), s.points, s.rel_tol, &opts, &r));
    const char* status = r.status == QD_CROSSOVER_FOUND     ? "found"
                         : r.status == QD_CROSSOVER_NO_GAIN ? "no_gain"
                                                            : "identical";
    nlohmann::ordered_json out;
    out["css"] = s.css;
    out["save"] = s.save;
    out["seed"] = s.seed;
    out["trials"] = opts.trials;
    out["status"] = status;
    out["p_star"] = r.status == QD_CROSSOVER_FOUND ? nlohmann::ordered_json(format_double(r.p_star)) : nullptr;
    out["evaluations"] = r.evaluations;
    emit_text(s, out.dump() + "\n");
}

void cmd_trace(const Settings& s) {
    char* text = nullptr;
    check(qd_trace_example1(&text));
    emit_text(s, take_string(text));
}

void cmd_dump_circuit(const Settings& s) {
    CatalogPtr catalog = open_catalog(s);
    CssPtr css = css_code(catalog.get(), s.css);
    char* text = nullptr;
    if (s.prep.empty()) {
        check(qd_css_encoder_text(css.get(), &text));
    } else {
        check(qd_css_preparation_text(css.get(), parse_target(s.prep), &text));
    }
    emit_text(s, take_string(text));
}

void cmd_catalog(const Settings& s) {
    CatalogPtr catalog = open_catalog(s);
    char* text = nullptr;
    check(qd_catalog_describe(catalog.get(), &text));
    emit_text(s, take_string(text));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pauli-frame simulation of CSS ancilla distillation and ancilla saving"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(qd_version()));
    Settings s;

    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--config", s.config, "JSON file of option values; flags override it");
        cmd->add_option("--catalog", s.catalog, "JSON code catalog to load next to the built-ins");
        cmd->add_option("--out", s.out, "Output path (CSV also gets a .json metadata sidecar)");
    };
    auto sweep = [&](CLI::App* cmd) {
        common(cmd);
        cmd->add_option("--css", s.css, "CSS code name");
        cmd->add_option("--p", s.p, "Probabilities: a:b:logN, comma list or single value");
        cmd->add_option("--trials", s.trials, "Trials per point (accepts 1e6)");
        cmd->add_option("--seed", s.seed, "Master seed");
    };

    CLI::App* distill = app.add_subcommand("distill", "Two-round distillation failure rate sweep");
    sweep(distill);
    distill->add_option("--code1", s.code1, "Classical code for the X round");
    distill->add_option("--code2", s.code2, "Classical code for the Z round (default: code1)");
    distill->add_option("--target", s.target, "zero or plus");

    CLI::App* fidelity = app.add_subcommand("fidelity", "Average channel fidelity sweep");
    sweep(fidelity);
    fidelity->add_option("--save", s.save, "Classical code for ancilla saving");
    fidelity->add_flag("--exact", s.exact, "Exact enumeration without saving; trials ignored");
    fidelity->add_flag("--effective", s.effective, "Evaluate each point at r p / m");

    CLI::App* threshold = app.add_subcommand("threshold", "Distillation threshold against the no-distillation rate");
    sweep(threshold);
    threshold->add_option("--code1", s.code1, "Classical code for the X round");
    threshold->add_option("--code2", s.code2, "Classical code for the Z round (default: code1)");
    threshold->add_option("--target", s.target, "zero or plus");

    CLI::App* crossover = app.add_subcommand("crossover", "Where effective saving fidelity meets plain extraction");
    sweep(crossover);
    crossover->add_option("--save", s.save, "Classical code for ancilla saving");
    crossover->add_option("--points", s.points, "Scan points before bisection");
    crossover->add_option("--rel-tol", s.rel_tol, "Relative bisection tolerance");

    CLI::App* trace = app.add_subcommand("trace-example1", "Replay the worked three-block rep3 example");
    trace->add_option("--out", s.out, "Output path");

    CLI::App* dump = app.add_subcommand("dump-circuit", "Print the CNOT encoder of a CSS code");
    common(dump);
    dump->add_option("--css", s.css, "CSS code name");
    dump->add_option("--prep", s.prep, "Prepend preparations for zero or plus");

    CLI::App* catalog = app.add_subcommand("catalog", "List the catalog as JSON");
    common(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        if (cmd != trace) {
            apply_config(s, *cmd);
        }
        if (cmd == distill) cmd_distill(s);
        else if (cmd == fidelity) cmd_fidelity(s);
        else if (cmd == threshold) cmd_threshold(s);
        else if (cmd == crossover) cmd_crossover(s);
        else if (cmd == trace) cmd_trace(s);
        else if (cmd == dump) cmd_dump_circuit(s);
        else cmd_catalog(s);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
