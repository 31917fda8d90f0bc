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

#include "qdistill/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qdistill/error.hpp"

namespace qdistill {

namespace {

using Json = nlohmann::json;

BinaryMatrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) {
        throw std::invalid_argument(where + ": expected an array of 0/1 rows");
    }
    std::vector<std::vector<int>> rows;
    std::size_t cols = 0;
    for (const Json& row : j) {
        if (!row.is_array()) {
            throw std::invalid_argument(where + ": each row must be an array");
        }
        std::vector<int> r;
        for (const Json& v : row) {
            if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
                throw std::invalid_argument(where + ": entries must be 0 or 1");
            }
            r.push_back(v.get<int>());
        }
        if (!rows.empty() && r.size() != cols) {
            throw DimensionError(where + ": rows have different lengths");
        }
        cols = r.size();
        rows.push_back(std::move(r));
    }
    return BinaryMatrix::from_ints(rows, cols);
}

BinaryVector vector_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) {
        throw std::invalid_argument(where + ": expected an array of 0/1 entries");
    }
    BinaryVector v(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer() || (j[i].get<int>() != 0 && j[i].get<int>() != 1)) {
            throw std::invalid_argument(where + ": entries must be 0 or 1");
        }
        v.set(i, j[i].get<int>() == 1);
    }
    return v;
}

}  // namespace

CodeCatalog::CodeCatalog() {
    for (const std::string& name : ClassicalCode::builtin_names()) {
        classical_.emplace(name, ClassicalCode::builtin(name));
    }
    for (const std::string& name : CssCode::builtin_names()) {
        css_.emplace(name, CssCode::builtin(name));
    }
}

void CodeCatalog::check_fresh(const std::string& name) const {
    if (name.empty()) {
        throw std::invalid_argument("catalog entry without a name");
    }
    if (classical_.count(name) != 0 || css_.count(name) != 0) {
        throw std::invalid_argument("catalog entry '" + name + "' is already defined");
    }
}

void CodeCatalog::load_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("catalog is not valid JSON: ") + e.what());
    }
    const Json& entries = doc.is_object() && doc.contains("codes") ? doc["codes"] : doc;
    if (!entries.is_array()) {
        throw std::invalid_argument("catalog must be an array of entries or an object with a \"codes\" array");
    }
    for (const Json& e : entries) {
        if (!e.is_object() || !e.contains("name") || !e["name"].is_string() || !e.contains("type")) {
            throw std::invalid_argument("catalog entries need a string \"name\" and a \"type\"");
        }
        const std::string name = e["name"].get<std::string>();
        const std::string type = e["type"].is_string() ? e["type"].get<std::string>() : "";
        const std::string where = "catalog entry '" + name + "'";
        check_fresh(name);
        if (type == "classical") {
            if (!e.contains("H")) {
                throw std::invalid_argument(where + ": missing \"H\"");
            }
            std::optional<std::size_t> d;
            if (e.contains("d") && !e["d"].is_null()) {
                d = e["d"].get<std::size_t>();
            }
            classical_.emplace(name, ClassicalCode::from_parity_check(matrix_from_json(e["H"], where + " H"), d, name));
        } else if (type == "css") {
            if (!e.contains("HZ") || !e.contains("HX")) {
                throw std::invalid_argument(where + ": missing \"HZ\" or \"HX\"");
            }
            std::optional<BinaryVector> lx, lz;
            if (e.contains("logicalX") && !e["logicalX"].is_null()) {
                lx = vector_from_json(e["logicalX"], where + " logicalX");
            }
            if (e.contains("logicalZ") && !e["logicalZ"].is_null()) {
                lz = vector_from_json(e["logicalZ"], where + " logicalZ");
            }
            css_.emplace(name, CssCode::from_matrices(matrix_from_json(e["HZ"], where + " HZ"),
                                                      matrix_from_json(e["HX"], where + " HX"), lx, lz, name));
        } else {
            throw std::invalid_argument(where + ": unknown type '" + type + "'");
        }
    }
}

void CodeCatalog::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read catalog file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    load_json(ss.str());
}

const ClassicalCode& CodeCatalog::classical(std::string_view name) const {
    auto it = classical_.find(name);
    if (it == classical_.end()) {
        throw UnknownNameError("no classical code named '" + std::string(name) + "' in the catalog");
    }
    return it->second;
}

const CssCode& CodeCatalog::css(std::string_view name) const {
    auto it = css_.find(name);
    if (it == css_.end()) {
        throw UnknownNameError("no CSS code named '" + std::string(name) + "' in the catalog");
    }
    return it->second;
}

std::vector<std::string> CodeCatalog::classical_names() const {
    std::vector<std::string> out;
    for (const auto& [name, code] : classical_) {
        out.push_back(name);
    }
    return out;
}

std::vector<std::string> CodeCatalog::css_names() const {
    std::vector<std::string> out;
    for (const auto& [name, code] : css_) {
        out.push_back(name);
    }
    return out;
}

std::string CodeCatalog::describe_json() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [name, code] : classical_) {
        out.push_back({{"name", name},
                       {"type", "classical"},
                       {"m", code.length()},
                       {"k", code.dimension()},
                       {"d", code.distance()},
                       {"H", code.parity_check().to_ints()}});
    }
    for (const auto& [name, code] : css_) {
        out.push_back({{"name", name},
                       {"type", "css"},
                       {"n", code.num_qubits()},
                       {"HZ", code.h_z().to_ints()},
                       {"HX", code.h_x().to_ints()},
                       {"logicalX", code.logical_x().to_ints()},
                       {"logicalZ", code.logical_z().to_ints()},
                       {"encoder_cnots", code.encoding_circuit().cnot_count()}});
    }
    return out.dump(2) + "\n";
}

}  // namespace qdistill
