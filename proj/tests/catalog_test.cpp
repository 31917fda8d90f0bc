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

#include <cstdio>
#include <fstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "qdistill/error.hpp"

using namespace qdistill;

TEST(Catalog, HoldsBuiltins) {
    CodeCatalog c;
    EXPECT_EQ(c.classical_names(), (std::vector<std::string>{"golay23", "hamming74", "rep3", "rep5"}));
    EXPECT_EQ(c.css_names(), (std::vector<std::string>{"golay_q", "steane"}));
    EXPECT_EQ(c.classical("rep5").length(), 5U);
    EXPECT_EQ(c.css("steane").num_qubits(), 7U);
}

TEST(Catalog, LoadsEntries) {
    CodeCatalog c;
    c.load_json(R"({"codes": [
        {"name": "rep7", "type": "classical", "H": [[1,1,0,0,0,0,0],[1,0,1,0,0,0,0],[1,0,0,1,0,0,0],
                                                   [1,0,0,0,1,0,0],[1,0,0,0,0,1,0],[1,0,0,0,0,0,1]], "d": 7},
        {"name": "steane2", "type": "css",
         "HZ": [[1,1,0,1,1,0,0],[1,0,1,1,0,1,0],[0,1,1,1,0,0,1]],
         "HX": [[1,1,0,1,1,0,0],[1,0,1,1,0,1,0],[0,1,1,1,0,0,1]],
         "logicalX": [1,1,1,0,0,0,0], "logicalZ": [1,1,1,0,0,0,0]}
    ]})");
    EXPECT_EQ(c.classical("rep7").distance(), 7U);
    EXPECT_EQ(c.classical("rep7").correctable(), 3U);
    EXPECT_EQ(c.css("steane2").logical_x().to_string(), "1110000");
    nlohmann::json described = nlohmann::json::parse(c.describe_json());
    EXPECT_EQ(described.size(), 8U);
}

TEST(Catalog, ReportsProblems) {
    CodeCatalog c;
    EXPECT_THROW(c.classical("rep9"), UnknownNameError);
    try {
        c.css("missing_code");
        FAIL();
    } catch (const UnknownNameError& e) {
        EXPECT_NE(std::string(e.what()).find("missing_code"), std::string::npos);
    }
    EXPECT_THROW(c.load_json("{"), std::invalid_argument);
    EXPECT_THROW(c.load_json(R"([{"name": "rep3", "type": "classical", "H": [[1,1]]}])"), std::invalid_argument);
    EXPECT_THROW(c.load_json(R"([{"name": "x", "type": "quantum"}])"), std::invalid_argument);
    EXPECT_THROW(c.load_json(R"([{"name": "x", "type": "classical", "H": [[1,2]]}])"), std::invalid_argument);
    EXPECT_THROW(c.load_json(R"([{"name": "x", "type": "classical", "H": [[1,1],[1]]}])"), DimensionError);
    EXPECT_THROW(c.load_json(R"([{"name": "x", "type": "css", "HZ": [[1,1,0]], "HX": [[1,0,0]]}])"),
                 OrthogonalityError);
    EXPECT_THROW(c.load_file("/nonexistent/catalog.json"), std::runtime_error);
}

TEST(Catalog, LoadsFromFile) {
    const std::string path = ::testing::TempDir() + "qdistill_catalog_test.json";
    {
        std::ofstream out(path);
        out << R"([{"name": "rep3b", "type": "classical", "H": [[1,1,0],[1,0,1]]}])";
    }
    CodeCatalog c;
    c.load_file(path);
    EXPECT_EQ(c.classical("rep3b").distance(), 3U);
    std::remove(path.c_str());
}
