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

#ifndef QDISTILL_CATALOG_HPP
#define QDISTILL_CATALOG_HPP

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qdistill/classical_code.hpp"
#include "qdistill/css_code.hpp"

namespace qdistill {

/// Named classical and CSS codes: the built-ins plus entries loaded from
/// JSON. A catalog document is an array of entries (or an object whose
/// "codes" member is one):
///
///     {"name": "rep7", "type": "classical", "H": [[1,1,0,...], ...], "d": 7}
///     {"name": "c", "type": "css", "HZ": [...], "HX": [...],
///      "logicalX": [...], "logicalZ": [...]}
///
/// "d", "logicalX" and "logicalZ" are optional. Names must be unique across
/// both kinds, built-ins included.
class CodeCatalog {
  public:
    /// Catalog holding only the built-in codes.
    CodeCatalog();

    void load_json(std::string_view text);
    void load_file(const std::string& path);

    /// Throw UnknownNameError naming the missing entry.
    const ClassicalCode& classical(std::string_view name) const;
    const CssCode& css(std::string_view name) const;

    std::vector<std::string> classical_names() const;
    std::vector<std::string> css_names() const;

    /// Every entry with its parameters, as a JSON array.
    std::string describe_json() const;

  private:
    void check_fresh(const std::string& name) const;

    std::map<std::string, ClassicalCode, std::less<>> classical_;
    std::map<std::string, CssCode, std::less<>> css_;
};

}  // namespace qdistill

#endif
