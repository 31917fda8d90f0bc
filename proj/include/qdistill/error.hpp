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

#ifndef QDISTILL_ERROR_HPP
#define QDISTILL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qdistill {

// Shapes of operands do not agree.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A matrix that must have full row rank does not.
struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// H_X * H_Z^T != 0.
struct OrthogonalityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Code parameters outside what the library supports (e.g. more than one
// logical qubit where exactly one is required).
struct UnsupportedCodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Lookup of a code or entry by name failed.
struct UnknownNameError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// A root-finding request whose interval does not contain a sign change.
struct NoBracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qdistill

#endif
