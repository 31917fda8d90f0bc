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

#ifndef QDISTILL_TRACE_HPP
#define QDISTILL_TRACE_HPP

#include <string>

#include "qdistill/css_code.hpp"
#include "qdistill/gf2.hpp"

namespace qdistill {

/// Syndrome and logical bit as "s_1 s_2 ... | L", position 0 first.
std::string format_parities(Word syndrome, std::size_t positions, bool logical);

/// JSON-lines replay of one X round of distillation with rep3 on three
/// Steane |0>_L blocks carrying the injected errors Xbar, X_3 and X_6 X_7
/// (1-based qubit labels). Each line is one event: injections, the block
/// circuit, frames after it, measured parities, per-position decoding, the
/// correction and the final classification.
std::string example1_trace();

}  // namespace qdistill

#endif
