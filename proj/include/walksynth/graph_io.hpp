// Copyright 2026 The walksynth developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <istream>
#include <string>

#include "walksynth/coupling_graph.hpp"

namespace walksynth {

// Named topologies.
CouplingGraph lnn_graph(int n);       // chain 0-1-...-(n-1)
CouplingGraph star_graph(int n);      // centre 0, leaves 1..n-1
CouplingGraph complete_graph(int n);
CouplingGraph cycle_graph(int n);     // ring, n >= 3

/// 16-qubit heavy-hex device map: a 12-cycle with four single-vertex tails.
CouplingGraph sun16_graph();

/// 27-qubit heavy-hex device map: two joined 12-cycles with six tails.
CouplingGraph twosuns27_graph();

/// Text format: first non-comment line "n m", then m lines "u v"
/// (0-based). Lines starting with '#' and blank lines are ignored.
CouplingGraph parse_graph(std::istream& in);

/// Resolves "lnn:N", "star:N", "complete:N", "cycle:N", "sun16",
/// "twosuns27", or a file path in the text format above.
CouplingGraph load_graph(const std::string& spec);

}  // namespace walksynth
