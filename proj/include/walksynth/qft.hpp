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

#include <vector>

#include "walksynth/circuit.hpp"
#include "walksynth/tsp.hpp"

namespace walksynth {

/// 1-based positions of each vertex's first occurrence, in walk order.
std::vector<int> get_first_indexes(const Walk& walk);

struct QftCascade {
  int r = 0;  // 0-based cascade index (logical target qubit)
  Walk walk;
  long cnot_cost = 0;
};

struct QftOptions {
  Router router = Router::Exact;
  int exact_cap = kDefaultExactCap;
};

struct QftResult {
  Circuit circuit;  // macro form
  MappingTrace initial_mapping;
  MappingTrace final_mapping;
  Walk initial_walk;
  std::vector<int> first_indexes;  // 1-based first-occurrence positions
  std::vector<QftCascade> cascades;
  std::vector<int> deleted_order;  // vertex removed after each cascade
};

/// One cascade: H on the walk start, then the target travels the walk,
/// receiving a controlled phase pi/2^(w-r) from each newly met logical
/// qubit w and swapping forward on move steps (skipped for two-vertex
/// walks). The mapping is updated on every SWAP.
void construct_qft_cascade(Circuit& c, const Walk& walk, int r, MappingTrace& m);

/// Whole transform: logical qubits are bound to first-visit order along
/// a free-start covering walk; cascade r then travels a fixed-start
/// covering walk of the not-yet-deleted vertices, after which the
/// vertex holding logical r is deleted. The output bit order is the
/// reverse of the logical order, as reported by the mapping trace.
QftResult construct_qft(const CouplingGraph& g, const QftOptions& opts = {});

}  // namespace walksynth
