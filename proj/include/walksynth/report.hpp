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

#include <optional>
#include <string>
#include <vector>

#include "walksynth/hashing.hpp"
#include "walksynth/qft.hpp"
#include "walksynth/simulator.hpp"

namespace walksynth {

struct BoundCheck {
  std::string name;
  bool is_upper = true;  // false: lower bound
  long bound = 0;
  long measured = 0;
  bool pass = false;
};

/// Everything a synthesis run reports: routing walks, mappings, the CNOT
/// cost and its checks against the cost theorems, plus published
/// reference counts for the named topologies.
struct SynthesisReport {
  std::string algorithm;  // "qft" | "hash"
  std::string graph;
  int n = 0;
  std::string router;  // "exact" | "two_opt"
  std::optional<std::string> strategy;  // hash only: "path" | "cycle"
  std::optional<int> steps;             // hash only
  std::vector<Walk> walks;
  std::vector<int> initial_mapping;  // logical -> physical
  std::vector<int> final_mapping;
  long cnot_cost = 0;
  std::vector<BoundCheck> bounds;
  std::vector<std::pair<std::string, long>> comparisons;
  std::optional<bool> verified;

  bool all_bounds_pass() const;
  /// Stable key order, deterministic formatting.
  std::string to_json() const;
};

SynthesisReport report_for_hash(const HashResult& r, const std::string& graph_spec,
                                const std::string& strategy, Router router);

SynthesisReport report_for_qft(const QftResult& r, const std::string& graph_spec,
                               Router router);

/// Output-side permutation of the swap-free transform: output bit r sits
/// where logical qubit n-1-r ended up.
WirePermutation qft_output_permutation(const MappingTrace& final_mapping);

/// Simulation check of a synthesized circuit against its reference
/// construction, wire permutations taken from the mapping trace.
bool verify_hash(const HashResult& r, const HashingAngles& angles, double tol);
bool verify_qft(const QftResult& r, double tol);

}  // namespace walksynth
