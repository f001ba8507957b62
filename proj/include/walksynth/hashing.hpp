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

#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "walksynth/circuit.hpp"
#include "walksynth/tsp.hpp"

namespace walksynth {

/// Rotation angles for the hashing circuit: one list of n-1 angles per
/// application step, indexed by logical control qubit.
struct HashingAngles {
  std::vector<std::vector<double>> steps;

  int step_count() const { return static_cast<int>(steps.size()); }
  int controls() const { return steps.empty() ? 0 : static_cast<int>(steps[0].size()); }

  /// Same angle list for every step.
  static HashingAngles uniform(int n_controls, int n_steps,
                               const std::vector<double>& xi);
  /// One line per step, n-1 whitespace-separated radians.
  static HashingAngles parse(std::istream& in, int n_controls);
};

/// Rotation angle 4*pi*k/m: g applications accumulate a target-qubit
/// amplitude of cos(2*pi*k*g/m).
double angle_for_parameter(long k, long m);

/// Walk-derived layout for one hashing application: the target qubit
/// lives on the walk's second vertex; every other vertex gets a logical
/// control by first-visit order along the walk.
struct HashingPlan {
  Walk walk;
  int target_vertex = -1;
  std::vector<int> control_of_vertex;  // per graph vertex; -1 on the target
  int stay_count = 0;                  // positions j with walk[j] == walk[j+2]

  static HashingPlan from_walk(const Walk& walk, int n_vertices);

  /// Target at the target vertex, each control at its assigned vertex.
  MappingTrace initial_mapping() const;
};

/// One hashing application along the plan's walk: a controlled rotation
/// from the first walk vertex, then the target travels the walk, picking
/// up a rotation from every newly met vertex and a SWAP per move step.
std::pair<Circuit, MappingTrace> construct_hash_step(const HashingPlan& plan,
                                                     std::span<const double> xi);

struct HashResult {
  Circuit circuit;  // macro form
  MappingTrace initial_mapping;
  MappingTrace final_mapping;
  Walk walk;
  int stay_count = 0;
  int steps = 0;
};

struct HashOptions {
  Router router = Router::Exact;
  int exact_cap = kDefaultExactCap;
  /// Fuse the boundary rotations of consecutive steps into one gate with
  /// the summed angle. Disabled only by equivalence tests.
  bool merge_step_boundaries = true;
};

/// Repeated hashing over alternating walk orientations; the shared
/// boundary rotation of consecutive steps is emitted once with the
/// summed angle.
HashResult construct_hash_repeated_path(const CouplingGraph& g,
                                        const HashingAngles& angles,
                                        const HashOptions& opts = {});

/// Repeated hashing around a closed covering walk; from the second step
/// on, wrap-around SWAPs return the target to the walk start.
HashResult construct_hash_repeated_cycle(const CouplingGraph& g,
                                         const HashingAngles& angles,
                                         const HashOptions& opts = {});

/// Acceptance probability (1/t^2) * (sum_i cos(2*pi*k_i*g/m))^2.
double accept_probability(const std::vector<long>& K, long m, long g);

/// True iff the acceptance probability stays below eps for every
/// g in 1..m-1.
bool is_good_set(const std::vector<long>& K, long m, double eps);

}  // namespace walksynth
