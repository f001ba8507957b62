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
#include <vector>

#include "walksynth/coupling_graph.hpp"

namespace walksynth {

/// Membership flags over the coupling-graph vertices. Routing calls
/// require the induced subgraph on the active vertices to be connected.
struct ActiveSet {
  int n = 0;
  std::vector<char> member;

  static ActiveSet all(int n) { return {n, std::vector<char>(n, 1)}; }
  static ActiveSet of(int n, const std::vector<int>& vertices);

  bool contains(int v) const { return v >= 0 && v < n && member[v]; }
  void remove(int v) { member[v] = 0; }
  int count() const;
  std::vector<int> vertices() const;  // ascending
};

enum class TourKind { OpenPath, FixedStartPath, Cycle };

/// Simple tour over the active vertices of a supergraph. For cycles the
/// weight includes the closing edge; the closing vertex is not repeated
/// in `order`.
struct TspTour {
  std::vector<int> order;
  TourKind kind = TourKind::OpenPath;
  long weight = 0;
};

inline constexpr int kDefaultExactCap = 20;

/// Bellman-Held-Karp minimum-weight Hamiltonian path over the active
/// vertices; ties resolve to the lexicographically smallest sequence.
/// Throws std::domain_error above `cap` active vertices.
TspTour tsp_path_exact(const Supergraph& s, const ActiveSet& active,
                       int cap = kDefaultExactCap);

TspTour tsp_path_exact_fixed_start(const Supergraph& s, const ActiveSet& active,
                                   int start, int cap = kDefaultExactCap);

TspTour tsp_cycle_exact(const Supergraph& s, const ActiveSet& active,
                        int cap = kDefaultExactCap);

/// 2-opt local search for a closed tour. Starts from the active vertices
/// in ascending order and applies the first improving pair, restarting
/// the scan after each improvement; the result is deterministic.
/// `improvement_steps`, when given, receives the number of applied moves.
TspTour two_opt_cycle(const Supergraph& s, const ActiveSet& active,
                      int* improvement_steps = nullptr);

/// 2-opt for an open path. With a fixed start the path begins there and
/// no move displaces it; with no start every active vertex is tried and
/// the best (weight, then lexicographic order) result is returned.
TspTour two_opt_path(const Supergraph& s, const ActiveSet& active,
                     std::optional<int> start, int* improvement_steps = nullptr);

/// Replaces every tour hop by a concrete shortest path in the coupling
/// graph. Open tours give walks of tour.weight + 1 vertices; cycle tours
/// give closed walks.
Walk alpha_expand(const TspTour& tour, const DistanceTables& t);

struct RouteMode {
  enum class Kind { Open, FixedStart, Closed };
  Kind kind = Kind::Open;
  int start = -1;

  static RouteMode open() { return {Kind::Open, -1}; }
  static RouteMode fixed_start(int v) { return {Kind::FixedStart, v}; }
  static RouteMode closed() { return {Kind::Closed, -1}; }
};

enum class Router { Exact, TwoOpt };

/// Shortest covering walk of the induced active subgraph: supergraph
/// construction, tour search, then alpha-expansion, all restricted to
/// the active vertices. With the exact router the open/closed walk is
/// globally minimal. Open walks are trimmed so that the last vertex
/// (and for free-start searches the first) is not a revisit.
Walk shortest_covering_walk(const CouplingGraph& g, const ActiveSet& active,
                            RouteMode mode, Router router,
                            int exact_cap = kDefaultExactCap);

}  // namespace walksynth
