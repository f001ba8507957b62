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

#include <utility>
#include <vector>

namespace walksynth {

/// Undirected, unweighted, connected graph of physical qubits. Two-qubit
/// gates are allowed only between endpoints of an edge.
struct CouplingGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;      // normalised u < v, sorted
  std::vector<std::vector<int>> adjacency;     // neighbour lists, ascending

  /// Validates vertex indices, rejects self-loops and duplicate edges,
  /// and requires connectivity. Throws std::invalid_argument otherwise.
  static CouplingGraph from_edges(int n, std::vector<std::pair<int, int>> edge_list);

  bool has_edge(int u, int v) const;
};

/// All-pairs hop distances W and predecessor matrix A. A[v][u] is the last
/// vertex before u on a shortest v->u path; the diagonal holds -1.
struct DistanceTables {
  int n = 0;
  std::vector<int> dist_data;  // n*n
  std::vector<int> pred_data;  // n*n

  int dist(int v, int u) const { return dist_data[static_cast<std::size_t>(v) * n + u]; }
  int pred(int v, int u) const { return pred_data[static_cast<std::size_t>(v) * n + u]; }
};

enum class WalkKind { Open, Closed };

/// Vertex sequence with consecutive adjacency; repeats allowed. A closed
/// walk starts and ends at the same vertex.
struct Walk {
  std::vector<int> vertices;
  WalkKind kind = WalkKind::Open;

  /// Number of vertices in the sequence.
  int length() const { return static_cast<int>(vertices.size()); }
};

/// Complete weighted graph on the same vertex set; edge weights are the
/// coupling-graph hop distances, so the weights are metric.
struct Supergraph {
  DistanceTables tables;

  int n() const { return tables.n; }
  int weight(int u, int v) const { return tables.dist(u, v); }
};

/// BFS from every vertex over ascending neighbour lists; the first
/// discovered predecessor wins, so the tables are deterministic.
DistanceTables shortest_paths(const CouplingGraph& g);

/// Shortest simple path from v to u, both endpoints included.
/// get_path(v, v) is the single-vertex walk (v).
Walk get_path(const DistanceTables& t, int v, int u);

/// As get_path but without the first vertex; empty for v == u.
Walk get_path_no_first(const DistanceTables& t, int v, int u);

Supergraph build_supergraph(const CouplingGraph& g);

}  // namespace walksynth
