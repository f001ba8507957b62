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

#include "walksynth/coupling_graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace walksynth {

CouplingGraph CouplingGraph::from_edges(int n, std::vector<std::pair<int, int>> edge_list) {
  if (n <= 0) throw std::invalid_argument("coupling graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edge_list) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for " + std::to_string(n) + " vertices");
    if (u == v)
      throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
  }

  CouplingGraph g;
  g.n = n;
  g.edges.assign(seen.begin(), seen.end());
  g.adjacency.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity: BFS from vertex 0.
  std::vector<char> reached(n, 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int r : g.adjacency[t])
      if (!reached[r]) {
        reached[r] = 1;
        queue.push_back(r);
      }
  }
  for (int v = 0; v < n; ++v)
    if (!reached[v])
      throw std::invalid_argument("coupling graph is disconnected: vertex " +
                                  std::to_string(v) + " is unreachable from vertex 0");
  return g;
}

bool CouplingGraph::has_edge(int u, int v) const {
  if (u < 0 || u >= n || v < 0 || v >= n || u == v) return false;
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DistanceTables shortest_paths(const CouplingGraph& g) {
  const int n = g.n;
  DistanceTables t;
  t.n = n;
  t.dist_data.assign(static_cast<std::size_t>(n) * n, -1);
  t.pred_data.assign(static_cast<std::size_t>(n) * n, -1);

  std::deque<int> queue;
  for (int v = 0; v < n; ++v) {
    auto* dist = &t.dist_data[static_cast<std::size_t>(v) * n];
    auto* pred = &t.pred_data[static_cast<std::size_t>(v) * n];
    dist[v] = 0;
    queue.assign(1, v);
    while (!queue.empty()) {
      int cur = queue.front();
      queue.pop_front();
      for (int r : g.adjacency[cur]) {
        if (dist[r] < 0) {
          dist[r] = dist[cur] + 1;
          pred[r] = cur;
          queue.push_back(r);
        }
      }
    }
  }
  return t;
}

Walk get_path(const DistanceTables& t, int v, int u) {
  if (v < 0 || v >= t.n || u < 0 || u >= t.n)
    throw std::invalid_argument("get_path: vertex out of range");
  Walk w;
  w.kind = WalkKind::Open;
  if (v == u) {
    w.vertices = {v};
    return w;
  }
  std::vector<int> rev{u};
  int cur = t.pred(v, u);
  while (cur != v) {
    rev.push_back(cur);
    cur = t.pred(v, cur);
  }
  rev.push_back(v);
  w.vertices.assign(rev.rbegin(), rev.rend());
  return w;
}

Walk get_path_no_first(const DistanceTables& t, int v, int u) {
  Walk w = get_path(t, v, u);
  w.vertices.erase(w.vertices.begin());
  return w;
}

Supergraph build_supergraph(const CouplingGraph& g) {
  return Supergraph{shortest_paths(g)};
}

}  // namespace walksynth
