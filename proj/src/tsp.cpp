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

#include "walksynth/tsp.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace walksynth {

ActiveSet ActiveSet::of(int n, const std::vector<int>& vertices) {
  ActiveSet a{n, std::vector<char>(n, 0)};
  for (int v : vertices) {
    if (v < 0 || v >= n) throw std::invalid_argument("active vertex out of range");
    a.member[v] = 1;
  }
  return a;
}

int ActiveSet::count() const {
  int c = 0;
  for (char m : member) c += m;
  return c;
}

std::vector<int> ActiveSet::vertices() const {
  std::vector<int> v;
  for (int i = 0; i < n; ++i)
    if (member[i]) v.push_back(i);
  return v;
}

namespace {

constexpr long kInf = std::numeric_limits<long>::max() / 4;
// DP entries are 32-bit: at the subset cap the table holds cap * 2^cap
// values, and tour weights stay far below the int range.
constexpr std::int32_t kInf32 = std::numeric_limits<std::int32_t>::max() / 4;

void check_cap(int count, int cap) {
  if (count > cap)
    throw std::domain_error("exact router infeasible for " + std::to_string(count) +
                            " active vertices (cap " + std::to_string(cap) +
                            "), use 2-opt");
}

std::vector<int> active_or_throw(const ActiveSet& active) {
  std::vector<int> verts = active.vertices();
  if (verts.empty()) throw std::invalid_argument("active set is empty");
  return verts;
}

// Suffix DP over subsets of the compacted active vertices:
// cost[mask][v] = minimum weight of a simple path that starts at v and
// visits exactly the vertices of mask. When closing_to >= 0 the weight
// of the edge back to that (compacted) vertex is added at the path end,
// which turns the table into the cycle variant.
std::vector<std::int32_t> coverage_costs(const std::vector<int>& verts,
                                         const Supergraph& s, int closing_to) {
  const int a = static_cast<int>(verts.size());
  const std::size_t masks = std::size_t{1} << a;
  std::vector<std::int32_t> cost(masks * a, kInf32);
  for (int v = 0; v < a; ++v) {
    std::int32_t base = closing_to >= 0 ? s.weight(verts[v], verts[closing_to]) : 0;
    cost[(std::size_t{1} << v) * a + v] = base;
  }
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (int v = 0; v < a; ++v) {
      if (!(mask & (std::size_t{1} << v))) continue;
      std::size_t rest = mask ^ (std::size_t{1} << v);
      if (rest == 0) continue;
      std::int32_t best = kInf32;
      for (int u = 0; u < a; ++u) {
        if (!(rest & (std::size_t{1} << u))) continue;
        std::int32_t c = s.weight(verts[v], verts[u]) + cost[rest * a + u];
        best = std::min(best, c);
      }
      cost[mask * a + v] = best;
    }
  }
  return cost;
}

// Front-to-back reconstruction: at each position take the smallest next
// vertex that still attains the optimal completion cost, which yields the
// lexicographically smallest minimum-weight sequence.
std::vector<int> reconstruct(const std::vector<int>& verts, const Supergraph& s,
                             const std::vector<std::int32_t>& cost, int first) {
  const int a = static_cast<int>(verts.size());
  std::vector<int> order{verts[first]};
  std::size_t mask = ((std::size_t{1} << a) - 1) ^ (std::size_t{1} << first);
  int cur = first;
  while (mask != 0) {
    std::int32_t target = cost[(mask | (std::size_t{1} << cur)) * a + cur];
    for (int u = 0; u < a; ++u) {
      if (!(mask & (std::size_t{1} << u))) continue;
      if (s.weight(verts[cur], verts[u]) + cost[mask * a + u] == target) {
        order.push_back(verts[u]);
        mask ^= std::size_t{1} << u;
        cur = u;
        break;
      }
    }
  }
  return order;
}

long path_weight(const Supergraph& s, const std::vector<int>& order, bool closed) {
  long w = 0;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) w += s.weight(order[i], order[i + 1]);
  if (closed && order.size() > 1) w += s.weight(order.back(), order.front());
  return w;
}

}  // namespace

TspTour tsp_path_exact(const Supergraph& s, const ActiveSet& active, int cap) {
  std::vector<int> verts = active_or_throw(active);
  check_cap(static_cast<int>(verts.size()), cap);
  const int a = static_cast<int>(verts.size());
  if (a == 1) return {{verts[0]}, TourKind::OpenPath, 0};

  std::vector<std::int32_t> cost = coverage_costs(verts, s, -1);
  const std::size_t full = (std::size_t{1} << a) - 1;
  int best_start = 0;
  for (int v = 1; v < a; ++v)
    if (cost[full * a + v] < cost[full * a + best_start]) best_start = v;

  TspTour tour;
  tour.kind = TourKind::OpenPath;
  tour.weight = cost[full * a + best_start];
  tour.order = reconstruct(verts, s, cost, best_start);
  return tour;
}

TspTour tsp_path_exact_fixed_start(const Supergraph& s, const ActiveSet& active,
                                   int start, int cap) {
  std::vector<int> verts = active_or_throw(active);
  if (!active.contains(start))
    throw std::invalid_argument("fixed start vertex " + std::to_string(start) +
                                " is not active");
  check_cap(static_cast<int>(verts.size()), cap);
  const int a = static_cast<int>(verts.size());
  int first = static_cast<int>(std::lower_bound(verts.begin(), verts.end(), start) -
                               verts.begin());
  if (a == 1) return {{start}, TourKind::FixedStartPath, 0};

  std::vector<std::int32_t> cost = coverage_costs(verts, s, -1);
  const std::size_t full = (std::size_t{1} << a) - 1;
  TspTour tour;
  tour.kind = TourKind::FixedStartPath;
  tour.weight = cost[full * a + first];
  tour.order = reconstruct(verts, s, cost, first);
  return tour;
}

TspTour tsp_cycle_exact(const Supergraph& s, const ActiveSet& active, int cap) {
  std::vector<int> verts = active_or_throw(active);
  check_cap(static_cast<int>(verts.size()), cap);
  const int a = static_cast<int>(verts.size());
  if (a == 1) return {{verts[0]}, TourKind::Cycle, 0};

  // Every cycle passes through the smallest active vertex; anchoring the
  // sequence there makes the lexicographic tie-break well defined.
  std::vector<std::int32_t> cost = coverage_costs(verts, s, 0);
  const std::size_t full = (std::size_t{1} << a) - 1;
  TspTour tour;
  tour.kind = TourKind::Cycle;
  tour.weight = cost[full * a + 0];
  tour.order = reconstruct(verts, s, cost, 0);
  return tour;
}

namespace {

// One 2-opt pass structure shared by cycles and paths: edge i joins t[i]
// and t[(i+1) mod n]; paths have n-1 real edges plus, as candidate j
// only, the zero-weight virtual edge past the last vertex, so a tail
// segment can be reversed without touching the (possibly fixed) start.
// Applies the first improving pair in (k outer, j inner) order and
// restarts; returns the number of applied moves.
int two_opt_refine(std::vector<int>& t, const Supergraph& s, bool cycle) {
  const int n = static_cast<int>(t.size());
  const int k_count = cycle ? n : n - 1;
  int steps = 0;
  bool improved = true;
  while (improved) {
    improved = false;
    for (int k = 0; k < k_count && !improved; ++k) {
      for (int j = k + 1; j < n && !improved; ++j) {
        int ak = t[k], bk = t[(k + 1) % n];
        long before, after;
        if (!cycle && j == n - 1) {
          before = s.weight(ak, bk);
          after = s.weight(ak, t[n - 1]);
        } else {
          int aj = t[j], bj = t[(j + 1) % n];
          before = s.weight(ak, bk) + s.weight(aj, bj);
          after = s.weight(ak, aj) + s.weight(bk, bj);
        }
        if (before > after) {
          std::reverse(t.begin() + k + 1, t.begin() + j + 1);
          ++steps;
          improved = true;
        }
      }
    }
  }
  return steps;
}

}  // namespace

TspTour two_opt_cycle(const Supergraph& s, const ActiveSet& active,
                      int* improvement_steps) {
  std::vector<int> verts = active_or_throw(active);
  int steps = 0;
  if (verts.size() >= 3) steps = two_opt_refine(verts, s, true);
  if (improvement_steps) *improvement_steps = steps;
  return {verts, TourKind::Cycle, path_weight(s, verts, true)};
}

TspTour two_opt_path(const Supergraph& s, const ActiveSet& active,
                     std::optional<int> start, int* improvement_steps) {
  std::vector<int> verts = active_or_throw(active);

  auto run_fixed = [&](int v) {
    std::vector<int> t{v};
    for (int u : verts)
      if (u != v) t.push_back(u);
    int steps = 0;
    if (t.size() >= 3) steps = two_opt_refine(t, s, false);
    return std::pair<std::vector<int>, int>{std::move(t), steps};
  };

  if (start) {
    if (!active.contains(*start))
      throw std::invalid_argument("fixed start vertex " + std::to_string(*start) +
                                  " is not active");
    auto [t, steps] = run_fixed(*start);
    if (improvement_steps) *improvement_steps = steps;
    long w = path_weight(s, t, false);
    return {std::move(t), TourKind::FixedStartPath, w};
  }

  std::vector<int> best;
  long best_weight = kInf;
  int total_steps = 0;
  for (int v : verts) {
    auto [t, steps] = run_fixed(v);
    total_steps += steps;
    long w = path_weight(s, t, false);
    if (w < best_weight || (w == best_weight && t < best)) {
      best = std::move(t);
      best_weight = w;
    }
  }
  if (improvement_steps) *improvement_steps = total_steps;
  return {std::move(best), TourKind::OpenPath, best_weight};
}

Walk alpha_expand(const TspTour& tour, const DistanceTables& t) {
  if (tour.order.empty()) throw std::invalid_argument("alpha_expand: empty tour");
  const bool closed = tour.kind == TourKind::Cycle;
  Walk walk = get_path(t, tour.order[0],
                       tour.order.size() > 1 ? tour.order[1] : tour.order[0]);
  for (std::size_t i = 1; i + 1 < tour.order.size(); ++i) {
    Walk hop = get_path_no_first(t, tour.order[i], tour.order[i + 1]);
    walk.vertices.insert(walk.vertices.end(), hop.vertices.begin(), hop.vertices.end());
  }
  if (closed && tour.order.size() > 1) {
    Walk hop = get_path_no_first(t, tour.order.back(), tour.order.front());
    walk.vertices.insert(walk.vertices.end(), hop.vertices.begin(), hop.vertices.end());
  }
  walk.kind = closed ? WalkKind::Closed : WalkKind::Open;
  return walk;
}

namespace {

// Relabels the induced active subgraph to 0..a-1, keeping `verts` as the
// local-to-global map.
CouplingGraph induced_graph(const CouplingGraph& g, const std::vector<int>& verts) {
  std::vector<int> local(g.n, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges)
    if (local[u] >= 0 && local[v] >= 0) edges.push_back({local[u], local[v]});

  // Report a separated vertex before CouplingGraph's own check so the
  // message names vertices in the caller's numbering.
  const int a = static_cast<int>(verts.size());
  std::vector<std::vector<int>> adj(a);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> reached(a, 0);
  std::deque<int> queue{0};
  reached[0] = 1;
  while (!queue.empty()) {
    int t = queue.front();
    queue.pop_front();
    for (int r : adj[t])
      if (!reached[r]) {
        reached[r] = 1;
        queue.push_back(r);
      }
  }
  for (int i = 0; i < a; ++i)
    if (!reached[i])
      throw std::invalid_argument("active subgraph is disconnected: vertex " +
                                  std::to_string(verts[i]) + " is separated from vertex " +
                                  std::to_string(verts[0]));
  return CouplingGraph::from_edges(a, std::move(edges));
}

void trim_open_walk(std::vector<int>& w, bool trim_front) {
  auto count_of = [&](int v) { return std::count(w.begin(), w.end(), v); };
  while (w.size() > 1 && count_of(w.back()) > 1) w.pop_back();
  if (trim_front)
    while (w.size() > 1 && count_of(w.front()) > 1) w.erase(w.begin());
}

}  // namespace

Walk shortest_covering_walk(const CouplingGraph& g, const ActiveSet& active,
                            RouteMode mode, Router router, int exact_cap) {
  std::vector<int> verts = active_or_throw(active);
  CouplingGraph sub = induced_graph(g, verts);
  Supergraph sg = build_supergraph(sub);
  ActiveSet all = ActiveSet::all(sub.n);

  int local_start = -1;
  if (mode.kind == RouteMode::Kind::FixedStart) {
    if (!active.contains(mode.start))
      throw std::invalid_argument("fixed start vertex " + std::to_string(mode.start) +
                                  " is not active");
    local_start = static_cast<int>(
        std::lower_bound(verts.begin(), verts.end(), mode.start) - verts.begin());
  }

  TspTour tour;
  switch (mode.kind) {
    case RouteMode::Kind::Open:
      tour = router == Router::Exact ? tsp_path_exact(sg, all, exact_cap)
                                     : two_opt_path(sg, all, std::nullopt);
      break;
    case RouteMode::Kind::FixedStart:
      tour = router == Router::Exact
                 ? tsp_path_exact_fixed_start(sg, all, local_start, exact_cap)
                 : two_opt_path(sg, all, local_start);
      break;
    case RouteMode::Kind::Closed:
      tour = router == Router::Exact ? tsp_cycle_exact(sg, all, exact_cap)
                                     : two_opt_cycle(sg, all);
      break;
  }

  Walk walk = alpha_expand(tour, sg.tables);
  if (walk.kind == WalkKind::Open)
    trim_open_walk(walk.vertices, mode.kind == RouteMode::Kind::Open);
  for (int& v : walk.vertices) v = verts[v];
  return walk;
}

}  // namespace walksynth
