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

#include "walksynth/qft.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace walksynth {

std::vector<int> get_first_indexes(const Walk& walk) {
  if (walk.vertices.empty()) throw std::invalid_argument("walk is empty");
  std::set<int> seen;
  std::vector<int> positions;
  for (std::size_t h = 0; h < walk.vertices.size(); ++h)
    if (seen.insert(walk.vertices[h]).second)
      positions.push_back(static_cast<int>(h) + 1);
  return positions;
}

void construct_qft_cascade(Circuit& c, const Walk& walk, int r, MappingTrace& m) {
  const auto& w = walk.vertices;
  const int k = static_cast<int>(w.size());
  if (k == 0) throw std::invalid_argument("cascade walk is empty");
  if (m.logical_at(w[0]) != r)
    throw std::logic_error("cascade walk does not start at the target qubit");

  c.add(Gate::h(w[0]));
  // Tracked by logical qubit: on a revisited vertex the occupant has
  // already been phased and is skipped.
  std::vector<char> used(m.logical_to_physical.size(), 0);
  int j = 0;
  while (j <= k - 2) {
    int logical = m.logical_at(w[j + 1]);
    if (logical >= 0 && !used[logical]) {
      int d = logical - r;
      if (d < 1) throw std::logic_error("cascade met an already-finished qubit");
      c.add(Gate::cphase(w[j + 1], w[j], std::ldexp(std::numbers::pi, -d)));
      used[logical] = 1;
    }
    if (j <= k - 3 && w[j + 2] == w[j]) {
      j += 2;
    } else {
      if (k != 2) {
        c.add(Gate::swap(w[j], w[j + 1]));
        m = apply_swap_tracking(std::move(m), w[j], w[j + 1]);
      }
      j += 1;
    }
  }
}

QftResult construct_qft(const CouplingGraph& g, const QftOptions& opts) {
  const int n = g.n;
  QftResult res;
  res.circuit = Circuit(n, CircuitForm::Macro);

  ActiveSet active = ActiveSet::all(n);
  res.initial_walk = shortest_covering_walk(g, active, RouteMode::open(), opts.router,
                                            opts.exact_cap);

  res.first_indexes = get_first_indexes(res.initial_walk);
  MappingTrace m = MappingTrace::unassigned(n, n);
  for (int r = 0; r < n; ++r)
    m.assign(r, res.initial_walk.vertices[res.first_indexes[r] - 1]);
  res.initial_mapping = m;

  for (int r = 0; r < n; ++r) {
    Walk walk = r == 0 ? res.initial_walk
                       : shortest_covering_walk(g, active,
                                                RouteMode::fixed_start(m.physical_of(r)),
                                                opts.router, opts.exact_cap);

    // Cascades begin with an H, which blocks CNOT cancellation across the
    // boundary, so per-cascade costs add up to the circuit total.
    Circuit cascade_gates(n, CircuitForm::Macro);
    construct_qft_cascade(cascade_gates, walk, r, m);
    for (const Gate& gate : cascade_gates.gates) res.circuit.add(gate);

    res.cascades.push_back({r, walk, cnot_cost(cascade_gates)});
    int del = m.physical_of(r);
    active.remove(del);
    res.deleted_order.push_back(del);
  }
  res.final_mapping = std::move(m);
  return res;
}

}  // namespace walksynth
