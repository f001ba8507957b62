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

#include "walksynth/hashing.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace walksynth {

HashingAngles HashingAngles::uniform(int n_controls, int n_steps,
                                     const std::vector<double>& xi) {
  if (static_cast<int>(xi.size()) != n_controls)
    throw std::invalid_argument("angle list length does not match control count");
  HashingAngles a;
  a.steps.assign(n_steps, xi);
  return a;
}

HashingAngles HashingAngles::parse(std::istream& in, int n_controls) {
  HashingAngles a;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    std::vector<double> xi;
    double v = 0;
    while (ls >> v) {
      if (!std::isfinite(v)) throw std::invalid_argument("angle file: non-finite angle");
      xi.push_back(v);
    }
    if (!ls.eof()) throw std::invalid_argument("angle file: malformed line '" + line + "'");
    if (static_cast<int>(xi.size()) != n_controls)
      throw std::invalid_argument("angle file: expected " + std::to_string(n_controls) +
                                  " angles per line, found " + std::to_string(xi.size()));
    a.steps.push_back(std::move(xi));
  }
  if (a.steps.empty()) throw std::invalid_argument("angle file contains no angle lines");
  return a;
}

double angle_for_parameter(long k, long m) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  return 4.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
}

HashingPlan HashingPlan::from_walk(const Walk& walk, int n_vertices) {
  if (walk.length() < 2)
    throw std::invalid_argument("hashing needs a walk of at least 2 vertices");
  HashingPlan plan;
  plan.walk = walk;
  plan.target_vertex = walk.vertices[1];
  plan.control_of_vertex.assign(n_vertices, -1);

  for (int v : walk.vertices)
    if (v < 0 || v >= n_vertices)
      throw std::invalid_argument("walk vertex " + std::to_string(v) + " out of range");
  std::vector<char> seen(n_vertices, 0);
  seen[plan.target_vertex] = 1;
  int next_control = 0;
  for (int v : walk.vertices) {
    if (seen[v]) continue;
    seen[v] = 1;
    plan.control_of_vertex[v] = next_control++;
  }
  for (int v = 0; v < n_vertices; ++v)
    if (!seen[v])
      throw std::invalid_argument("hashing walk does not cover vertex " + std::to_string(v));
  if (next_control != n_vertices - 1)
    throw std::invalid_argument("control assignment is not a bijection");

  const auto& w = walk.vertices;
  for (std::size_t j = 0; j + 2 < w.size(); ++j)
    if (w[j] == w[j + 2]) ++plan.stay_count;
  return plan;
}

MappingTrace HashingPlan::initial_mapping() const {
  const int n = static_cast<int>(control_of_vertex.size());
  MappingTrace m = MappingTrace::unassigned(n, n);
  m.assign(n - 1, target_vertex);
  for (int v = 0; v < n; ++v)
    if (control_of_vertex[v] >= 0) m.assign(control_of_vertex[v], v);
  return m;
}

namespace {

// One application of the hashing pattern along `w`. The target logical
// qubit must sit on w[1]. Returns the 0-based walk position holding the
// target afterwards. With `merge_first` the initial rotation folds into
// a directly preceding rotation on the same wire pair.
int emit_hash_step(Circuit& c, const std::vector<int>& w, MappingTrace& m,
                   std::span<const double> xi, bool merge_first) {
  const int k = static_cast<int>(w.size());
  const int n_logical = static_cast<int>(m.logical_to_physical.size());
  const int target_logical = n_logical - 1;
  if (m.logical_at(w[1]) != target_logical)
    throw std::logic_error("hash step: target qubit is not on the walk's second vertex");

  // Controls that already received their rotation this step. Tracked by
  // logical qubit: a displaced control can sit on a vertex the walk
  // revisits, and must not fire twice.
  std::vector<char> used(n_logical, 0);

  auto emit_cr = [&](int ctrl_vertex, int tgt_vertex, bool mergeable) {
    int logical = m.logical_at(ctrl_vertex);
    if (logical < 0 || logical >= target_logical)
      throw std::logic_error("hash step: control vertex does not hold a control qubit");
    used[logical] = 1;
    double angle = xi[logical];
    if (mergeable && !c.gates.empty()) {
      Gate& last = c.gates.back();
      if (last.kind == GateKind::CRy && last.q0 == ctrl_vertex && last.q1 == tgt_vertex) {
        last.angle += angle;
        return;
      }
    }
    c.add(Gate::cry(ctrl_vertex, tgt_vertex, angle));
  };
  auto is_fresh = [&](int vertex) {
    int logical = m.logical_at(vertex);
    return logical >= 0 && logical < target_logical && !used[logical];
  };

  emit_cr(w[0], w[1], merge_first);

  int j = 1;
  if (k >= 3 && is_fresh(w[2])) emit_cr(w[2], w[1], false);
  while (j < k - 2) {
    if (w[j + 2] == w[j]) {
      j += 2;
    } else {
      c.add(Gate::swap(w[j], w[j + 1]));
      m = apply_swap_tracking(std::move(m), w[j], w[j + 1]);
      j += 1;
    }
    if (j + 1 <= k - 1 && is_fresh(w[j + 1])) emit_cr(w[j + 1], w[j], false);
  }
  return j;
}

void check_angles(const HashingAngles& angles, int n) {
  if (angles.step_count() < 1) throw std::invalid_argument("need at least one step");
  for (const auto& xi : angles.steps) {
    if (static_cast<int>(xi.size()) != n - 1)
      throw std::invalid_argument("each step needs exactly n-1 angles");
    for (double a : xi)
      if (!std::isfinite(a)) throw std::invalid_argument("angles must be finite");
  }
}

}  // namespace

std::pair<Circuit, MappingTrace> construct_hash_step(const HashingPlan& plan,
                                                     std::span<const double> xi) {
  const int n = static_cast<int>(plan.control_of_vertex.size());
  if (static_cast<int>(xi.size()) != n - 1)
    throw std::invalid_argument("step needs exactly n-1 angles");
  Circuit c(n, CircuitForm::Macro);
  MappingTrace m = plan.initial_mapping();
  emit_hash_step(c, plan.walk.vertices, m, xi, false);
  return {std::move(c), std::move(m)};
}

HashResult construct_hash_repeated_path(const CouplingGraph& g,
                                        const HashingAngles& angles,
                                        const HashOptions& opts) {
  check_angles(angles, g.n);
  if (g.n < 2) throw std::invalid_argument("hashing needs at least 2 qubits");

  Walk walk = shortest_covering_walk(g, ActiveSet::all(g.n), RouteMode::open(),
                                     opts.router, opts.exact_cap);
  HashingPlan plan = HashingPlan::from_walk(walk, g.n);

  HashResult r;
  r.walk = walk;
  r.stay_count = plan.stay_count;
  r.steps = angles.step_count();
  r.initial_mapping = plan.initial_mapping();
  r.circuit = Circuit(g.n, CircuitForm::Macro);

  std::vector<int> forward = walk.vertices;
  std::vector<int> backward(forward.rbegin(), forward.rend());
  MappingTrace m = r.initial_mapping;
  for (int s = 0; s < angles.step_count(); ++s) {
    // A two-vertex walk never moves the target, so the orientation is
    // kept; longer walks alternate direction each step.
    const auto& w = (forward.size() == 2 || s % 2 == 0) ? forward : backward;
    emit_hash_step(r.circuit, w, m, angles.steps[s],
                   s > 0 && opts.merge_step_boundaries);
  }
  r.final_mapping = std::move(m);
  return r;
}

HashResult construct_hash_repeated_cycle(const CouplingGraph& g,
                                         const HashingAngles& angles,
                                         const HashOptions& opts) {
  check_angles(angles, g.n);
  if (g.n < 2) throw std::invalid_argument("hashing needs at least 2 qubits");

  Walk cycle = shortest_covering_walk(g, ActiveSet::all(g.n), RouteMode::closed(),
                                      opts.router, opts.exact_cap);
  const int steps = angles.step_count();

  // A single application does not need the closing return hop.
  std::vector<int> pattern = cycle.vertices;
  if (steps == 1 && pattern.size() > 1) pattern.pop_back();

  HashingPlan plan = HashingPlan::from_walk(Walk{pattern, WalkKind::Open}, g.n);

  HashResult r;
  r.walk = cycle;
  r.stay_count = plan.stay_count;
  r.steps = steps;
  r.initial_mapping = plan.initial_mapping();
  r.circuit = Circuit(g.n, CircuitForm::Macro);

  const int v1 = pattern.front();
  const int v2 = pattern[1];
  // Last distinct cycle vertex; only meaningful for the closed pattern.
  const int vk = pattern[pattern.size() - (steps > 1 ? 2 : 1)];

  MappingTrace m = r.initial_mapping;
  int end_pos = emit_hash_step(r.circuit, pattern, m, angles.steps[0], false);
  for (int s = 1; s < steps; ++s) {
    // Ferry the target back to the walk start. It ends on either the
    // last distinct cycle vertex or, via a trailing stay, on the start
    // itself; the wrap SWAPs ride the cycle's closing edge.
    int tv = pattern[end_pos];
    if (tv != v2) {
      if (tv == vk) {
        r.circuit.add(Gate::swap(vk, v1));
        m = apply_swap_tracking(std::move(m), vk, v1);
        tv = v1;
      }
      if (tv != v1)
        throw std::logic_error("cycle strategy: target ended off the cycle seam");
      r.circuit.add(Gate::swap(v1, v2));
      m = apply_swap_tracking(std::move(m), v1, v2);
    }
    end_pos = emit_hash_step(r.circuit, pattern, m, angles.steps[s], false);
  }
  r.final_mapping = std::move(m);
  return r;
}

double accept_probability(const std::vector<long>& K, long m, long g) {
  if (m < 1) throw std::invalid_argument("modulus must be positive");
  if (K.empty()) throw std::invalid_argument("parameter set is empty");
  double sum = 0;
  for (long k : K)
    sum += std::cos(2.0 * std::numbers::pi * static_cast<double>(k) *
                    static_cast<double>(g) / static_cast<double>(m));
  double t = static_cast<double>(K.size());
  return (sum * sum) / (t * t);
}

bool is_good_set(const std::vector<long>& K, long m, double eps) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  for (long g = 1; g < m; ++g)
    if (accept_probability(K, m, g) >= eps) return false;
  return true;
}

}  // namespace walksynth
