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

#include "walksynth/report.hpp"

#include <json.hpp>

namespace walksynth {

namespace {

using OrderedJson = nlohmann::ordered_json;

void add_upper(std::vector<BoundCheck>& bounds, const std::string& name, long bound,
               long measured) {
  bounds.push_back({name, true, bound, measured, measured <= bound});
}

void add_lower(std::vector<BoundCheck>& bounds, const std::string& name, long bound,
               long measured) {
  bounds.push_back({name, false, bound, measured, measured >= bound});
}

bool is_lnn(const std::string& spec) { return spec.rfind("lnn:", 0) == 0; }

}  // namespace

bool SynthesisReport::all_bounds_pass() const {
  for (const auto& b : bounds)
    if (!b.pass) return false;
  return true;
}

std::string SynthesisReport::to_json() const {
  OrderedJson j;
  j["algorithm"] = algorithm;
  j["graph"] = graph;
  j["n"] = n;
  j["router"] = router;
  if (strategy) j["strategy"] = *strategy;
  if (steps) j["steps"] = *steps;
  OrderedJson walks_json = OrderedJson::array();
  for (const auto& w : walks) walks_json.push_back(w.vertices);
  j["walks"] = walks_json;
  j["initial_mapping"] = initial_mapping;
  j["final_mapping"] = final_mapping;
  j["cnot_cost"] = cnot_cost;
  OrderedJson bounds_json = OrderedJson::array();
  for (const auto& b : bounds) {
    OrderedJson bj;
    bj["name"] = b.name;
    bj["kind"] = b.is_upper ? "upper" : "lower";
    bj["bound"] = b.bound;
    bj["measured"] = b.measured;
    bj["pass"] = b.pass;
    bounds_json.push_back(bj);
  }
  j["bounds"] = bounds_json;
  OrderedJson cmp = OrderedJson::object();
  for (const auto& [name, value] : comparisons) cmp[name] = value;
  j["comparisons"] = cmp;
  if (verified) j["verified"] = *verified;
  return j.dump(2) + "\n";
}

SynthesisReport report_for_hash(const HashResult& r, const std::string& graph_spec,
                                const std::string& strategy, Router router) {
  SynthesisReport rep;
  rep.algorithm = "hash";
  rep.graph = graph_spec;
  rep.n = r.circuit.n_wires;
  rep.router = router == Router::Exact ? "exact" : "two_opt";
  rep.strategy = strategy;
  rep.steps = r.steps;
  rep.walks = {r.walk};
  rep.initial_mapping = r.initial_mapping.logical_to_physical;
  rep.final_mapping = r.final_mapping.logical_to_physical;
  rep.cnot_cost = cnot_cost(r.circuit);

  const long n = rep.n;
  const long ell = r.steps;
  if (strategy == "path") {
    const long k = r.walk.length();
    if (ell == 1) {
      add_upper(rep.bounds, "single_step_3k_minus_2", 3 * k - 2, rep.cnot_cost);
      add_upper(rep.bounds, "single_step_range_upper", (3 * n * n + 3 * n) / 2 - 2,
                rep.cnot_cost);
    }
    add_upper(rep.bounds, "path_strategy_upper", (3 * k - 4) * ell + 2, rep.cnot_cost);
  } else {
    const long k = r.walk.length() - 1;  // closed walk repeats its start
    add_upper(rep.bounds, "cycle_strategy_upper", (3 * k - 3) * (ell + 1) + 1,
              rep.cnot_cost);
  }

  if (is_lnn(graph_spec))
    rep.comparisons.push_back({"lnn_closed_form", 3 * n * ell - 7 * ell + 2});
  if (graph_spec == "sun16") rep.comparisons.push_back({"published_reference", 42});
  if (graph_spec == "twosuns27") rep.comparisons.push_back({"published_reference", 69});
  return rep;
}

SynthesisReport report_for_qft(const QftResult& r, const std::string& graph_spec,
                               Router router) {
  SynthesisReport rep;
  rep.algorithm = "qft";
  rep.graph = graph_spec;
  rep.n = r.circuit.n_wires;
  rep.router = router == Router::Exact ? "exact" : "two_opt";
  for (const auto& c : r.cascades) rep.walks.push_back(c.walk);
  rep.initial_mapping = r.initial_mapping.logical_to_physical;
  rep.final_mapping = r.final_mapping.logical_to_physical;
  rep.cnot_cost = cnot_cost(r.circuit);

  const long n = rep.n;
  const long k = r.initial_walk.length();
  add_upper(rep.bounds, "qft_upper_3kn_minus_2n", 3 * k * n - 2 * n, rep.cnot_cost);
  if (router == Router::Exact && n >= 2) {
    add_upper(rep.bounds, "qft_range_upper",
              (3 * n * n * n - 3 * n * n) / 2 - 2 * n, rep.cnot_cost);
    // Stay-steps can undercut the Hamiltonian closed form, so the range
    // floor only applies when every cascade walk is Hamiltonian (where
    // it is attained exactly).
    bool all_hamiltonian = true;
    for (const auto& c : r.cascades)
      if (c.walk.length() != n - c.r) all_hamiltonian = false;
    if (all_hamiltonian) {
      long lower = (3 * n * n - 3 * n) / 2 - 1;
      add_lower(rep.bounds, "qft_range_lower", std::max(0L, lower), rep.cnot_cost);
    }
  }

  if (is_lnn(graph_spec)) {
    rep.comparisons.push_back({"park_ahn_lnn", n * n + n - 4});
    rep.comparisons.push_back({"hand_optimized", (3 * n * n - 5 * n) / 2 + 1});
  }
  if (graph_spec == "sun16") {
    rep.comparisons.push_back({"published_reference", 342});
    rep.comparisons.push_back({"hand_optimized", 324});
  }
  if (graph_spec == "twosuns27") {
    rep.comparisons.push_back({"published_reference", 1009});
    rep.comparisons.push_back({"hand_optimized", 957});
  }
  return rep;
}

WirePermutation qft_output_permutation(const MappingTrace& final_mapping) {
  const int n = static_cast<int>(final_mapping.logical_to_physical.size());
  WirePermutation p;
  p.to_physical.resize(n);
  for (int r = 0; r < n; ++r)
    p.to_physical[r] = final_mapping.logical_to_physical[n - 1 - r];
  return p;
}

bool verify_hash(const HashResult& r, const HashingAngles& angles, double tol) {
  UnitaryMatrix u = circuit_unitary(decompose(r.circuit));
  UnitaryMatrix ref = hash_reference(r.circuit.n_wires, angles.steps);
  WirePermutation pin{r.initial_mapping.logical_to_physical};
  WirePermutation pout{r.final_mapping.logical_to_physical};
  return equivalent_up_to_permutation(u, ref, pin, pout, tol);
}

bool verify_qft(const QftResult& r, double tol) {
  UnitaryMatrix u = circuit_unitary(decompose(r.circuit));
  UnitaryMatrix ref = qft_reference(r.circuit.n_wires);
  WirePermutation pin{r.initial_mapping.logical_to_physical};
  WirePermutation pout = qft_output_permutation(r.final_mapping);
  return equivalent_up_to_permutation(u, ref, pin, pout, tol);
}

}  // namespace walksynth
