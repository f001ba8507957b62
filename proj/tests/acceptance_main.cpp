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

// End-to-end acceptance run. Each criterion prints one PASS/FAIL line;
// every circuit synthesized along the way is also pushed through the
// cost-theorem checks, which criterion 10 requires to hold without
// exception.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "walksynth/graph_io.hpp"
#include "walksynth/qasm.hpp"
#include "walksynth/report.hpp"

using namespace walksynth;

namespace {

struct Harness {
  int failures = 0;
  long bound_checks = 0;
  long bound_violations = 0;

  void record_bounds(const SynthesisReport& rep) {
    for (const auto& b : rep.bounds) {
      ++bound_checks;
      if (!b.pass) {
        ++bound_violations;
        std::printf("  bound violation: %s %s=%ld measured=%ld (%s)\n",
                    b.name.c_str(), b.is_upper ? "max" : "min", b.bound, b.measured,
                    rep.graph.c_str());
      }
    }
  }

  void result(int criterion, const std::string& what, bool pass, double seconds,
              const std::string& detail = "") {
    std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", criterion,
                what.c_str(), seconds, detail.empty() ? "" : " — ", detail.c_str());
    if (!pass) ++failures;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string int_list(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + std::to_string(v[i]);
  return out + "]";
}

void print_routing(const SynthesisReport& rep) {
  std::printf("  %s %s: walk=%s\n", rep.graph.c_str(), rep.algorithm.c_str(),
              int_list(rep.walks.front().vertices).c_str());
  std::printf("  %s %s: initial=%s final=%s\n", rep.graph.c_str(),
              rep.algorithm.c_str(), int_list(rep.initial_mapping).c_str(),
              int_list(rep.final_mapping).c_str());
}

HashingAngles fixed_angles(int n, int steps) {
  std::vector<double> xi(n - 1);
  for (int c = 0; c < n - 1; ++c) xi[c] = 0.4 + 0.13 * c;
  return HashingAngles::uniform(n - 1, steps, xi);
}

HashingAngles random_angles(int n, int steps, std::mt19937& rng) {
  std::uniform_real_distribution<double> dist(-std::numbers::pi, std::numbers::pi);
  HashingAngles a;
  for (int s = 0; s < steps; ++s) {
    std::vector<double> xi(n - 1);
    for (double& x : xi) x = dist(rng);
    a.steps.push_back(std::move(xi));
  }
  return a;
}

// 1. Single-application hashing on chains: cost is exactly 3n-5.
void criterion1(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 3; n <= 16; ++n) {
    auto r = construct_hash_repeated_path(lnn_graph(n), fixed_angles(n, 1));
    auto rep = report_for_hash(r, "lnn:" + std::to_string(n), "path", Router::Exact);
    h.record_bounds(rep);
    if (rep.cnot_cost != 3 * n - 5) {
      pass = false;
      detail = "n=" + std::to_string(n) + " cost=" + std::to_string(rep.cnot_cost);
    }
  }
  double t = seconds_since(start);
  h.result(1, "chain hashing cost 3n-5, n=3..16", pass && t < 1.0, t, detail);
}

// 2. Repeated path strategy on chains: exactly 3nl-7l+2.
void criterion2(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 3; n <= 10; ++n) {
    for (int ell = 1; ell <= 5; ++ell) {
      auto r = construct_hash_repeated_path(lnn_graph(n), fixed_angles(n, ell));
      auto rep = report_for_hash(r, "lnn:" + std::to_string(n), "path", Router::Exact);
      h.record_bounds(rep);
      if (rep.cnot_cost != 3 * n * ell - 7 * ell + 2) {
        pass = false;
        detail = "n=" + std::to_string(n) + " l=" + std::to_string(ell) +
                 " cost=" + std::to_string(rep.cnot_cost);
      }
    }
  }
  h.result(2, "chain repeated hashing cost 3nl-7l+2, n=3..10 l=1..5", pass,
           seconds_since(start), detail);
}

// 3. Chain Fourier transform: exactly 1.5n^2-1.5n-1.
void criterion3(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  for (int n = 2; n <= 16; ++n) {
    auto r = construct_qft(lnn_graph(n));
    auto rep = report_for_qft(r, "lnn:" + std::to_string(n), Router::Exact);
    h.record_bounds(rep);
    if (rep.cnot_cost != (3 * n * n - 3 * n) / 2 - 1) {
      pass = false;
      detail = "n=" + std::to_string(n) + " cost=" + std::to_string(rep.cnot_cost);
    }
  }
  double t = seconds_since(start);
  h.result(3, "chain transform cost 1.5n^2-1.5n-1, n=2..16", pass && t < 5.0, t,
           detail);
}

// 4. Hamiltonian-path graphs keep the same closed form.
void criterion4(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  auto check = [&](const CouplingGraph& g, const std::string& name) {
    auto r = construct_qft(g);
    auto rep = report_for_qft(r, name, Router::Exact);
    h.record_bounds(rep);
    long n = g.n;
    if (rep.cnot_cost != (3 * n * n - 3 * n) / 2 - 1) {
      pass = false;
      detail = name + " cost=" + std::to_string(rep.cnot_cost);
    }
  };
  for (int n = 2; n <= 12; ++n) check(complete_graph(n), "complete:" + std::to_string(n));
  for (int n = 3; n <= 12; ++n) check(cycle_graph(n), "cycle:" + std::to_string(n));
  h.result(4, "hamiltonian-path graphs hit the closed form, n<=12", pass,
           seconds_since(start), detail);
}

// 5. Device presets against the published reference counts (+-5%).
void criterion5(Harness& h) {
  auto within = [](long measured, long target) {
    return std::llabs(measured - target) * 20 <= target;  // +-5%
  };

  auto s16 = std::chrono::steady_clock::now();
  bool pass16 = true;
  std::string d16;
  {
    auto g = sun16_graph();
    auto hash = construct_hash_repeated_path(g, fixed_angles(16, 1));
    auto hrep = report_for_hash(hash, "sun16", "path", Router::Exact);
    h.record_bounds(hrep);
    auto qft = construct_qft(g);
    auto qrep = report_for_qft(qft, "sun16", Router::Exact);
    h.record_bounds(qrep);
    pass16 = within(hrep.cnot_cost, 42) && within(qrep.cnot_cost, 342) &&
             hrep.all_bounds_pass() && qrep.all_bounds_pass();
    d16 = "hash=" + std::to_string(hrep.cnot_cost) + "/42, qft=" +
          std::to_string(qrep.cnot_cost) + "/342";
    print_routing(hrep);
    print_routing(qrep);
  }
  double t16 = seconds_since(s16);
  h.result(5, "sun16 preset within 5% of published counts", pass16 && t16 < 30.0, t16,
           d16);

  auto s27 = std::chrono::steady_clock::now();
  bool pass27 = true;
  std::string d27;
  {
    auto g = twosuns27_graph();
    HashOptions hopts;
    hopts.router = Router::TwoOpt;
    auto hash = construct_hash_repeated_path(g, fixed_angles(27, 1), hopts);
    auto hrep = report_for_hash(hash, "twosuns27", "path", Router::TwoOpt);
    h.record_bounds(hrep);
    QftOptions qopts;
    qopts.router = Router::TwoOpt;
    auto qft = construct_qft(g, qopts);
    auto qrep = report_for_qft(qft, "twosuns27", Router::TwoOpt);
    h.record_bounds(qrep);
    pass27 = within(hrep.cnot_cost, 69) && within(qrep.cnot_cost, 1009) &&
             hrep.all_bounds_pass() && qrep.all_bounds_pass();
    d27 = "hash=" + std::to_string(hrep.cnot_cost) + "/69, qft=" +
          std::to_string(qrep.cnot_cost) + "/1009";
    print_routing(hrep);
    print_routing(qrep);
  }
  double t27 = seconds_since(s27);
  h.result(5, "twosuns27 preset within 5% of published counts", pass27 && t27 < 10.0,
           t27, d27);
}

// 6. Semantic oracle: synthesized circuits equal their reference
// unitaries up to the tracked permutations.
void criterion6(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(600001);
  bool pass = true;
  std::string detail;

  std::vector<std::pair<std::string, CouplingGraph>> graphs;
  for (int n = 2; n <= 5; ++n) graphs.push_back({"lnn:" + std::to_string(n), lnn_graph(n)});
  for (int n = 3; n <= 5; ++n) {
    graphs.push_back({"star:" + std::to_string(n), star_graph(n)});
    graphs.push_back({"complete:" + std::to_string(n), complete_graph(n)});
    graphs.push_back({"cycle:" + std::to_string(n), cycle_graph(n)});
  }
  std::uniform_int_distribution<int> size(2, 5);
  for (int i = 0; i < 100; ++i)
    graphs.push_back({"random#" + std::to_string(i),
                      testing::random_connected_graph(size(rng), rng, 0.35)});

  int checked = 0;
  for (const auto& [name, g] : graphs) {
    for (int ell : {1, 2, 3}) {
      auto angles = random_angles(g.n, ell, rng);
      auto path = construct_hash_repeated_path(g, angles);
      h.record_bounds(report_for_hash(path, name, "path", Router::Exact));
      auto cyc = construct_hash_repeated_cycle(g, angles);
      h.record_bounds(report_for_hash(cyc, name, "cycle", Router::Exact));
      ++checked;
      if (!verify_hash(path, angles, 1e-9)) {
        pass = false;
        detail = name + " hash path l=" + std::to_string(ell);
      }
      if (!verify_hash(cyc, angles, 1e-9)) {
        pass = false;
        detail = name + " hash cycle l=" + std::to_string(ell);
      }
    }
    auto qft = construct_qft(g);
    h.record_bounds(report_for_qft(qft, name, Router::Exact));
    if (!verify_qft(qft, 1e-9)) {
      pass = false;
      detail = name + " qft";
    }
  }
  double t = seconds_since(start);
  h.result(6,
           "semantic oracle over " + std::to_string(checked) +
               " graph/step settings (both strategies + transform)",
           pass && t < 60.0, t, detail);
}

// 7. Routing oracle: exact covering walks equal the brute-force minimum
// and respect the walk-length window.
void criterion7(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(700001);
  bool pass = true;
  std::string detail;
  std::uniform_int_distribution<int> size(2, 8);

  for (int i = 0; i < 220; ++i) {
    auto g = testing::random_connected_graph(size(rng), rng, 0.3);
    auto walk = shortest_covering_walk(g, ActiveSet::all(g.n), RouteMode::open(),
                                       Router::Exact);
    int brute = testing::brute_covering_walk_length(g, std::nullopt, false);
    long len = walk.length();
    if (len != brute || len < g.n || 2 * len > g.n * g.n + g.n) {
      pass = false;
      detail = "sample#" + std::to_string(i) + " len=" + std::to_string(len) +
               " brute=" + std::to_string(brute);
    }
  }
  double t = seconds_since(start);
  h.result(7, "exact covering walks match brute force on 220 random graphs",
           pass && t < 60.0, t, detail);
}

// 8. 2-opt quality: differential approximation ratio at least 1/2.
void criterion8(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(700001);  // same sample as criterion 7
  bool pass = true;
  std::string detail;
  std::uniform_int_distribution<int> size(2, 8);

  for (int i = 0; i < 220; ++i) {
    auto g = testing::random_connected_graph(size(rng), rng, 0.3);
    if (g.n < 3) continue;
    auto s = build_supergraph(g);
    auto brute = testing::brute_tsp_cycle(s, ActiveSet::all(g.n).vertices());
    auto heur = two_opt_cycle(s, ActiveSet::all(g.n));
    if (heur.weight < brute.optimal || heur.weight > brute.worst) {
      pass = false;
      detail = "sample#" + std::to_string(i) + " out of range";
      continue;
    }
    if (brute.worst == brute.optimal) continue;
    double ratio = static_cast<double>(brute.worst - heur.weight) /
                   static_cast<double>(brute.worst - brute.optimal);
    if (ratio < 0.5) {
      pass = false;
      detail = "sample#" + std::to_string(i) + " ratio=" + std::to_string(ratio);
    }
  }
  h.result(8, "2-opt differential ratio >= 1/2 on the same sample", pass,
           seconds_since(start), detail);
}

// 9. Decomposition identities at 1e-12.
void criterion9(Harness& h) {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;
  auto id2 = WirePermutation::identity(2);

  auto check_pair = [&](const Circuit& macro, const std::string& name) {
    Circuit basic = decompose(macro);
    auto um = circuit_unitary(macro);
    auto ub = circuit_unitary(basic);
    if (!equivalent_up_to_permutation(ub, um, id2, id2, 1e-12)) {
      pass = false;
      detail = name;
    }
  };

  for (double a : {0.1, 0.7391, -2.3, std::numbers::pi / 4}) {
    Circuit cry(2);
    cry.add(Gate::cry(0, 1, a));
    check_pair(cry, "cry");

    Circuit cp(2);
    cp.add(Gate::cphase(0, 1, a));
    check_pair(cp, "cphase");

    Circuit cry_swap(2);
    cry_swap.add(Gate::cry(0, 1, a));
    cry_swap.add(Gate::swap(0, 1));
    check_pair(cry_swap, "cry+swap");
    if (cnot_cost(cry_swap) != 3) {
      pass = false;
      detail = "cry+swap cost";
    }

    Circuit cp_swap(2);
    cp_swap.add(Gate::cphase(0, 1, a));
    cp_swap.add(Gate::swap(0, 1));
    check_pair(cp_swap, "cp+swap");
    if (cnot_cost(cp_swap) != 3) {
      pass = false;
      detail = "cp+swap cost";
    }
  }

  Circuit sw(2);
  sw.add(Gate::swap(0, 1));
  check_pair(sw, "swap");

  // Annihilation preserves unitaries on streams built to cancel.
  Circuit noisy(2);
  noisy.add(Gate::cnot(0, 1));
  noisy.add(Gate::cnot(0, 1));
  noisy.add(Gate::cry(0, 1, 0.4));
  noisy.add(Gate::swap(0, 1));
  noisy.add(Gate::swap(0, 1));
  noisy.add(Gate::cnot(1, 0));
  noisy.add(Gate::cnot(1, 0));
  check_pair(noisy, "annihilation");

  h.result(9, "decomposition identities at 1e-12", pass, seconds_since(start), detail);
}

}  // namespace

int main() {
  Harness h;
  auto total_start = std::chrono::steady_clock::now();

  criterion1(h);
  criterion2(h);
  criterion3(h);
  criterion4(h);
  criterion5(h);
  criterion6(h);
  criterion7(h);
  criterion8(h);
  criterion9(h);

  // 10. Every cost-theorem check recorded along the way must hold.
  h.result(10,
           "bound suite: " + std::to_string(h.bound_checks) + " checks across all runs",
           h.bound_violations == 0 && h.bound_checks > 0, seconds_since(total_start),
           h.bound_violations == 0 ? ""
                                   : std::to_string(h.bound_violations) + " violations");

  if (h.failures > 0) {
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
  }
  std::printf("all acceptance criteria passed\n");
  return 0;
}
