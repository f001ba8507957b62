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

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>

#include "walksynth/graph_io.hpp"
#include "walksynth/qasm.hpp"
#include "walksynth/report.hpp"

namespace {

using namespace walksynth;

// Deterministic default angles when no angle file is given:
// xi_c = 2*pi*(c+1)/n for logical control c.
HashingAngles default_angles(int n, int steps) {
  std::vector<double> xi(n - 1);
  for (int c = 0; c < n - 1; ++c)
    xi[c] = 2.0 * std::numbers::pi * static_cast<double>(c + 1) / static_cast<double>(n);
  return HashingAngles::uniform(n - 1, steps, xi);
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering-walk circuit synthesis for hashing and Fourier-transform "
               "circuits on arbitrary qubit coupling graphs"};

  std::string algorithm;
  std::string graph_spec;
  std::string router_name = "auto";
  std::string strategy = "path";
  std::string emit = "json";
  std::string angles_file;
  std::string out_dir;
  int hash_steps = 0;
  int exact_cap = kDefaultExactCap;
  bool verify = false;

  app.add_option("--algorithm", algorithm, "Circuit family to synthesize")
      ->required()
      ->check(CLI::IsMember({"qft", "hash"}));
  app.add_option("--graph", graph_spec,
                 "Graph file or preset (lnn:N, star:N, complete:N, cycle:N, sun16, "
                 "twosuns27)")
      ->required();
  app.add_option("--router", router_name, "Tour search backend (default: exact up to "
                                          "the cap, else two_opt)")
      ->check(CLI::IsMember({"auto", "exact", "two_opt"}));
  app.add_option("--hash-steps", hash_steps, "Number of hashing applications");
  app.add_option("--hash-strategy", strategy, "Repetition strategy for hashing")
      ->check(CLI::IsMember({"path", "cycle"}));
  app.add_option("--angles", angles_file,
                 "Angle file: one line per step, n-1 whitespace-separated radians");
  app.add_option("--emit", emit, "What to write")
      ->check(CLI::IsMember({"qasm", "json", "both"}));
  app.add_flag("--verify", verify, "Check the circuit against the reference unitary "
                                   "(10 wires max)");
  app.add_option("--out", out_dir, "Directory for circuit.qasm / report.json; "
                                   "default prints to stdout");
  app.add_option("--exact-cap", exact_cap, "Active-vertex cap for the exact router");

  CLI11_PARSE(app, argc, argv);

  try {
    CouplingGraph g = load_graph(graph_spec);

    Router router;
    if (router_name == "exact")
      router = Router::Exact;
    else if (router_name == "two_opt")
      router = Router::TwoOpt;
    else
      router = g.n <= exact_cap ? Router::Exact : Router::TwoOpt;

    SynthesisReport report;
    Circuit basic(0);

    if (algorithm == "hash") {
      HashingAngles angles;
      if (!angles_file.empty()) {
        std::ifstream in(angles_file);
        if (!in) throw std::invalid_argument("cannot read angle file '" + angles_file + "'");
        angles = HashingAngles::parse(in, g.n - 1);
        if (hash_steps > 0 && hash_steps != angles.step_count())
          throw std::invalid_argument("--hash-steps disagrees with the angle file (" +
                                      std::to_string(angles.step_count()) + " lines)");
      } else {
        angles = default_angles(g.n, hash_steps > 0 ? hash_steps : 1);
      }

      HashOptions opts;
      opts.router = router;
      opts.exact_cap = exact_cap;
      HashResult result = strategy == "path"
                              ? construct_hash_repeated_path(g, angles, opts)
                              : construct_hash_repeated_cycle(g, angles, opts);
      report = report_for_hash(result, graph_spec, strategy, router);
      basic = decompose(result.circuit);
      if (verify) {
        if (g.n > kMaxUnitaryQubits)
          throw std::invalid_argument("--verify supports at most 10 wires");
        report.verified = verify_hash(result, angles, 1e-9);
      }
    } else {
      QftOptions opts;
      opts.router = router;
      opts.exact_cap = exact_cap;
      QftResult result = construct_qft(g, opts);
      report = report_for_qft(result, graph_spec, router);
      basic = decompose(result.circuit);
      if (verify) {
        if (g.n > kMaxUnitaryQubits)
          throw std::invalid_argument("--verify supports at most 10 wires");
        report.verified = verify_qft(result, 1e-9);
      }
    }

    const bool want_qasm = emit == "qasm" || emit == "both";
    const bool want_json = emit == "json" || emit == "both";
    if (out_dir.empty()) {
      if (want_qasm) std::cout << to_qasm(basic);
      if (want_json) std::cout << report.to_json();
    } else {
      std::filesystem::create_directories(out_dir);
      std::filesystem::path dir(out_dir);
      if (want_qasm) write_file(dir / "circuit.qasm", to_qasm(basic));
      if (want_json) write_file(dir / "report.json", report.to_json());
    }

    if (report.verified && !*report.verified) {
      std::cerr << "verification failed\n";
      return 2;
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
