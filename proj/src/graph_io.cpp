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

#include "walksynth/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace walksynth {

CouplingGraph lnn_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return CouplingGraph::from_edges(n, std::move(edges));
}

CouplingGraph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star graph needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return CouplingGraph::from_edges(n, std::move(edges));
}

CouplingGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return CouplingGraph::from_edges(n, std::move(edges));
}

CouplingGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return CouplingGraph::from_edges(n, std::move(edges));
}

// Edge lists follow the published coupling maps of the 16-qubit and
// 27-qubit IBM heavy-hex devices ("sun" and "two joint suns" layouts).
CouplingGraph sun16_graph() {
  return CouplingGraph::from_edges(
      16, {{0, 1},
           {1, 2},
           {1, 4},
           {2, 3},
           {3, 5},
           {4, 7},
           {5, 8},
           {6, 7},
           {7, 10},
           {8, 9},
           {8, 11},
           {10, 12},
           {11, 14},
           {12, 13},
           {12, 15},
           {13, 14}});
}

CouplingGraph twosuns27_graph() {
  return CouplingGraph::from_edges(
      27, {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
           {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
           {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
           {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}});
}

CouplingGraph parse_graph(std::istream& in) {
  std::string line;
  auto next_data_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      std::size_t pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw std::invalid_argument("graph file is empty");
  std::istringstream hs(header);
  int n = 0;
  long m = 0;
  if (!(hs >> n >> m)) throw std::invalid_argument("graph file: expected header 'n m'");

  std::vector<std::pair<int, int>> edges;
  for (long i = 0; i < m; ++i) {
    std::string edge_line;
    if (!next_data_line(edge_line))
      throw std::invalid_argument("graph file: expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(i));
    std::istringstream es(edge_line);
    int u = 0, v = 0;
    if (!(es >> u >> v))
      throw std::invalid_argument("graph file: malformed edge line '" + edge_line + "'");
    edges.push_back({u, v});
  }
  return CouplingGraph::from_edges(n, std::move(edges));
}

namespace {

int parse_size(const std::string& spec, std::size_t colon) {
  try {
    std::size_t used = 0;
    int n = std::stoi(spec.substr(colon + 1), &used);
    if (colon + 1 + used != spec.size()) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed graph spec '" + spec + "'");
  }
}

}  // namespace

CouplingGraph load_graph(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string name = spec.substr(0, colon);
    if (name == "lnn") return lnn_graph(parse_size(spec, colon));
    if (name == "star") return star_graph(parse_size(spec, colon));
    if (name == "complete") return complete_graph(parse_size(spec, colon));
    if (name == "cycle") return cycle_graph(parse_size(spec, colon));
  }
  if (spec == "sun16") return sun16_graph();
  if (spec == "twosuns27") return twosuns27_graph();

  std::ifstream file(spec);
  if (!file) throw std::invalid_argument("unknown preset or unreadable graph file '" + spec + "'");
  return parse_graph(file);
}

}  // namespace walksynth
