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

#include <vector>

namespace walksynth {

enum class GateKind { H, X, Ry, Rz, Cnot, CRy, CPhase, Swap };

/// One gate on physical wires. For two-qubit gates q0 is the control
/// (first operand for the symmetric Swap) and q1 the target.
struct Gate {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;
  double angle = 0.0;

  static Gate h(int w) { return {GateKind::H, w}; }
  static Gate x(int w) { return {GateKind::X, w}; }
  static Gate ry(int w, double a) { return {GateKind::Ry, w, -1, a}; }
  static Gate rz(int w, double a) { return {GateKind::Rz, w, -1, a}; }
  static Gate cnot(int c, int t) { return {GateKind::Cnot, c, t}; }
  static Gate cry(int c, int t, double a) { return {GateKind::CRy, c, t, a}; }
  static Gate cphase(int c, int t, double a) { return {GateKind::CPhase, c, t, a}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, a, b}; }

  bool is_two_qubit() const {
    return kind == GateKind::Cnot || kind == GateKind::CRy ||
           kind == GateKind::CPhase || kind == GateKind::Swap;
  }
};

enum class CircuitForm { Macro, Basic };

/// Ordered gate stream over physical wires. Basic-form circuits contain
/// only H, Ry, Rz and CNOT.
struct Circuit {
  int n_wires = 0;
  CircuitForm form = CircuitForm::Macro;
  std::vector<Gate> gates;

  explicit Circuit(int wires = 0, CircuitForm f = CircuitForm::Macro)
      : n_wires(wires), form(f) {}

  /// Validates wire indices and, for basic form, the gate alphabet.
  void add(const Gate& g);
};

/// Rewrites macro gates over {H, Ry, Rz, CNOT} and cancels adjacent
/// identical CNOT pairs in a single left-to-right pass. The CNOT facing
/// an adjacent matching CNOT is placed first in CRy/CP/SWAP expansions
/// so the merged forms of controlled-rotation plus SWAP come out at
/// three CNOTs. No gate is reordered across other gates.
Circuit decompose(const Circuit& c);

/// Number of CNOT gates after decomposition. Purely combinatorial: a
/// zero-angle controlled rotation still counts.
long cnot_cost(const Circuit& c);

inline constexpr int kUnassigned = -1;

/// Mutually inverse logical->physical (Q) and physical->logical (T)
/// assignments; unassigned slots hold kUnassigned. Logical indices are
/// 0-based.
struct MappingTrace {
  std::vector<int> logical_to_physical;  // Q
  std::vector<int> physical_to_logical;  // T

  static MappingTrace unassigned(int n_logical, int n_physical);

  int physical_of(int logical) const { return logical_to_physical[logical]; }
  int logical_at(int wire) const { return physical_to_logical[wire]; }
  void assign(int logical, int wire);
  bool consistent() const;
};

/// Swaps the logical occupants of wires u and v; unassigned slots move
/// with the wire.
MappingTrace apply_swap_tracking(MappingTrace m, int u, int v);

}  // namespace walksynth
