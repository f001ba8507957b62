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

#include "walksynth/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walksynth {

void Circuit::add(const Gate& g) {
  if (g.q0 < 0 || g.q0 >= n_wires) throw std::invalid_argument("gate wire out of range");
  if (g.is_two_qubit()) {
    if (g.q1 < 0 || g.q1 >= n_wires) throw std::invalid_argument("gate wire out of range");
    if (g.q0 == g.q1) throw std::invalid_argument("two-qubit gate needs distinct wires");
  }
  if (!std::isfinite(g.angle)) throw std::invalid_argument("gate angle must be finite");
  if (form == CircuitForm::Basic &&
      (g.kind == GateKind::CRy || g.kind == GateKind::CPhase ||
       g.kind == GateKind::Swap || g.kind == GateKind::X))
    throw std::invalid_argument("macro gate in basic-form circuit");
  gates.push_back(g);
}

namespace {

// Output stream with annihilation of adjacent identical CNOT pairs.
class BasicEmitter {
 public:
  explicit BasicEmitter(int n_wires) : out_(n_wires, CircuitForm::Basic) {}

  void push(const Gate& g) {
    if (g.kind == GateKind::Cnot && !out_.gates.empty()) {
      const Gate& top = out_.gates.back();
      if (top.kind == GateKind::Cnot && top.q0 == g.q0 && top.q1 == g.q1) {
        out_.gates.pop_back();
        return;
      }
    }
    out_.gates.push_back(g);
  }

  // True when the gate that would precede the next emission is exactly
  // CNOT(c, t).
  bool tail_is_cnot(int c, int t) const {
    if (out_.gates.empty()) return false;
    const Gate& top = out_.gates.back();
    return top.kind == GateKind::Cnot && top.q0 == c && top.q1 == t;
  }

  Circuit take() { return std::move(out_); }

 private:
  Circuit out_;
};

// CRy(a; c,t) as Ry/CNOT conjugation. Both orders implement the gate
// exactly; the CNOT-first variant is used when it cancels against the
// preceding CNOT in the stream.
void emit_cry(BasicEmitter& e, int c, int t, double a) {
  if (e.tail_is_cnot(c, t)) {
    e.push(Gate::cnot(c, t));
    e.push(Gate::ry(t, -a / 2));
    e.push(Gate::cnot(c, t));
    e.push(Gate::ry(t, a / 2));
  } else {
    e.push(Gate::ry(t, a / 2));
    e.push(Gate::cnot(c, t));
    e.push(Gate::ry(t, -a / 2));
    e.push(Gate::cnot(c, t));
  }
}

// CP(a; c,t) up to the global phase e^{-ia/4}.
void emit_cphase(BasicEmitter& e, int c, int t, double a) {
  if (e.tail_is_cnot(c, t)) {
    e.push(Gate::cnot(c, t));
    e.push(Gate::rz(t, -a / 2));
    e.push(Gate::cnot(c, t));
    e.push(Gate::rz(t, a / 2));
    e.push(Gate::rz(c, a / 2));
  } else {
    e.push(Gate::rz(c, a / 2));
    e.push(Gate::rz(t, a / 2));
    e.push(Gate::cnot(c, t));
    e.push(Gate::rz(t, -a / 2));
    e.push(Gate::cnot(c, t));
  }
}

// SWAP is orientation-symmetric; pick the orientation whose first CNOT
// cancels against the stream tail when possible.
void emit_swap(BasicEmitter& e, int u, int v) {
  int a = u, b = v;
  if (e.tail_is_cnot(v, u)) {
    a = v;
    b = u;
  }
  e.push(Gate::cnot(a, b));
  e.push(Gate::cnot(b, a));
  e.push(Gate::cnot(a, b));
}

}  // namespace

Circuit decompose(const Circuit& c) {
  BasicEmitter e(c.n_wires);
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::H:
      case GateKind::Ry:
      case GateKind::Rz:
      case GateKind::Cnot:
        e.push(g);
        break;
      case GateKind::X:  // X = Ry(pi) Rz(pi) up to global phase
        e.push(Gate::rz(g.q0, std::numbers::pi));
        e.push(Gate::ry(g.q0, std::numbers::pi));
        break;
      case GateKind::CRy:
        emit_cry(e, g.q0, g.q1, g.angle);
        break;
      case GateKind::CPhase:
        emit_cphase(e, g.q0, g.q1, g.angle);
        break;
      case GateKind::Swap:
        emit_swap(e, g.q0, g.q1);
        break;
    }
  }
  return e.take();
}

long cnot_cost(const Circuit& c) {
  // Basic-form input still runs the annihilation pass, so hand-built
  // streams with adjacent identical CNOT pairs count like emitted ones.
  Circuit basic = decompose(c);
  long count = 0;
  for (const Gate& g : basic.gates)
    if (g.kind == GateKind::Cnot) ++count;
  return count;
}

MappingTrace MappingTrace::unassigned(int n_logical, int n_physical) {
  MappingTrace m;
  m.logical_to_physical.assign(n_logical, kUnassigned);
  m.physical_to_logical.assign(n_physical, kUnassigned);
  return m;
}

void MappingTrace::assign(int logical, int wire) {
  logical_to_physical[logical] = wire;
  physical_to_logical[wire] = logical;
}

bool MappingTrace::consistent() const {
  for (std::size_t l = 0; l < logical_to_physical.size(); ++l) {
    int w = logical_to_physical[l];
    if (w != kUnassigned && physical_to_logical[w] != static_cast<int>(l)) return false;
  }
  for (std::size_t w = 0; w < physical_to_logical.size(); ++w) {
    int l = physical_to_logical[w];
    if (l != kUnassigned && logical_to_physical[l] != static_cast<int>(w)) return false;
  }
  return true;
}

MappingTrace apply_swap_tracking(MappingTrace m, int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(m.physical_to_logical.size()) ||
      v >= static_cast<int>(m.physical_to_logical.size()))
    throw std::invalid_argument("swap tracking: wire out of range");
  int lu = m.physical_to_logical[u];
  int lv = m.physical_to_logical[v];
  m.physical_to_logical[u] = lv;
  m.physical_to_logical[v] = lu;
  if (lu != kUnassigned) m.logical_to_physical[lu] = v;
  if (lv != kUnassigned) m.logical_to_physical[lv] = u;
  return m;
}

}  // namespace walksynth
