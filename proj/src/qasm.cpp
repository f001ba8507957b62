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

#include "walksynth/qasm.hpp"

#include <cstdio>
#include <stdexcept>

namespace walksynth {

namespace {

std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

std::string to_qasm(const Circuit& basic) {
  if (basic.form != CircuitForm::Basic)
    throw std::invalid_argument("QASM emission expects a basic-form circuit");
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(basic.n_wires) + "];\n";
  for (const Gate& g : basic.gates) {
    switch (g.kind) {
      case GateKind::H:
        out += "h q[" + std::to_string(g.q0) + "];\n";
        break;
      case GateKind::Ry:
        out += "ry(" + format_angle(g.angle) + ") q[" + std::to_string(g.q0) + "];\n";
        break;
      case GateKind::Rz:
        out += "rz(" + format_angle(g.angle) + ") q[" + std::to_string(g.q0) + "];\n";
        break;
      case GateKind::Cnot:
        out += "cx q[" + std::to_string(g.q0) + "],q[" + std::to_string(g.q1) + "];\n";
        break;
      default:
        throw std::invalid_argument("QASM emission met a non-basic gate");
    }
  }
  return out;
}

}  // namespace walksynth
