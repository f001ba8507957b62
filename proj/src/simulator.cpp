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

#include "walksynth/simulator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace walksynth {

namespace {

constexpr double kRoot2Inv = 0.70710678118654752440;

std::size_t wire_mask(int wire, int n_qubits) {
  return std::size_t{1} << (n_qubits - 1 - wire);
}

void apply_single(std::span<Complex> state, std::size_t mask, Complex g00, Complex g01,
                  Complex g10, Complex g11) {
  const std::size_t dim = state.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    Complex a = state[i];
    Complex b = state[i | mask];
    state[i] = g00 * a + g01 * b;
    state[i | mask] = g10 * a + g11 * b;
  }
}

}  // namespace

void apply_gate(const Gate& g, std::span<Complex> state, int n_qubits) {
  const std::size_t dim = state.size();
  switch (g.kind) {
    case GateKind::H:
      apply_single(state, wire_mask(g.q0, n_qubits), kRoot2Inv, kRoot2Inv, kRoot2Inv,
                   -kRoot2Inv);
      break;
    case GateKind::X:
      apply_single(state, wire_mask(g.q0, n_qubits), 0, 1, 1, 0);
      break;
    case GateKind::Ry: {
      double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      apply_single(state, wire_mask(g.q0, n_qubits), c, -s, s, c);
      break;
    }
    case GateKind::Rz: {
      Complex p0 = std::polar(1.0, -g.angle / 2);
      Complex p1 = std::polar(1.0, g.angle / 2);
      apply_single(state, wire_mask(g.q0, n_qubits), p0, 0, 0, p1);
      break;
    }
    case GateKind::Cnot: {
      std::size_t cm = wire_mask(g.q0, n_qubits), tm = wire_mask(g.q1, n_qubits);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cm) && !(i & tm)) std::swap(state[i], state[i | tm]);
      break;
    }
    case GateKind::CRy: {
      std::size_t cm = wire_mask(g.q0, n_qubits), tm = wire_mask(g.q1, n_qubits);
      double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & cm) || (i & tm)) continue;
        Complex a = state[i];
        Complex b = state[i | tm];
        state[i] = c * a - s * b;
        state[i | tm] = s * a + c * b;
      }
      break;
    }
    case GateKind::CPhase: {
      std::size_t cm = wire_mask(g.q0, n_qubits), tm = wire_mask(g.q1, n_qubits);
      Complex p = std::polar(1.0, g.angle);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & cm) && (i & tm)) state[i] *= p;
      break;
    }
    case GateKind::Swap: {
      std::size_t am = wire_mask(g.q0, n_qubits), bm = wire_mask(g.q1, n_qubits);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & am) && !(i & bm)) std::swap(state[i], state[(i ^ am) | bm]);
      break;
    }
  }
}

void apply_circuit(const Circuit& c, std::span<Complex> state) {
  if (c.n_wires > kMaxStateQubits)
    throw std::invalid_argument("statevector mode caps at 20 wires");
  if (state.size() != (std::size_t{1} << c.n_wires))
    throw std::invalid_argument("state size does not match circuit wires");
  for (const Gate& g : c.gates) apply_gate(g, state, c.n_wires);
}

UnitaryMatrix UnitaryMatrix::identity(int n_qubits) {
  UnitaryMatrix u;
  u.n_qubits = n_qubits;
  u.dim = std::size_t{1} << n_qubits;
  u.data.assign(u.dim * u.dim, Complex{0, 0});
  for (std::size_t i = 0; i < u.dim; ++i) u.at(i, i) = 1;
  return u;
}

bool UnitaryMatrix::approx_unitary(double tol) const {
  for (std::size_t c1 = 0; c1 < dim; ++c1) {
    for (std::size_t c2 = c1; c2 < dim; ++c2) {
      Complex dot{0, 0};
      for (std::size_t r = 0; r < dim; ++r) dot += std::conj(at(r, c1)) * at(r, c2);
      Complex expect = c1 == c2 ? Complex{1, 0} : Complex{0, 0};
      if (std::abs(dot - expect) > tol) return false;
    }
  }
  return true;
}

UnitaryMatrix circuit_unitary(const Circuit& c) {
  if (c.n_wires > kMaxUnitaryQubits)
    throw std::invalid_argument("unitary mode caps at 10 wires");
  UnitaryMatrix u = UnitaryMatrix::identity(c.n_wires);
  for (std::size_t col = 0; col < u.dim; ++col)
    apply_circuit(c, std::span<Complex>(&u.data[col * u.dim], u.dim));

  // Cheap sanity guard: gate kernels are exactly unitary, so any column
  // drifting off norm one indicates a corrupted stream.
  for (std::size_t col = 0; col < u.dim; ++col) {
    double norm2 = 0;
    for (std::size_t r = 0; r < u.dim; ++r) norm2 += std::norm(u.at(r, col));
    if (std::abs(norm2 - 1.0) > 1e-10)
      throw std::runtime_error("circuit unitary failed the column-norm check");
  }
  return u;
}

UnitaryMatrix qft_reference(int n) {
  if (n > kMaxUnitaryQubits) throw std::invalid_argument("unitary mode caps at 10 wires");
  UnitaryMatrix u;
  u.n_qubits = n;
  u.dim = std::size_t{1} << n;
  u.data.resize(u.dim * u.dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(u.dim));
  const double unit = 2.0 * std::numbers::pi / static_cast<double>(u.dim);
  for (std::size_t j = 0; j < u.dim; ++j)
    for (std::size_t k = 0; k < u.dim; ++k)
      u.at(k, j) = std::polar(norm, unit * static_cast<double>(j * k % u.dim));
  return u;
}

UnitaryMatrix hash_reference_step(int n, std::span<const double> xi) {
  if (static_cast<int>(xi.size()) != n - 1)
    throw std::invalid_argument("hash reference needs n-1 angles");
  Circuit c(n, CircuitForm::Macro);
  for (int ctrl = 0; ctrl < n - 1; ++ctrl) c.add(Gate::cry(ctrl, n - 1, xi[ctrl]));
  return circuit_unitary(c);
}

UnitaryMatrix hash_reference(int n, const std::vector<std::vector<double>>& steps) {
  Circuit c(n, CircuitForm::Macro);
  for (const auto& xi : steps) {
    if (static_cast<int>(xi.size()) != n - 1)
      throw std::invalid_argument("hash reference needs n-1 angles per step");
    for (int ctrl = 0; ctrl < n - 1; ++ctrl) c.add(Gate::cry(ctrl, n - 1, xi[ctrl]));
  }
  return circuit_unitary(c);
}

WirePermutation WirePermutation::identity(int n) {
  WirePermutation p;
  p.to_physical.resize(n);
  for (int i = 0; i < n; ++i) p.to_physical[i] = i;
  return p;
}

WirePermutation WirePermutation::reversal(int n) {
  WirePermutation p;
  p.to_physical.resize(n);
  for (int i = 0; i < n; ++i) p.to_physical[i] = n - 1 - i;
  return p;
}

WirePermutation WirePermutation::inverse() const {
  WirePermutation p;
  p.to_physical.assign(to_physical.size(), 0);
  for (std::size_t i = 0; i < to_physical.size(); ++i)
    p.to_physical[to_physical[i]] = static_cast<int>(i);
  return p;
}

namespace {

// Basis-index action of E(sigma): bit r of the logical index lands on
// wire sigma(r) of the physical index.
std::vector<std::size_t> basis_map(const WirePermutation& sigma) {
  const int n = sigma.size();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::size_t> map(dim, 0);
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t p = 0;
    for (int r = 0; r < n; ++r)
      if (b & (std::size_t{1} << (n - 1 - r)))
        p |= std::size_t{1} << (n - 1 - sigma.to_physical[r]);
    map[b] = p;
  }
  return map;
}

}  // namespace

UnitaryMatrix permutation_unitary(const WirePermutation& sigma) {
  UnitaryMatrix u;
  u.n_qubits = sigma.size();
  u.dim = std::size_t{1} << u.n_qubits;
  u.data.assign(u.dim * u.dim, Complex{0, 0});
  std::vector<std::size_t> map = basis_map(sigma);
  for (std::size_t b = 0; b < u.dim; ++b) u.at(map[b], b) = 1;
  return u;
}

bool equivalent_up_to_permutation(const UnitaryMatrix& u, const UnitaryMatrix& ref,
                                  const WirePermutation& pin,
                                  const WirePermutation& pout, double tol) {
  if (u.dim != ref.dim) throw std::invalid_argument("dimension mismatch");
  std::vector<std::size_t> out_map = basis_map(pout);
  std::vector<std::size_t> in_map = basis_map(pin);

  // M = E(pout) * ref * E(pin)^-1 is an index remapping of ref:
  // M[out_map(r)][in_map(c)] = ref[r][c].
  const std::size_t dim = u.dim;
  std::vector<Complex> m(dim * dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r)
      m[in_map[c] * dim + out_map[r]] = ref.at(r, c);

  // Global-phase alignment on the largest-magnitude entry of M.
  std::size_t best = 0;
  double best_mag = -1;
  for (std::size_t i = 0; i < dim * dim; ++i) {
    double mag = std::abs(m[i]);
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag < tol) return false;
  if (std::abs(u.data[best]) == 0.0) return false;
  Complex phase = u.data[best] / m[best];
  phase /= std::abs(phase);

  for (std::size_t i = 0; i < dim * dim; ++i)
    if (std::abs(u.data[i] - phase * m[i]) > tol) return false;
  return true;
}

}  // namespace walksynth
