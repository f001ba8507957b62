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

#include <complex>
#include <span>
#include <vector>

#include "walksynth/circuit.hpp"

namespace walksynth {

using Complex = std::complex<double>;

/// Dense 2^n x 2^n matrix, column-major. Wire 0 is the most significant
/// bit of the basis index.
struct UnitaryMatrix {
  int n_qubits = 0;
  std::size_t dim = 1;
  std::vector<Complex> data;  // data[c * dim + r]

  static UnitaryMatrix identity(int n_qubits);

  Complex& at(std::size_t r, std::size_t c) { return data[c * dim + r]; }
  const Complex& at(std::size_t r, std::size_t c) const { return data[c * dim + r]; }

  bool approx_unitary(double tol) const;
};

/// Bijection logical index (0-based) -> physical wire.
struct WirePermutation {
  std::vector<int> to_physical;

  static WirePermutation identity(int n);
  /// logical r -> wire n-1-r; the output order of the swap-free
  /// Fourier-transform cascade circuit.
  static WirePermutation reversal(int n);
  WirePermutation inverse() const;
  int size() const { return static_cast<int>(to_physical.size()); }
};

/// Applies one gate to a state vector of length 2^n (wire 0 = MSB).
void apply_gate(const Gate& g, std::span<Complex> state, int n_qubits);

/// Applies the whole stream in circuit order.
void apply_circuit(const Circuit& c, std::span<Complex> state);

inline constexpr int kMaxUnitaryQubits = 10;
inline constexpr int kMaxStateQubits = 20;

/// Product of the gate matrices in stream order. Caps at 10 qubits; use
/// apply_circuit for statevector-only work up to 20.
UnitaryMatrix circuit_unitary(const Circuit& c);

/// Discrete Fourier transform matrix with entries e^{2*pi*i*j*k/2^n}/sqrt(2^n).
UnitaryMatrix qft_reference(int n);

/// One hashing step on a fully connected register: the commuting product
/// of CRy(xi[c]) from each control c in 0..n-2 onto target n-1.
UnitaryMatrix hash_reference_step(int n, std::span<const double> xi);

/// Product of hashing steps, applied in order.
UnitaryMatrix hash_reference(int n, const std::vector<std::vector<double>>& steps);

/// Permutation matrix E(sigma) routing logical bit r to wire sigma(r).
UnitaryMatrix permutation_unitary(const WirePermutation& sigma);

/// True iff u = E(pout) * ref * E(pin)^-1 up to global phase within tol
/// (max-abs deviation after aligning on the largest-magnitude entry).
bool equivalent_up_to_permutation(const UnitaryMatrix& u, const UnitaryMatrix& ref,
                                  const WirePermutation& pin,
                                  const WirePermutation& pout, double tol);

}  // namespace walksynth
