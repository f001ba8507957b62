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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "walksynth/simulator.hpp"

using namespace walksynth;

TEST_SUITE_BEGIN("simulator");

namespace {

// The swap-free Fourier cascade circuit on a fully connected register:
// per target r, an H followed by controlled phases pi/2^(w-r) from every
// later qubit.
Circuit fourier_cascades(int n) {
  Circuit c(n);
  for (int r = 0; r < n; ++r) {
    c.add(Gate::h(r));
    for (int w = r + 1; w < n; ++w)
      c.add(Gate::cphase(w, r, std::numbers::pi / static_cast<double>(1 << (w - r))));
  }
  return c;
}

}  // namespace

TEST_CASE("identity and elementary gates") {
  Circuit empty(2);
  auto u = circuit_unitary(empty);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(u.at(r, c) == (r == c ? Complex{1, 0} : Complex{0, 0}));

  Circuit h(1);
  h.add(Gate::h(0));
  auto uh = circuit_unitary(h);
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(uh.at(0, 0) - Complex{s, 0}) < 1e-15);
  CHECK(std::abs(uh.at(0, 1) - Complex{s, 0}) < 1e-15);
  CHECK(std::abs(uh.at(1, 0) - Complex{s, 0}) < 1e-15);
  CHECK(std::abs(uh.at(1, 1) - Complex{-s, 0}) < 1e-15);

  Circuit cc(2);
  cc.add(Gate::cnot(0, 1));
  cc.add(Gate::cnot(0, 1));
  auto ui = circuit_unitary(cc);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      CHECK(std::abs(ui.at(r, c) - (r == c ? Complex{1, 0} : Complex{0, 0})) < 1e-15);
}

TEST_CASE("fourier reference") {
  auto f1 = qft_reference(1);
  double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(f1.at(0, 0) - Complex{s, 0}) < 1e-15);
  CHECK(std::abs(f1.at(1, 1) - Complex{-s, 0}) < 1e-15);

  auto f2 = qft_reference(2);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t k = 0; k < 4; ++k) {
      Complex expect = std::polar(0.5, 2.0 * std::numbers::pi * double(j * k) / 4.0);
      CHECK(std::abs(f2.at(k, j) - expect) < 1e-15);
    }
  CHECK(f2.approx_unitary(1e-12));
}

TEST_CASE("cascade circuit equals the reference with reversed outputs") {
  for (int n = 1; n <= 5; ++n) {
    auto u = circuit_unitary(fourier_cascades(n));
    auto ref = qft_reference(n);
    CHECK(equivalent_up_to_permutation(u, ref, WirePermutation::identity(n),
                                       WirePermutation::reversal(n), 1e-12));
    if (n > 1)
      CHECK_FALSE(equivalent_up_to_permutation(u, ref, WirePermutation::identity(n),
                                               WirePermutation::identity(n), 1e-9));
  }
}

TEST_CASE("hashing reference") {
  auto id = hash_reference_step(3, std::vector<double>{0.0, 0.0});
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c)
      CHECK(std::abs(id.at(r, c) - (r == c ? Complex{1, 0} : Complex{0, 0})) < 1e-15);

  auto u = hash_reference_step(2, std::vector<double>{std::numbers::pi});
  CHECK(std::abs(u.at(0, 0) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(u.at(1, 1) - Complex{1, 0}) < 1e-15);
  CHECK(std::abs(u.at(2, 3) - Complex{-1, 0}) < 1e-15);
  CHECK(std::abs(u.at(3, 2) - Complex{1, 0}) < 1e-15);

  // The controlled rotations commute, so step order is irrelevant.
  Circuit fwd(3), rev(3);
  fwd.add(Gate::cry(0, 2, 0.8));
  fwd.add(Gate::cry(1, 2, 1.3));
  rev.add(Gate::cry(1, 2, 1.3));
  rev.add(Gate::cry(0, 2, 0.8));
  auto uf = circuit_unitary(fwd);
  auto ur = circuit_unitary(rev);
  for (std::size_t i = 0; i < uf.data.size(); ++i)
    CHECK(std::abs(uf.data[i] - ur.data[i]) < 1e-14);
}

TEST_CASE("permutation embeddings invert") {
  std::mt19937 rng(901);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4;
    WirePermutation p = WirePermutation::identity(n);
    std::shuffle(p.to_physical.begin(), p.to_physical.end(), rng);
    auto e = permutation_unitary(p);
    auto einv = permutation_unitary(p.inverse());
    for (std::size_t r = 0; r < e.dim; ++r)
      for (std::size_t c = 0; c < e.dim; ++c) {
        Complex dot{0, 0};
        for (std::size_t k = 0; k < e.dim; ++k) dot += e.at(r, k) * einv.at(k, c);
        CHECK(std::abs(dot - (r == c ? Complex{1, 0} : Complex{0, 0})) < 1e-15);
      }
  }
}

TEST_CASE("unitary composes over concatenation") {
  Circuit a(2), b(2), ab(2);
  a.add(Gate::h(0));
  a.add(Gate::cry(0, 1, 0.4));
  b.add(Gate::swap(0, 1));
  b.add(Gate::rz(0, 0.9));
  for (const auto& g : a.gates) ab.add(g);
  for (const auto& g : b.gates) ab.add(g);

  auto ua = circuit_unitary(a);
  auto ub = circuit_unitary(b);
  auto uab = circuit_unitary(ab);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Complex dot{0, 0};
      for (std::size_t k = 0; k < 4; ++k) dot += ub.at(r, k) * ua.at(k, c);
      CHECK(std::abs(dot - uab.at(r, c)) < 1e-14);
    }
}

TEST_CASE("permutation equivalence checks") {
  auto ref = qft_reference(2);
  auto id = WirePermutation::identity(2);
  CHECK(equivalent_up_to_permutation(ref, ref, id, id, 1e-12));

  Circuit sw(2);
  sw.add(Gate::swap(0, 1));
  auto u_sw = circuit_unitary(sw);
  // u = SWAP * ref with pout encoding the swap.
  UnitaryMatrix u;
  u.n_qubits = 2;
  u.dim = 4;
  u.data.resize(16);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      Complex dot{0, 0};
      for (std::size_t k = 0; k < 4; ++k) dot += u_sw.at(r, k) * ref.at(k, c);
      u.at(r, c) = dot;
    }
  CHECK(equivalent_up_to_permutation(u, ref, id, WirePermutation::reversal(2), 1e-12));
  CHECK_FALSE(equivalent_up_to_permutation(u, ref, id, id, 1e-9));
}

TEST_CASE("gate streams stay unitary") {
  std::mt19937 rng(902);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::cry(0, 1, angle(rng)));
  c.add(Gate::cphase(1, 2, angle(rng)));
  c.add(Gate::swap(0, 2));
  c.add(Gate::ry(1, angle(rng)));
  c.add(Gate::rz(2, angle(rng)));
  c.add(Gate::x(0));
  CHECK(circuit_unitary(c).approx_unitary(1e-10));
  CHECK(circuit_unitary(decompose(c)).approx_unitary(1e-10));
}

TEST_CASE("statevector mode matches the unitary columns") {
  Circuit c(3);
  c.add(Gate::h(0));
  c.add(Gate::cry(0, 2, 0.6));
  c.add(Gate::swap(1, 2));
  auto u = circuit_unitary(c);
  for (std::size_t col = 0; col < u.dim; ++col) {
    std::vector<Complex> state(u.dim, Complex{0, 0});
    state[col] = 1;
    apply_circuit(c, state);
    for (std::size_t r = 0; r < u.dim; ++r) CHECK(std::abs(state[r] - u.at(r, col)) < 1e-14);
  }
}

TEST_SUITE_END();
