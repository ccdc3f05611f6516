// Copyright 2026 The qsynth Authors
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


#include <gtest/gtest.h>

#include <random>

#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"
#include "qsynth/mux.hpp"

namespace qsynth {
namespace {

std::vector<double> random_angles(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<double> v(count);
  for (auto& x : v) x = u(rng);
  return v;
}

DiagonalSpec random_diagonal(std::vector<int> wires, std::uint64_t seed) {
  DiagonalSpec d;
  d.phases.reserve(std::size_t{1} << wires.size());
  for (double a : random_angles(std::size_t{1} << wires.size(), seed)) d.phases.push_back(std::polar(1.0, a));
  d.wires = std::move(wires);
  return d;
}

std::vector<int> range_wires(int from, int count) {
  std::vector<int> w;
  for (int i = 0; i < count; ++i) w.push_back(from + i);
  return w;
}

TEST(MuxTest, Ruler) {
  EXPECT_EQ(ruler(1), 0u);
  EXPECT_EQ(ruler(4), 2u);
  EXPECT_EQ(ruler(12), 2u);
  EXPECT_THROW(ruler(0), RangeError);
}

TEST(MuxTest, WalshAngles) {
  const std::vector<double> same{0.7, 0.7};
  auto a = walsh_angles(same);
  EXPECT_NEAR(a[0], 0.7, 1e-15);
  EXPECT_NEAR(a[1], 0.0, 1e-15);
  const std::vector<double> two{0.3, -1.1};
  a = walsh_angles(two);
  EXPECT_NEAR(a[0], (0.3 - 1.1) / 2, 1e-15);
  EXPECT_NEAR(a[1], (0.3 + 1.1) / 2, 1e-15);
  const std::vector<double> zeros(8, 0.0);
  for (double x : walsh_angles(zeros)) EXPECT_EQ(x, 0.0);
  const std::vector<double> three{1, 2, 3};
  EXPECT_THROW(walsh_angles(three), DimensionError);
}

TEST(MuxTest, ZMuxOneControlGateSequence) {
  const double t1 = 0.4, t2 = -1.3;
  const MuxGate m = MuxGate::rotation(MuxAxis::Z, 2, {1}, {t1, t2});
  const MuxExpansion e = expand_mux_rotation(m, false, 2);
  const auto& g = e.circuit.gates();
  ASSERT_EQ(g.size(), 4u);
  EXPECT_EQ(g[0], Gate::rz(2, (t1 + t2) / 2));
  EXPECT_EQ(g[1], Gate::cnot(1, 2));
  EXPECT_EQ(g[2], Gate::rz(2, (t1 - t2) / 2));
  EXPECT_EQ(g[3], Gate::cnot(1, 2));
  const ComplexMatrix expected =
      direct_sum(ComplexMatrix::from_mat2(rz(t1)), ComplexMatrix::from_mat2(rz(t2)));
  EXPECT_LE((circuit_matrix(e.circuit) - expected).frobenius_norm(), 1e-14);
}

TEST(MuxTest, NoControlsIsSingleRotation) {
  for (MuxAxis axis : {MuxAxis::Z, MuxAxis::Y}) {
    const MuxExpansion e = expand_mux_rotation(MuxGate::rotation(axis, 1, {}, {0.9}), false, 1);
    EXPECT_EQ(e.circuit.size(), 1u);
    EXPECT_EQ(count_gates(e.circuit).cnot, 0u);
  }
}

class RotationMuxTest : public ::testing::TestWithParam<int> {};

TEST_P(RotationMuxTest, ExactExpansion) {
  const int k = GetParam();
  const int n = k + 1;
  for (MuxAxis axis : {MuxAxis::Z, MuxAxis::Y}) {
    const MuxGate m = MuxGate::rotation(axis, 1, range_wires(2, k), random_angles(std::size_t{1} << k, k));
    const MuxExpansion e = expand_mux_rotation(m, false, n);
    EXPECT_EQ(count_gates(e.circuit).cnot, k ? (std::size_t{1} << k) : 0u);
    EXPECT_EQ(count_gates(e.circuit).one_qubit, std::size_t{1} << k);
    EXPECT_LE((circuit_matrix(e.circuit) - m.matrix(n)).frobenius_norm(), 1e-12);
  }
}

TEST_P(RotationMuxTest, RyUpToDiagonal) {
  const int k = GetParam();
  if (k == 0) GTEST_SKIP();
  const int n = k + 1;
  // Target below the controls exercises the wire mapping.
  const MuxGate m = MuxGate::rotation(MuxAxis::Y, n, range_wires(1, k), random_angles(std::size_t{1} << k, 7 + k));
  const MuxExpansion e = expand_mux_rotation(m, true, n);
  EXPECT_EQ(count_gates(e.circuit).cnot, (std::size_t{1} << k) - 1);
  EXPECT_LE((e.residual.matrix(n) * circuit_matrix(e.circuit) - m.matrix(n)).frobenius_norm(), 1e-10);
}

TEST_P(RotationMuxTest, GenericExpansion) {
  const int k = GetParam();
  const int n = k + 1;
  std::vector<Mat2> payload;
  for (std::size_t j = 0; j < (std::size_t{1} << k); ++j) payload.push_back(haar_random_unitary(1, 100 * k + j).to_mat2());
  const MuxGate m = MuxGate::generic(n, range_wires(1, k), payload);
  const MuxExpansion e = expand_mux_u2(m, n);
  const GateCounts g = count_gates(e.circuit);
  EXPECT_EQ(g.cnot, (std::size_t{1} << k) - 1);
  EXPECT_EQ(g.one_qubit, std::size_t{1} << k);
  EXPECT_LE((e.residual.matrix(n) * circuit_matrix(e.circuit) - m.matrix(n)).frobenius_norm(), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Controls, RotationMuxTest, ::testing::Range(0, 6));

TEST(MuxTest, YMuxTwoControlsUpToDiagonal) {
  const MuxGate m = MuxGate::rotation(MuxAxis::Y, 1, {2, 3}, random_angles(4, 99));
  const MuxExpansion e = expand_mux_rotation(m, true, 3);
  EXPECT_EQ(count_gates(e.circuit).cnot, 3u);
  EXPECT_LE((e.residual.matrix(3) * circuit_matrix(e.circuit) - m.matrix(3)).frobenius_norm(), 1e-10);
}

TEST(MuxTest, ZMuxUpToDiagonalUnsupported) {
  const MuxGate m = MuxGate::rotation(MuxAxis::Z, 1, {2}, {0.1, 0.2});
  EXPECT_THROW(expand_mux_rotation(m, true, 2), UnsupportedError);
}

TEST(MuxTest, GenericIdentityPayload) {
  const MuxGate m = MuxGate::generic(4, {1, 2, 3}, std::vector<Mat2>(8, Mat2::identity()));
  const MuxExpansion e = expand_mux_u2(m, 4);
  EXPECT_EQ(count_gates(e.circuit).cnot, 7u);
  EXPECT_EQ(count_gates(e.circuit).one_qubit, 8u);
  // The CNOT trick needs eigenvalues +-1, so even an identity payload leaves
  // a non-trivial residual; the one-qubit gates absorb its inverse.
  EXPECT_LE((e.residual.matrix(4) * circuit_matrix(e.circuit) - ComplexMatrix::identity(16)).frobenius_norm(),
            1e-12);
}

TEST(MuxTest, GenericOneControlFourByFour) {
  const MuxGate m = MuxGate::generic(2, {1}, {haar_random_unitary(1, 1).to_mat2(), haar_random_unitary(1, 2).to_mat2()});
  const MuxExpansion e = expand_mux_u2(m, 2);
  EXPECT_EQ(count_gates(e.circuit).cnot, 1u);
  EXPECT_EQ(count_gates(e.circuit).one_qubit, 2u);
  EXPECT_LE((e.residual.matrix(2) * circuit_matrix(e.circuit) - m.matrix(2)).frobenius_norm(), 1e-12);
}

TEST(MuxTest, SynthDiagonalGlobalPhaseOnly) {
  DiagonalSpec d{{1, 2}, std::vector<cplx>(4, std::polar(1.0, 0.6))};
  const Circuit c = synth_diagonal(d);
  EXPECT_EQ(c.size(), 0u);
  EXPECT_NEAR(c.global_phase(), 0.6, 1e-14);
}

TEST(MuxTest, SynthDiagonalSingleWire) {
  const double t = 0.8;
  DiagonalSpec d{{1}, {1.0, std::polar(1.0, t)}};
  const Circuit c = synth_diagonal(d);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0].kind, GateKind::RZ);
  EXPECT_NEAR(c.gates()[0].angle, t, 1e-14);
  EXPECT_LE((circuit_matrix(c) - d.matrix(1)).frobenius_norm(), 1e-14);
}

TEST(MuxTest, SynthDiagonalCnotCount) {
  for (int k = 2; k <= 6; ++k) {
    const DiagonalSpec d = random_diagonal(range_wires(1, k), 50 + k);
    const Circuit c = synth_diagonal(d);
    EXPECT_EQ(count_gates(c).cnot, (std::size_t{1} << k) - 2) << k;
    EXPECT_LE((circuit_matrix(c) - d.matrix(k)).frobenius_norm(), 1e-10) << k;
  }
}

TEST(MuxTest, SynthDiagonalOnScatteredWires) {
  const DiagonalSpec d = random_diagonal({4, 2}, 3);
  const Circuit c = synth_diagonal(d, 4);
  EXPECT_EQ(c.n(), 4);
  EXPECT_LE((circuit_matrix(c) - d.matrix(4)).frobenius_norm(), 1e-12);
}

TEST(MuxTest, DiagonalValidation) {
  DiagonalSpec bad{{1}, {1.0, 2.0}};
  EXPECT_THROW(bad.validate(), ValidationError);
  DiagonalSpec short_spec{{1, 2}, {1.0, 1.0}};
  EXPECT_THROW(short_spec.validate(), DimensionError);
}

}  // namespace
}  // namespace qsynth
