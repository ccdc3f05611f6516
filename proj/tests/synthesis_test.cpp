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

#include <cmath>
#include <numbers>

#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"
#include "qsynth/synthesis.hpp"

namespace qsynth {
namespace {

double bound(int n) { return 1e-8 * std::sqrt(double(std::size_t{1} << n)); }

double exact_error(const Circuit& c, const ComplexMatrix& u) {
  return (circuit_matrix(c) - u).frobenius_norm();
}

TEST(SynthesisTest, ChooseLevel) {
  EXPECT_EQ(choose_level(4), 3);
  EXPECT_EQ(choose_level(9), 6);
  EXPECT_EQ(choose_level(12), 8);
  EXPECT_EQ(choose_level(2), 2);
}

TEST(SynthesisTest, MethodNames) {
  EXPECT_EQ(method_name(MethodKind::Bqd), "bqd");
  EXPECT_EQ(method_name(MethodKind::Qsd), "qsd");
  EXPECT_EQ(method_name(MethodKind::CsdImproved), "csd");
}

TEST(SynthesisTest, BasicBlockIdentity) {
  const BasicBlockResult r = basic_block_q(ComplexMatrix::identity(8));
  EXPECT_LE((r.delta.matrix(3) * circuit_matrix(r.q_circuit) - ComplexMatrix::identity(8)).frobenius_norm(),
            1e-10);
}

TEST(SynthesisTest, BasicBlockCounts) {
  // (2^l - 1)(2^(l-1) - 1) CNOTs; one-qubit gates are (2^l - 1) 2^(l-1).
  const ComplexMatrix u3 = haar_random_unitary(3, 2);
  BasicBlockResult r = basic_block_q(u3);
  EXPECT_EQ(count_gates(r.q_circuit).cnot, 21u);
  EXPECT_EQ(count_gates(r.q_circuit).one_qubit, 28u);
  EXPECT_LE((r.delta.matrix(3) * circuit_matrix(r.q_circuit) - u3).frobenius_norm(), 1e-9);

  const ComplexMatrix u4 = haar_random_unitary(4, 3);
  r = basic_block_q(u4);
  EXPECT_EQ(count_gates(r.q_circuit).cnot, 105u);
  EXPECT_LE((r.delta.matrix(4) * circuit_matrix(r.q_circuit) - u4).frobenius_norm(), 1e-9 * 4);
}

struct CountCase {
  int n;
  std::size_t cnot;
  std::size_t one_qubit;
};

TEST(SynthesisTest, CsdImprovedCounts) {
  for (const CountCase& c : {CountCase{2, 4, 7}, CountCase{3, 26, 32}, CountCase{4, 118, 131}}) {
    const ComplexMatrix u = haar_random_unitary(c.n, 10 + c.n);
    const Circuit out = synth_csd_improved(u);
    EXPECT_EQ(count_gates(out).cnot, c.cnot) << c.n;
    EXPECT_EQ(count_gates(out).one_qubit, c.one_qubit) << c.n;
    EXPECT_LE(exact_error(out, u), bound(c.n)) << c.n;
  }
}

TEST(SynthesisTest, QsdCounts) {
  for (const CountCase& c : {CountCase{2, 3, 7}, CountCase{3, 23, 38}, CountCase{4, 115, 174}}) {
    const ComplexMatrix u = haar_random_unitary(c.n, 20 + c.n);
    const Circuit out = synth_qsd(u);
    EXPECT_EQ(count_gates(out).cnot, c.cnot) << c.n;
    EXPECT_EQ(count_gates(out).one_qubit, c.one_qubit) << c.n;
    EXPECT_LE(exact_error(out, u), bound(c.n)) << c.n;
  }
}

TEST(SynthesisTest, QsdIdentity) {
  EXPECT_LE(exact_error(synth_qsd(ComplexMatrix::identity(8)), ComplexMatrix::identity(8)), 1e-10);
}

TEST(SynthesisTest, BqdCounts) {
  const ComplexMatrix u4 = haar_random_unitary(4, 5);
  Circuit c = synth_bqd(u4, 3);
  EXPECT_EQ(count_gates(c), (GateCounts{112, 138, 250}));
  EXPECT_LE(exact_error(c, u4), bound(4));

  const ComplexMatrix u6 = haar_random_unitary(6, 6);
  c = synth_bqd(u6, 4);
  EXPECT_EQ(count_gates(c).cnot, 1976u);
  EXPECT_EQ(count_gates(c).one_qubit, 2209u);
  EXPECT_LE(exact_error(c, u6), bound(6));
}

TEST(SynthesisTest, BqdIdentityHasZeroAngles) {
  const Circuit c = synth_bqd(ComplexMatrix::identity(16), 3);
  EXPECT_LE(exact_error(c, ComplexMatrix::identity(16)), 1e-10);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::RY) {
      EXPECT_NEAR(std::remainder(g.angle, 2 * std::numbers::pi), 0.0, 1e-9);
    }
  }
}

TEST(SynthesisTest, BqdFullLevelMatchesCsdCounts) {
  const ComplexMatrix u = haar_random_unitary(5, 8);
  EXPECT_EQ(count_gates(synth_bqd(u, 5)), count_gates(synth_csd_improved(u)));
}

TEST(SynthesisTest, BqdLevelTwo) {
  const ComplexMatrix u = haar_random_unitary(4, 9);
  const Circuit c = synth_bqd(u, 2);
  EXPECT_EQ(count_gates(c).cnot, 116u);
  EXPECT_LE(exact_error(c, u), bound(4));
}

TEST(SynthesisTest, BqdRejectsBadLevel) {
  const ComplexMatrix u = haar_random_unitary(3, 1);
  EXPECT_THROW(synth_bqd(u, 1), RangeError);
  EXPECT_THROW(synth_bqd(u, 4), RangeError);
}

TEST(SynthesisTest, RejectsNonUnitaryAndBadShapes) {
  EXPECT_THROW(synth_qsd(cplx(2.0) * ComplexMatrix::identity(4)), ValidationError);
  EXPECT_THROW(synth_qsd(ComplexMatrix::identity(3)), DimensionError);
}

TEST(SynthesisTest, SingleQubitInput) {
  const ComplexMatrix u = haar_random_unitary(1, 3);
  for (MethodKind k : {MethodKind::CsdImproved, MethodKind::Qsd, MethodKind::Bqd}) {
    const Circuit c = synthesize(u, {k, 0});
    EXPECT_EQ(count_gates(c).cnot, 0u);
    EXPECT_LE(exact_error(c, u), 1e-12);
  }
}

TEST(SynthesisTest, SynthesizeIsDeterministic) {
  const ComplexMatrix u = haar_random_unitary(4, 12);
  EXPECT_EQ(synthesize(u, {MethodKind::Bqd, 3}), synthesize(u, {MethodKind::Bqd, 3}));
}

TEST(SynthesisTest, TwoQubitProductInput) {
  const ComplexMatrix u = kron(haar_random_unitary(1, 1), haar_random_unitary(1, 2));
  const Circuit c = two_qubit_optimal(u);
  EXPECT_EQ(count_gates(c).cnot, 0u);
  EXPECT_LE(exact_error(c, u), 1e-10);
}

TEST(SynthesisTest, TwoQubitCnot) {
  const ComplexMatrix cx = gate_matrix(Gate::cnot(1, 2), 2);
  const Circuit c = two_qubit_optimal(cx);
  EXPECT_EQ(count_gates(c).cnot, 1u);
  EXPECT_LE(exact_error(c, cx), 1e-10);
}

TEST(SynthesisTest, TwoQubitSwapNeedsThree) {
  const ComplexMatrix swap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  const Circuit c = two_qubit_optimal(swap);
  EXPECT_EQ(count_gates(c).cnot, 3u);
  EXPECT_LE(exact_error(c, swap), 1e-10);
}

TEST(SynthesisTest, TwoQubitRandom) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ComplexMatrix u = haar_random_unitary(2, seed);
    const Circuit c = two_qubit_optimal(u);
    EXPECT_LE(count_gates(c).cnot, 3u);
    EXPECT_LE(count_gates(c).one_qubit, 7u);
    EXPECT_LE(exact_error(c, u), 1e-10) << seed;
  }
}

TEST(SynthesisTest, PushDiagonal) {
  const MuxGate m = MuxGate::rotation(MuxAxis::Z, 1, {2, 3, 4}, std::vector<double>{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8});
  const DiagonalSpec trivial = DiagonalSpec::identity({3, 4});
  auto [m1, d1] = push_diagonal(trivial, m);
  EXPECT_EQ(m1.angles, m.angles);
  EXPECT_EQ(d1.phases, trivial.phases);

  DiagonalSpec d{{3, 4}, {std::polar(1.0, 0.3), std::polar(1.0, -1.2), std::polar(1.0, 2.0), 1.0}};
  for (MuxAxis axis : {MuxAxis::Z, MuxAxis::Y}) {
    MuxGate mm = m;
    mm.axis = axis;
    auto [m2, d2] = push_diagonal(d, mm);
    EXPECT_LE((m2.matrix(4) * d2.matrix(4) - d.matrix(4) * mm.matrix(4)).frobenius_norm(), 1e-12);
  }
  EXPECT_THROW(push_diagonal(DiagonalSpec::identity({1}), m), RangeError);
}

}  // namespace
}  // namespace qsynth
