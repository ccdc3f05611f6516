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

#pragma once

#include <string_view>
#include <utility>

#include "qsynth/circuit.hpp"
#include "qsynth/mux.hpp"

namespace qsynth {

enum class MethodKind { CsdImproved, Qsd, Bqd };

std::string_view method_name(MethodKind k);

struct SynthMethod {
  MethodKind kind = MethodKind::Bqd;
  int level = 0;  // BQD only; 0 picks choose_level(n)
};

// matrix(delta) * matrix(q_circuit) == input
struct BasicBlockResult {
  Circuit q_circuit;
  DiagonalSpec delta;
};

// Level used when none is given: ceil(2n/3) clamped to [2, n].
int choose_level(int n);

// CSD network for U(2^l) with its trailing diagonal split off. The circuit
// acts on wires 1..l.
BasicBlockResult basic_block_q(const ComplexMatrix& u);

Circuit synth_csd_improved(const ComplexMatrix& u);
Circuit synth_qsd(const ComplexMatrix& u);
Circuit synth_bqd(const ComplexMatrix& u, int level);
Circuit synthesize(const ComplexMatrix& u, SynthMethod method);

// At most 3 CNOTs and 7 one-qubit gates, exact up to rounding.
Circuit two_qubit_optimal(const ComplexMatrix& u);

// Moves a diagonal on wires disjoint from the multiplexor's target past it.
// Both orders have the same matrix, so the pair is returned as is; throws
// RangeError when the diagonal touches the target.
std::pair<MuxGate, DiagonalSpec> push_diagonal(const DiagonalSpec& d, const MuxGate& m);

namespace detail {

// two_qubit_optimal emitted on wires (top, top + 1) of an n-wire circuit.
Circuit two_qubit_on_wires(const ComplexMatrix& u, int top, int n);

}  // namespace detail

}  // namespace qsynth
