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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qsynth/circuit.hpp"

namespace qsynth {

enum class MuxAxis { Z, Y, Generic };

// Diagonal gate on an ordered wire list; wires[0] is the most significant
// bit of the phase index.
struct DiagonalSpec {
  std::vector<int> wires;
  std::vector<cplx> phases;

  static DiagonalSpec identity(std::vector<int> wires);

  // Throws ValidationError on a phase that is not unit modulus and
  // DimensionError on a size mismatch.
  void validate(double tol = 1e-9) const;
  // All phases equal, i.e. a global phase.
  bool is_trivial(double tol = 1e-12) const;
  ComplexMatrix matrix(int n) const;
};

// Uniformly controlled one-qubit gate. The payload is indexed by the control
// bit pattern with controls[0] as the most significant bit.
struct MuxGate {
  MuxAxis axis = MuxAxis::Z;
  int target = 1;
  std::vector<int> controls;
  std::vector<double> angles;    // Z and Y
  std::vector<Mat2> unitaries;   // Generic

  static MuxGate rotation(MuxAxis axis, int target, std::vector<int> controls,
                          std::vector<double> angles);
  static MuxGate generic(int target, std::vector<int> controls, std::vector<Mat2> payload);

  std::size_t payload_size() const;
  Mat2 block(std::size_t j) const;
  int max_wire() const;
  void validate() const;
  ComplexMatrix matrix(int n) const;
};

// matrix(residual) * matrix(circuit) == matrix(mux)
struct MuxExpansion {
  Circuit circuit;
  DiagonalSpec residual;
};

// Zero-based index of the lowest set bit of i. Throws RangeError for 0.
unsigned ruler(std::uint64_t i);

// Angles for the Gray-code rotation cascade: a_i = 2^-k sum_x t_x (-1)^{|g(i) & x|}
// with g the reflected Gray code. Throws DimensionError unless the length is
// a power of two.
std::vector<double> walsh_angles(std::span<const double> thetas);

// Rotation i is followed by a CNOT whose control is the wire of the bit that
// flips between g(i) and g(i+1); the last CNOT uses controls[0].
std::vector<Gate> gray_rotation_gates(MuxAxis axis, int target, std::span<const int> controls,
                                      std::span<const double> angles);

// n = 0 sizes the circuit to the largest wire used.
MuxExpansion expand_mux_rotation(const MuxGate& m, bool up_to_diagonal, int n = 0);
MuxExpansion expand_mux_u2(const MuxGate& m, int n = 0);

// Factors a diagonal into Z multiplexors: the first targets wires[0] with
// every other wire as control, the next targets wires[1] with wires[2..], and
// so on down to an uncontrolled rotation on the last wire. Returns the
// multiplexors and the leftover global phase.
std::pair<std::vector<MuxGate>, double> diagonal_to_rz_cascade(const DiagonalSpec& d);

Circuit synth_diagonal(const DiagonalSpec& d, int n = 0);

namespace detail {

// Residual index layout: (control pattern, target bit), target least significant.
struct MuxParts {
  std::vector<Gate> gates;
  std::vector<cplx> diag;
};

MuxParts expand_u2_parts(std::span<const Mat2> payload, std::span<const int> controls,
                         int target);
MuxParts expand_ry_up_to_diagonal(std::span<const double> thetas,
                                  std::span<const int> controls, int target);

// Index of a full-register basis state restricted to `wires`.
std::size_t local_index(std::size_t x, std::span<const int> wires, int n);

}  // namespace detail

}  // namespace qsynth
