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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qsynth/complex_matrix.hpp"
#include "qsynth/lamat.hpp"

namespace qsynth {

// Largest register circuit_matrix will expand.
inline constexpr int kMaxMatrixQubits = 12;

enum class GateKind { RX, RY, RZ, U2, CNOT };

std::string_view gate_kind_name(GateKind k);

// Wires are numbered from 1 (top). Wire 1 is the most significant bit of a
// matrix index.
struct Gate {
  GateKind kind = GateKind::RZ;
  int target = 1;
  int control = 0;     // CNOT only
  double angle = 0.0;  // RX/RY/RZ
  // U2: (delta, alpha, beta, lambda), see ZyzResult.
  std::array<double, 4> params{};

  static Gate rx(int target, double angle);
  static Gate ry(int target, double angle);
  static Gate rz(int target, double angle);
  static Gate cnot(int control, int target);
  static Gate u2(int target, const ZyzResult& z);
  // Normalizes through zyz_decompose.
  static Gate u2(int target, const Mat2& m);

  bool is_one_qubit() const { return kind != GateKind::CNOT; }
  // 2x2 matrix of a one-qubit gate. Throws for CNOT.
  Mat2 local_matrix() const;
  ZyzResult zyz() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct GateCounts {
  std::size_t cnot = 0;
  std::size_t one_qubit = 0;
  std::size_t total = 0;

  GateCounts& operator+=(const GateCounts& o) {
    cnot += o.cnot;
    one_qubit += o.one_qubit;
    total += o.total;
    return *this;
  }
  friend GateCounts operator+(GateCounts a, const GateCounts& b) { return a += b; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

class Circuit {
 public:
  explicit Circuit(int n = 1);

  int n() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::vector<Gate>& mutable_gates() { return gates_; }
  double global_phase() const { return global_phase_; }
  void set_global_phase(double p) { global_phase_ = p; }
  void add_global_phase(double p) { global_phase_ += p; }

  // Throws RangeError on a wire outside 1..n or control == target.
  void add(const Gate& g);
  // Appends the gates of `other` (applied after this circuit's gates) and
  // accumulates its global phase.
  void append(const Circuit& other);

  std::size_t size() const { return gates_.size(); }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
};

void validate_gate(const Gate& g, int n);

ComplexMatrix gate_matrix(const Gate& g, int n);
ComplexMatrix circuit_matrix(const Circuit& c);
// Left-multiplies `m` (dim 2^n) by the gate, in place.
void apply_gate(ComplexMatrix& m, const Gate& g, int n);
GateCounts count_gates(const Circuit& c);

std::string export_qasm(const Circuit& c);
// Reads the subset written by export_qasm. Throws ParseError.
Circuit parse_qasm(std::string_view text);

}  // namespace qsynth
