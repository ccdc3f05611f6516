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

#include "qsynth/circuit.hpp"

#include <cmath>
#include <string>

#include "qsynth/errors.hpp"
#include "qsynth/kernels.hpp"

namespace qsynth {

std::string_view gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::U2: return "u2";
    case GateKind::CNOT: return "cnot";
  }
  return "?";
}

Gate Gate::rx(int target, double angle) {
  Gate g;
  g.kind = GateKind::RX;
  g.target = target;
  g.angle = angle;
  return g;
}

Gate Gate::ry(int target, double angle) {
  Gate g = rx(target, angle);
  g.kind = GateKind::RY;
  return g;
}

Gate Gate::rz(int target, double angle) {
  Gate g = rx(target, angle);
  g.kind = GateKind::RZ;
  return g;
}

Gate Gate::cnot(int control, int target) {
  Gate g;
  g.kind = GateKind::CNOT;
  g.control = control;
  g.target = target;
  return g;
}

Gate Gate::u2(int target, const ZyzResult& z) {
  Gate g;
  g.kind = GateKind::U2;
  g.target = target;
  g.params = {z.delta, z.alpha, z.beta, z.gamma_angle};
  return g;
}

Gate Gate::u2(int target, const Mat2& m) { return u2(target, zyz_decompose(m)); }

ZyzResult Gate::zyz() const {
  switch (kind) {
    case GateKind::U2: return {params[0], params[1], params[2], params[3]};
    case GateKind::RZ: return {0.0, angle, 0.0, 0.0};
    case GateKind::RY: return {0.0, 0.0, angle, 0.0};
    default: return zyz_decompose(local_matrix());
  }
}

Mat2 Gate::local_matrix() const {
  switch (kind) {
    case GateKind::RX: return qsynth::rx(angle);
    case GateKind::RY: return qsynth::ry(angle);
    case GateKind::RZ: return qsynth::rz(angle);
    case GateKind::U2: return zyz().matrix();
    case GateKind::CNOT: break;
  }
  throw DimensionError("CNOT has no 2x2 matrix");
}

Circuit::Circuit(int n) : n_(n) {
  if (n < 1) throw RangeError("circuit needs at least one wire");
}

void validate_gate(const Gate& g, int n) {
  auto bad = [n](int w) { return w < 1 || w > n; };
  if (bad(g.target)) {
    throw RangeError("gate target wire " + std::to_string(g.target) + " outside 1.." +
                     std::to_string(n));
  }
  if (g.kind == GateKind::CNOT) {
    if (bad(g.control)) {
      throw RangeError("CNOT control wire " + std::to_string(g.control) + " outside 1.." +
                       std::to_string(n));
    }
    if (g.control == g.target) throw RangeError("CNOT control equals target");
  }
}

void Circuit::add(const Gate& g) {
  validate_gate(g, n_);
  gates_.push_back(g);
}

void Circuit::append(const Circuit& other) {
  if (other.n_ > n_) throw RangeError("appended circuit has more wires");
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
}

namespace {

std::size_t wire_bit(int wire, int n) { return std::size_t{1} << (n - wire); }

void check_matrix_size(int n) {
  if (n > kMaxMatrixQubits) {
    throw ResourceError("refusing to build a 2^" + std::to_string(n) +
                        " matrix; limit is " + std::to_string(kMaxMatrixQubits) + " qubits");
  }
}

}  // namespace

void apply_gate(ComplexMatrix& m, const Gate& g, int n) {
  validate_gate(g, n);
  const std::size_t dim = m.dim();
  if (g.kind == GateKind::CNOT) {
    kernels::apply_cx(m.data(), dim, dim, wire_bit(g.control, n), wire_bit(g.target, n));
  } else {
    kernels::active().apply_1q(m.data(), dim, dim, wire_bit(g.target, n), g.local_matrix());
  }
}

ComplexMatrix gate_matrix(const Gate& g, int n) {
  check_matrix_size(n);
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << n);
  apply_gate(m, g, n);
  return m;
}

ComplexMatrix circuit_matrix(const Circuit& c) {
  check_matrix_size(c.n());
  ComplexMatrix m = ComplexMatrix::identity(std::size_t{1} << c.n());
  for (const Gate& g : c.gates()) apply_gate(m, g, c.n());
  if (c.global_phase() != 0.0) m *= std::polar(1.0, c.global_phase());
  return m;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts k;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::CNOT) {
      ++k.cnot;
    } else {
      ++k.one_qubit;
    }
  }
  k.total = k.cnot + k.one_qubit;
  return k;
}

}  // namespace qsynth
