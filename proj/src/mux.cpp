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

#include "qsynth/mux.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qsynth/errors.hpp"

namespace qsynth {

namespace detail {

std::size_t local_index(std::size_t x, std::span<const int> wires, int n) {
  std::size_t idx = 0;
  for (int w : wires) idx = (idx << 1) | ((x >> (n - w)) & 1u);
  return idx;
}

}  // namespace detail

namespace {

const Mat2 kHadamard(M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2);

bool is_pow2(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

int max_wire_of(std::span<const int> wires, int target) {
  int m = target;
  for (int w : wires) m = std::max(m, w);
  return m;
}

cplx unit(cplx z) { return std::abs(z) > 0.0 ? z / std::abs(z) : cplx(1.0); }

}  // namespace

DiagonalSpec DiagonalSpec::identity(std::vector<int> wires) {
  DiagonalSpec d;
  d.phases.assign(std::size_t{1} << wires.size(), cplx(1.0));
  d.wires = std::move(wires);
  return d;
}

void DiagonalSpec::validate(double tol) const {
  if (phases.size() != (std::size_t{1} << wires.size())) {
    throw DimensionError("diagonal has " + std::to_string(phases.size()) + " phases for " +
                         std::to_string(wires.size()) + " wires");
  }
  for (const cplx& p : phases) {
    if (std::abs(std::abs(p) - 1.0) > tol) {
      throw ValidationError("diagonal entry with modulus " + std::to_string(std::abs(p)));
    }
  }
}

bool DiagonalSpec::is_trivial(double tol) const {
  for (const cplx& p : phases)
    if (std::abs(p - phases.front()) > tol) return false;
  return true;
}

ComplexMatrix DiagonalSpec::matrix(int n) const {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> d(dim);
  for (std::size_t x = 0; x < dim; ++x) d[x] = phases[detail::local_index(x, wires, n)];
  return ComplexMatrix::diagonal(d);
}

MuxGate MuxGate::rotation(MuxAxis axis, int target, std::vector<int> controls,
                          std::vector<double> angles) {
  MuxGate m;
  m.axis = axis;
  m.target = target;
  m.controls = std::move(controls);
  m.angles = std::move(angles);
  return m;
}

MuxGate MuxGate::generic(int target, std::vector<int> controls, std::vector<Mat2> payload) {
  MuxGate m;
  m.axis = MuxAxis::Generic;
  m.target = target;
  m.controls = std::move(controls);
  m.unitaries = std::move(payload);
  return m;
}

std::size_t MuxGate::payload_size() const {
  return axis == MuxAxis::Generic ? unitaries.size() : angles.size();
}

Mat2 MuxGate::block(std::size_t j) const {
  switch (axis) {
    case MuxAxis::Z: return rz(angles[j]);
    case MuxAxis::Y: return ry(angles[j]);
    case MuxAxis::Generic: break;
  }
  return unitaries[j];
}

int MuxGate::max_wire() const { return max_wire_of(controls, target); }

void MuxGate::validate() const {
  if (payload_size() != (std::size_t{1} << controls.size())) {
    throw DimensionError("multiplexor with " + std::to_string(controls.size()) +
                         " controls needs " + std::to_string(1u << controls.size()) +
                         " payload entries, got " + std::to_string(payload_size()));
  }
  if (std::find(controls.begin(), controls.end(), target) != controls.end()) {
    throw RangeError("multiplexor target is also a control");
  }
  if (axis == MuxAxis::Generic) {
    for (const Mat2& u : unitaries)
      if (!is_unitary(u, boundary_tolerance(2))) throw ValidationError("multiplexor payload is not unitary");
  }
}

ComplexMatrix MuxGate::matrix(int n) const {
  validate();
  const std::size_t dim = std::size_t{1} << n;
  const std::size_t tbit = std::size_t{1} << (n - target);
  ComplexMatrix out(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    const Mat2 b = block(detail::local_index(x, controls, n));
    const int col = (x & tbit) ? 1 : 0;
    out(x & ~tbit, x) = b(0, col);
    out(x | tbit, x) = b(1, col);
  }
  return out;
}

unsigned ruler(std::uint64_t i) {
  if (i == 0) throw RangeError("ruler function is undefined at 0");
  return static_cast<unsigned>(std::countr_zero(i));
}

std::vector<double> walsh_angles(std::span<const double> thetas) {
  const std::size_t count = thetas.size();
  if (!is_pow2(count)) {
    throw DimensionError("angle count " + std::to_string(count) + " is not a power of two");
  }
  // Fast Walsh-Hadamard transform, then reorder rows by Gray code.
  std::vector<double> h(thetas.begin(), thetas.end());
  for (std::size_t len = 1; len < count; len <<= 1) {
    for (std::size_t i = 0; i < count; i += 2 * len) {
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = h[j], b = h[j + len];
        h[j] = a + b;
        h[j + len] = a - b;
      }
    }
  }
  std::vector<double> out(count);
  const double scale = 1.0 / double(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = h[i ^ (i >> 1)] * scale;
  return out;
}

std::vector<Gate> gray_rotation_gates(MuxAxis axis, int target, std::span<const int> controls,
                                      std::span<const double> angles) {
  const std::size_t k = controls.size();
  const std::vector<double> a = walsh_angles(angles);
  if (a.size() != (std::size_t{1} << k)) throw DimensionError("angle count does not match controls");
  auto rot = [&](double t) {
    return axis == MuxAxis::Z ? Gate::rz(target, t) : Gate::ry(target, t);
  };
  std::vector<Gate> gates;
  gates.reserve(2 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    gates.push_back(rot(a[i]));
    if (k == 0) break;
    const unsigned bit = i + 1 < a.size() ? ruler(i + 1) : unsigned(k - 1);
    gates.push_back(Gate::cnot(controls[k - 1 - bit], target));
  }
  return gates;
}

namespace detail {

MuxParts expand_ry_up_to_diagonal(std::span<const double> thetas,
                                  std::span<const int> controls, int target) {
  // The Y cascade is unchanged if every CNOT becomes a CZ, since Z also
  // negates a Y rotation. The last CZ is diagonal and becomes the residual.
  // Interior CZs are CNOTs conjugated by ry(-pi/2), which cancel between
  // neighbours and leave -pi/2 and +pi/2 on the outer rotations.
  MuxParts out;
  out.gates = gray_rotation_gates(MuxAxis::Y, target, controls, thetas);
  out.gates.pop_back();
  out.gates.front().angle -= M_PI / 2;
  out.gates.back().angle += M_PI / 2;
  const std::size_t k = controls.size();
  out.diag.assign(std::size_t{2} << k, cplx(1.0));
  // CZ between controls[0] (top bit of the control pattern) and the target.
  const std::size_t top = std::size_t{1} << k;
  for (std::size_t idx = 0; idx < out.diag.size(); ++idx)
    if ((idx & top) && (idx & 1u)) out.diag[idx] = -1.0;
  return out;
}

MuxParts expand_u2_parts(std::span<const Mat2> payload, std::span<const int> controls,
                         int target) {
  const std::size_t k = controls.size();
  MuxParts out;
  if (k == 0) {
    out.gates.push_back(Gate::u2(target, payload[0]));
    out.diag = {1.0, 1.0};
    return out;
  }
  // Split on the first control: block(0) = P^dagger a b and block(1) = a Z b,
  // so the multiplexor is (P^dagger + I) (a) CZ (b) with a, b multiplexed on
  // the remaining controls. CZ = H CX H; the H's fold into neighbours.
  const std::size_t half = payload.size() / 2;
  std::vector<Mat2> a(half), b(half);
  std::vector<cplx> p_conj(half), q_conj(half);
  for (std::size_t j = 0; j < half; ++j) {
    const Mat2& a0 = payload[j];
    const Mat2& a1 = payload[half + j];
    const Mat2 m = a0 * a1.adjoint();
    const cplx det = m.det();
    cplx p, q;
    if (std::abs(m(0, 0)) > 1e-9) {
      const cplx r = unit(m(0, 0) / m(1, 1));
      p = unit(std::sqrt(1.0 / (r * det)));
      q = -p * r;
    } else {
      p = 1.0;
      q = unit(-1.0 / det);
    }
    const Mat2 pm = Mat2::diag(p, q);
    const Mat2 h = pm * m;
    // +1 eigenvector from the dominant column of (I + H) / 2.
    const cplx c0a = 0.5 * (1.0 + h(0, 0)), c0b = 0.5 * h(1, 0);
    const cplx c1a = 0.5 * h(0, 1), c1b = 0.5 * (1.0 + h(1, 1));
    cplx v0, v1;
    if (std::norm(c0a) + std::norm(c0b) >= std::norm(c1a) + std::norm(c1b)) {
      v0 = c0a;
      v1 = c0b;
    } else {
      v0 = c1a;
      v1 = c1b;
    }
    const double nv = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= nv;
    v1 /= nv;
    a[j] = Mat2(v0, -std::conj(v1), v1, std::conj(v0));
    b[j] = a[j].adjoint() * (pm * a0);
    p_conj[j] = std::conj(p);
    q_conj[j] = std::conj(q);
  }
  std::span<const int> rest = controls.subspan(1);
  MuxParts eb = expand_u2_parts(b, rest, target);
  Gate& last = eb.gates.back();
  last = Gate::u2(target, kHadamard * last.local_matrix());
  for (std::size_t j = 0; j < half; ++j) {
    a[j] = a[j] * Mat2::diag(eb.diag[2 * j], eb.diag[2 * j + 1]) * kHadamard;
  }
  MuxParts ea = expand_u2_parts(a, rest, target);

  out.gates = std::move(eb.gates);
  out.gates.push_back(Gate::cnot(controls[0], target));
  out.gates.insert(out.gates.end(), ea.gates.begin(), ea.gates.end());
  out.diag.resize(std::size_t{2} << k);
  for (std::size_t j = 0; j < half; ++j) {
    out.diag[2 * j] = p_conj[j] * ea.diag[2 * j];
    out.diag[2 * j + 1] = q_conj[j] * ea.diag[2 * j + 1];
    out.diag[2 * (half + j)] = ea.diag[2 * j];
    out.diag[2 * (half + j) + 1] = ea.diag[2 * j + 1];
  }
  return out;
}

}  // namespace detail

namespace {

MuxExpansion finish(detail::MuxParts parts, const MuxGate& m, int n) {
  MuxExpansion out{Circuit(n == 0 ? m.max_wire() : n), {}};
  for (const Gate& g : parts.gates) out.circuit.add(g);
  out.residual.wires = m.controls;
  out.residual.wires.push_back(m.target);
  out.residual.phases = std::move(parts.diag);
  return out;
}

}  // namespace

MuxExpansion expand_mux_rotation(const MuxGate& m, bool up_to_diagonal, int n) {
  if (m.axis == MuxAxis::Generic) {
    throw UnsupportedError("generic multiplexors are expanded by expand_mux_u2");
  }
  m.validate();
  if (up_to_diagonal && m.axis == MuxAxis::Z) {
    throw UnsupportedError("a Z multiplexor is already diagonal; up-to-diagonal mode has no saving");
  }
  if (up_to_diagonal && !m.controls.empty()) {
    return finish(detail::expand_ry_up_to_diagonal(m.angles, m.controls, m.target), m, n);
  }
  detail::MuxParts parts;
  parts.gates = gray_rotation_gates(m.axis, m.target, m.controls, m.angles);
  parts.diag.assign(std::size_t{2} << m.controls.size(), cplx(1.0));
  return finish(std::move(parts), m, n);
}

MuxExpansion expand_mux_u2(const MuxGate& m, int n) {
  m.validate();
  std::vector<Mat2> payload(m.payload_size());
  for (std::size_t j = 0; j < payload.size(); ++j) payload[j] = m.block(j);
  return finish(detail::expand_u2_parts(payload, m.controls, m.target), m, n);
}

std::pair<std::vector<MuxGate>, double> diagonal_to_rz_cascade(const DiagonalSpec& d) {
  d.validate();
  if (d.wires.empty()) throw DimensionError("diagonal over no wires");
  std::vector<double> phi(d.phases.size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = std::arg(d.phases[i]);
  std::vector<MuxGate> levels;
  for (std::size_t j = 0; j < d.wires.size(); ++j) {
    const std::size_t half = phi.size() / 2;
    std::vector<double> theta(half), psi(half);
    for (std::size_t s = 0; s < half; ++s) {
      theta[s] = phi[half + s] - phi[s];
      psi[s] = 0.5 * (phi[half + s] + phi[s]);
    }
    std::vector<int> controls(d.wires.begin() + std::ptrdiff_t(j) + 1, d.wires.end());
    levels.push_back(MuxGate::rotation(MuxAxis::Z, d.wires[j], std::move(controls),
                                       std::move(theta)));
    phi = std::move(psi);
  }
  return {std::move(levels), phi.front()};
}

Circuit synth_diagonal(const DiagonalSpec& d, int n) {
  d.validate();
  Circuit c(n == 0 ? max_wire_of(d.wires, d.wires.front()) : n);
  if (d.is_trivial()) {
    c.set_global_phase(std::arg(d.phases.front()));
    return c;
  }
  auto [levels, phase] = diagonal_to_rz_cascade(d);
  for (const MuxGate& m : levels)
    for (const Gate& g : gray_rotation_gates(MuxAxis::Z, m.target, m.controls, m.angles)) c.add(g);
  c.set_global_phase(phase);
  return c;
}

}  // namespace qsynth
