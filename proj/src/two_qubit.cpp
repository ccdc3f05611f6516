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

// Two-qubit synthesis through the magic-basis (KAK) decomposition
//   U = phase * (A1 x A2) * exp(i(a XX + b YY + c ZZ)) * (B1 x B2)
// followed by a fixed 0/1/2/3-CNOT template chosen from (a, b, c).

#include <algorithm>
#include <array>
#include <cmath>

#include <Eigen/Dense>

#include "qsynth/errors.hpp"
#include "qsynth/lamat.hpp"
#include "qsynth/synthesis.hpp"

namespace qsynth {
namespace {

using M4 = Eigen::Matrix4cd;
using C4 = Eigen::Vector4cd;

constexpr double kQuarterPi = M_PI / 4;
constexpr double kZeroTol = 1e-11;

const cplx I1(0.0, 1.0);

M4 magic() {
  M4 b;
  b << 1, 0, 0, I1,
       0, I1, 1, 0,
       0, I1, -1, 0,
       1, 0, 0, -I1;
  return b / std::sqrt(2.0);
}

// Sign patterns of XX, YY, ZZ in the magic basis.
constexpr std::array<std::array<double, 4>, 3> kSigns{{
    {1, 1, -1, -1},
    {-1, 1, -1, 1},
    {1, -1, -1, 1},
}};

Eigen::Matrix2cd pauli(int k) {
  Eigen::Matrix2cd p;
  if (k == 0) p << 0, 1, 1, 0;
  if (k == 1) p << 0, -I1, I1, 0;
  if (k == 2) p << 1, 0, 0, -1;
  return p;
}

M4 kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  M4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

Mat2 to_mat2(const Eigen::Matrix2cd& m) { return Mat2(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }
Eigen::Matrix2cd to_eigen2(const Mat2& m) {
  Eigen::Matrix2cd e;
  e << m(0, 0), m(0, 1), m(1, 0), m(1, 1);
  return e;
}

// K = A x B for a local K, phases split arbitrarily between the factors.
std::pair<Mat2, Mat2> split_local(const M4& k) {
  int bi = 0, bj = 0;
  double best = -1.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const double nrm = k.block<2, 2>(2 * i, 2 * j).squaredNorm();
      if (nrm > best) {
        best = nrm;
        bi = i;
        bj = j;
      }
    }
  Eigen::Matrix2cd b = k.block<2, 2>(2 * bi, 2 * bj);
  b /= std::sqrt(std::abs(b.determinant()));
  Eigen::Matrix2cd a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = (b.adjoint() * k.block<2, 2>(2 * i, 2 * j)).trace() / 2.0;
  return {to_mat2(a), to_mat2(b)};
}

struct Kak {
  M4 left, right;               // local factors
  std::array<double, 3> coord;  // a, b, c
};

Kak kak_decompose(const M4& u_in) {
  const M4 b = magic();
  const cplx det = u_in.determinant();
  const M4 u = u_in * std::polar(1.0, -std::arg(det) / 4);
  const M4 up = b.adjoint() * u * b;
  const M4 m2 = up.transpose() * up;

  // m2 is complex symmetric and unitary, so its real and imaginary parts are
  // commuting real symmetric matrices. A generic real combination of them
  // has a common eigenbasis.
  Eigen::Matrix4d p;
  bool ok = false;
  for (double r : {0.4142135623730951, 1.7320508075688772, 0.2718281828459045, 3.14159}) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(m2.real() + r * m2.imag());
    p = es.eigenvectors();
    M4 d = p.cast<cplx>().transpose() * m2 * p.cast<cplx>();
    d.diagonal().setZero();
    if (d.cwiseAbs().maxCoeff() < 1e-10) {
      ok = true;
      break;
    }
  }
  if (!ok) throw DecompositionError("magic-basis diagonalization failed", 0.0);
  if (p.determinant() < 0) p.col(0) *= -1.0;
  const M4 pc = p.cast<cplx>();
  const C4 d = (pc.transpose() * m2 * pc).diagonal();
  C4 f;
  for (int i = 0; i < 4; ++i) f(i) = std::sqrt(d(i));
  if (std::abs(f.prod() + 1.0) < 1e-6) f(0) = -f(0);
  const M4 k1 = up * pc * f.cwiseInverse().asDiagonal();

  Kak out;
  out.left = b * k1 * b.adjoint();
  out.right = b * pc.transpose() * b.adjoint();
  std::array<double, 4> theta;
  for (int i = 0; i < 4; ++i) theta[i] = std::arg(f(i));
  for (int k = 0; k < 3; ++k) {
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += kSigns[k][i] * theta[i];
    out.coord[k] = s / 4;
  }
  // Bring every coordinate into (-pi/4, pi/4]; exp(i pi/2 PP) = i PP is local.
  for (int k = 0; k < 3; ++k) {
    const double steps = std::ceil((out.coord[k] - kQuarterPi) / (M_PI / 2) - 1e-12);
    const int s = static_cast<int>(steps);
    if (s == 0) continue;
    out.coord[k] -= s * (M_PI / 2);
    const M4 pp = kron2(pauli(k), pauli(k));
    M4 shift = M4::Identity();
    const int reps = ((s % 4) + 4) % 4;
    for (int r = 0; r < reps; ++r) shift = (I1 * pp) * shift;
    out.right = shift * out.right;
  }
  return out;
}

bool near(double x, double v) { return std::abs(x - v) < kZeroTol; }

class Emitter {
 public:
  Emitter(int top, int n) : c_(n), top_(top) {}

  void local(int which, const Mat2& m) { c_.add(Gate::u2(top_ + which, m)); }
  void locals(const M4& k) {
    auto [a, b] = split_local(k);
    local(0, a);
    local(1, b);
  }
  void cx(int control, int target) { c_.add(Gate::cnot(top_ + control, top_ + target)); }
  void rz(int which, double t) { c_.add(Gate::rz(top_ + which, t)); }
  void ry(int which, double t) { c_.add(Gate::ry(top_ + which, t)); }
  void rx(int which, double t) { c_.add(Gate::rx(top_ + which, t)); }
  Circuit& circuit() { return c_; }

 private:
  Circuit c_;
  int top_;
};

// Sets the global phase so the two-wire block matches u exactly.
void fix_phase(Circuit& c, const ComplexMatrix& u, int top) {
  Circuit local(2);
  for (Gate g : c.gates()) {
    g.target -= top - 1;
    if (g.kind == GateKind::CNOT) g.control -= top - 1;
    local.add(g);
  }
  const ComplexMatrix m = circuit_matrix(local);
  cplx t = 0.0;
  for (std::size_t i = 0; i < 16; ++i) t += std::conj(m.data()[i]) * u.data()[i];
  c.set_global_phase(std::arg(t));
}

}  // namespace

namespace detail {

Circuit two_qubit_on_wires(const ComplexMatrix& u, int top, int n) {
  if (u.dim() != 4) throw DimensionError("two-qubit synthesis needs a 4x4 matrix");
  if (!is_unitary(u, boundary_tolerance(4))) throw ValidationError("two-qubit input is not unitary");
  M4 ue;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) ue(r, c) = u(r, c);
  Kak k = kak_decompose(ue);
  auto& [a, b, c] = k.coord;
  Emitter e(top, n);

  const int zeros = int(near(a, 0)) + int(near(b, 0)) + int(near(c, 0));
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  if (zeros == 3) {
    e.locals(k.left * k.right);
  } else if (zeros == 2 && (near(std::abs(a + b + c), kQuarterPi))) {
    // One nonzero coordinate of size pi/4: a CNOT up to locals. Conjugate it
    // onto ZZ, then exp(i pi/4 ZZ) = e^{i pi/4} (S^dag x S^dag) CZ.
    const int nz = !near(a, 0) ? 0 : (!near(b, 0) ? 1 : 2);
    const double val = k.coord[nz];
    Eigen::Matrix2cd w = id;
    if (nz == 0) w = to_eigen2(Mat2(M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2));
    if (nz == 1) w = to_eigen2(qsynth::rx(M_PI / 2));
    const M4 ww = kron2(w, w);
    // exp(i v ZZ) for v = -pi/4 is the conjugate: (S x S) CZ up to phase.
    const Eigen::Matrix2cd s = to_eigen2(Mat2::diag(1.0, val > 0 ? -I1 : I1));
    const Eigen::Matrix2cd h = to_eigen2(Mat2(M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2));
    // CZ = (I x H) CX (I x H)
    e.locals(kron2(id, h) * ww.adjoint() * k.right);
    e.cx(0, 1);
    e.locals(k.left * ww * kron2(s, s) * kron2(id, h));
  } else if (zeros >= 1) {
    // exp(i(a XX + c ZZ)) = CX12 (exp(iaX) x exp(icZ)) CX12. Move the zero
    // coordinate onto YY first.
    double xa = a, zc = c;
    Eigen::Matrix2cd w = id;
    if (near(a, 0)) {  // (0, b, c) = (S x S) (b, 0, c) (S^dag x S^dag)
      w = to_eigen2(Mat2::diag(1.0, I1));
      xa = b;
    } else if (near(c, 0)) {  // (a, b, 0) = (V x V) (a, 0, b) (V^dag x V^dag)
      w = to_eigen2(qsynth::rx(M_PI / 2));
      zc = b;
    }
    const M4 ww = kron2(w, w);
    e.locals(ww.adjoint() * k.right);
    e.cx(0, 1);
    e.rx(0, 2 * xa);
    e.rz(1, -2 * zc);
    e.cx(0, 1);
    e.locals(k.left * ww);
  } else {
    // Three-CNOT template for exp(i(a XX + b YY + c ZZ)) up to phase.
    auto [b1, b2] = split_local(k.right);
    auto [a1, a2] = split_local(k.left);
    e.local(0, b1);
    e.local(1, qsynth::rz(-M_PI / 2) * b2);
    e.cx(1, 0);
    e.rz(0, -2 * c - M_PI / 2);
    e.ry(1, -2 * a - M_PI / 2);
    e.cx(0, 1);
    e.ry(1, 2 * b + M_PI / 2);
    e.cx(1, 0);
    e.local(0, a1 * qsynth::rz(M_PI / 2));
    e.local(1, a2);
  }
  Circuit out = std::move(e.circuit());
  fix_phase(out, u, top);
  return out;
}

}  // namespace detail

Circuit two_qubit_optimal(const ComplexMatrix& u) { return detail::two_qubit_on_wires(u, 1, 2); }

}  // namespace qsynth
