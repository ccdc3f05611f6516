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

#include "qsynth/lamat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/SVD>

#include "eigen_bridge.hpp"
#include "qsynth/errors.hpp"

namespace qsynth {

using detail::EMat;
using detail::from_eigen;
using detail::to_eigen;

double boundary_tolerance(std::size_t dim) { return 1e-8 * std::sqrt(double(dim)); }
double internal_tolerance(std::size_t dim) { return 1e-9 * std::sqrt(double(dim)); }

Mat2 rz(double theta) {
  return Mat2::diag(std::polar(1.0, -theta / 2), std::polar(1.0, theta / 2));
}

Mat2 ry(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Mat2(c, s, -s, c);
}

Mat2 rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  return Mat2(c, cplx(0, s), cplx(0, s), c);
}

Mat2 ZyzResult::matrix() const {
  return std::polar(1.0, delta) * (rz(alpha) * ry(beta) * rz(gamma_angle));
}

ComplexMatrix CsdResult::reconstruct() const {
  const std::size_t m = l1.dim();
  ComplexMatrix mid(2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    const double c = std::cos(angles[j]), s = std::sin(angles[j]);
    mid(j, j) = c;
    mid(j, m + j) = s;
    mid(m + j, j) = -s;
    mid(m + j, m + j) = c;
  }
  return direct_sum(l1, l2) * mid * direct_sum(r1, r2);
}

double unitarity_defect(const ComplexMatrix& m) {
  ComplexMatrix p = m * m.adjoint();
  for (std::size_t i = 0; i < m.dim(); ++i) p(i, i) -= 1.0;
  return p.frobenius_norm();
}

bool is_unitary(const ComplexMatrix& m, double tol) { return unitarity_defect(m) <= tol; }

bool is_unitary(const Mat2& m, double tol) {
  const Mat2 p = m * m.adjoint();
  return frobenius_distance(p, Mat2::identity()) <= tol;
}

double phase_invariant_distance(const ComplexMatrix& u, const ComplexMatrix& v) {
  if (u.dim() != v.dim()) throw DimensionError("distance between matrices of different size");
  cplx t = 0.0;
  const std::size_t count = u.dim() * u.dim();
  for (std::size_t i = 0; i < count; ++i) t += std::conj(v.data()[i]) * u.data()[i];
  const cplx phase = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0);
  double s = 0.0;
  for (std::size_t i = 0; i < count; ++i) s += std::norm(u.data()[i] - phase * v.data()[i]);
  return std::sqrt(s);
}

ComplexMatrix haar_random_unitary(int n, std::uint64_t seed) {
  if (n < 1 || n > 12) throw RangeError("qubit count must be in 1..12, got " + std::to_string(n));
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  EMat g(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r)
    for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = cplx(normal(rng), normal(rng));
  Eigen::HouseholderQR<EMat> qr(g);
  EMat q = qr.householderQ();
  const EMat& rr = qr.matrixQR();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const cplx d = rr(j, j);
    q.col(j) *= std::abs(d) > 0.0 ? d / std::abs(d) : cplx(1.0);
  }
  return from_eigen(q);
}

ZyzResult zyz_decompose(const Mat2& u) {
  if (!is_unitary(u, boundary_tolerance(2))) throw ValidationError("ZYZ input is not unitary");
  ZyzResult z;
  z.delta = std::arg(u.det()) / 2;
  const cplx unphase = std::polar(1.0, -z.delta);
  const cplx a = unphase * u(0, 0);
  const cplx b = unphase * u(0, 1);
  z.beta = 2 * std::atan2(std::abs(b), std::abs(a));
  constexpr double kTiny = 1e-14;
  if (std::abs(b) < kTiny) {
    z.alpha = -2 * std::arg(a);
  } else if (std::abs(a) < kTiny) {
    z.alpha = -2 * std::arg(b);
  } else {
    const double sum = -2 * std::arg(a);
    const double diff = -2 * std::arg(b);
    z.alpha = (sum + diff) / 2;
    z.gamma_angle = (sum - diff) / 2;
  }
  return z;
}

ZyzResult zyz_decompose(const ComplexMatrix& u) { return zyz_decompose(u.to_mat2()); }

namespace {

// Nearest unitary in Frobenius norm.
EMat polar_unitary(const EMat& m) {
  Eigen::BDCSVD<EMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

void require_square_pow2(const ComplexMatrix& u) {
  const std::size_t d = u.dim();
  if (d < 2 || (d & (d - 1)) != 0) {
    throw DimensionError("expected a matrix of dimension 2^n with n >= 1, got " +
                         std::to_string(d));
  }
}

}  // namespace

ComplexMatrix nearest_unitary(const ComplexMatrix& m) {
  if (m.empty()) throw DimensionError("empty matrix");
  return from_eigen(polar_unitary(to_eigen(m)));
}

CsdResult cosine_sine_decompose(const ComplexMatrix& u) {
  require_square_pow2(u);
  if (!is_unitary(u, boundary_tolerance(u.dim()))) {
    throw ValidationError("CSD input is not unitary");
  }
  const EMat e = to_eigen(u);
  const Eigen::Index m = e.rows() / 2;
  const EMat u11 = e.topLeftCorner(m, m), u12 = e.topRightCorner(m, m);
  const EMat u21 = e.bottomLeftCorner(m, m), u22 = e.bottomRightCorner(m, m);

  // u11 = l1 C r1; singular values come out descending, so angles ascend.
  Eigen::BDCSVD<EMat> svd(u11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const EMat l1 = svd.matrixU();
  const EMat r1 = svd.matrixV().adjoint();
  Eigen::VectorXd c = svd.singularValues().cwiseMin(1.0);

  // u21 r1^dagger = -l2 S has orthogonal columns of norm s_j. QR with the
  // largest columns first recovers l2 and completes it where s_j ~ 0.
  const EMat z = u21 * r1.adjoint();
  EMat z_rev(m, m);
  for (Eigen::Index j = 0; j < m; ++j) z_rev.col(j) = z.col(m - 1 - j);
  Eigen::HouseholderQR<EMat> qr(z_rev);
  const EMat q = qr.householderQ();
  const EMat& rq = qr.matrixQR();
  EMat l2(m, m);
  Eigen::VectorXd s(m);
  for (Eigen::Index k = 0; k < m; ++k) {
    const Eigen::Index j = m - 1 - k;
    const cplx rkk = rq(k, k);
    const cplx ph = std::abs(rkk) > 0.0 ? rkk / std::abs(rkk) : cplx(1.0);
    s(j) = std::abs(rkk);
    l2.col(j) = -q.col(k) * ph;
  }

  CsdResult out;
  out.angles.resize(static_cast<std::size_t>(m));
  Eigen::VectorXd cc(m), ss(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const double t = std::clamp(std::atan2(s(j), c(j)), 0.0, M_PI / 2);
    out.angles[static_cast<std::size_t>(j)] = t;
    cc(j) = std::cos(t);
    ss(j) = std::sin(t);
  }
  // Rounding can break exact ascending order between near-equal angles.
  for (std::size_t j = 1; j < out.angles.size(); ++j)
    out.angles[j] = std::max(out.angles[j], out.angles[j - 1]);

  const EMat r2 = polar_unitary(ss.asDiagonal() * (l1.adjoint() * u12) +
                                cc.asDiagonal() * (l2.adjoint() * u22));
  out.l1 = from_eigen(l1);
  out.l2 = from_eigen(l2);
  out.r1 = from_eigen(r1);
  out.r2 = from_eigen(r2);

  const double residual = (out.reconstruct() - u).frobenius_norm();
  if (!(residual <= 1e3 * internal_tolerance(u.dim()))) {
    throw DecompositionError("cosine-sine decomposition did not reconstruct its input",
                             residual);
  }
  return out;
}

DemuxResult demux_block_diagonal(const ComplexMatrix& u1, const ComplexMatrix& u2) {
  if (u1.dim() != u2.dim()) throw DimensionError("demultiplexed blocks differ in size");
  const double tol = boundary_tolerance(u1.dim());
  if (!is_unitary(u1, tol) || !is_unitary(u2, tol)) {
    throw ValidationError("demultiplexer input is not unitary");
  }
  const EMat a = to_eigen(u1), b = to_eigen(u2);
  // u1 u2^dagger is normal, so its Schur form is diagonal up to rounding and
  // repeated eigenvalues get an orthonormal eigenbasis for free.
  Eigen::ComplexSchur<EMat> schur(a * b.adjoint());
  if (schur.info() != Eigen::Success) {
    throw DecompositionError("Schur factorization did not converge", 0.0);
  }
  const EMat& t = schur.matrixT();
  const EMat& v = schur.matrixU();
  const Eigen::Index m = a.rows();
  DemuxResult out;
  out.d_phases.resize(static_cast<std::size_t>(m));
  Eigen::VectorXcd d(m);
  for (Eigen::Index j = 0; j < m; ++j) {
    cplx r = std::sqrt(t(j, j));
    r = std::abs(r) > 0.0 ? r / std::abs(r) : cplx(1.0);
    d(j) = r;
    out.d_phases[static_cast<std::size_t>(j)] = r;
  }
  const EMat w = d.asDiagonal() * (v.adjoint() * b);
  out.v = from_eigen(v);
  out.w = from_eigen(w);

  const double residual = (from_eigen(v * d.asDiagonal() * w) - u1).frobenius_norm() +
                          (from_eigen(v * d.conjugate().asDiagonal() * w) - u2).frobenius_norm();
  if (!(residual <= 1e3 * internal_tolerance(u1.dim()))) {
    throw DecompositionError("demultiplexing did not reconstruct its inputs", residual);
  }
  return out;
}

}  // namespace qsynth
