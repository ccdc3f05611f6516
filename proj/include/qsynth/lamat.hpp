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
#include <vector>

#include "qsynth/complex_matrix.hpp"

namespace qsynth {

// Tolerance for accepting user-supplied unitaries.
double boundary_tolerance(std::size_t dim);
// Tolerance for internal reconstruction checks.
double internal_tolerance(std::size_t dim);

// Rotation conventions used throughout:
//   rz(t) = diag(e^{-it/2}, e^{it/2})
//   ry(t) = [[cos t/2, sin t/2], [-sin t/2, cos t/2]]
//   rx(t) = [[cos t/2, i sin t/2], [i sin t/2, cos t/2]]
// ry and rx therefore equal the textbook gates at -t.
Mat2 rz(double theta);
Mat2 ry(double theta);
Mat2 rx(double theta);

struct ZyzResult {
  double delta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;  // in [0, pi]
  double gamma_angle = 0.0;

  // e^{i delta} rz(alpha) ry(beta) rz(gamma_angle)
  Mat2 matrix() const;
};

struct CsdResult {
  ComplexMatrix l1, l2, r1, r2;
  std::vector<double> angles;  // ascending, each in [0, pi/2]

  // [l1 + l2] [[C, S], [-S, C]] [r1 + r2]
  ComplexMatrix reconstruct() const;
};

// u1 = v diag(d) w and u2 = v diag(d)^* w
struct DemuxResult {
  ComplexMatrix v, w;
  std::vector<cplx> d_phases;
};

double unitarity_defect(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);
bool is_unitary(const Mat2& m, double tol);

// min over unit phases p of ||u - p v||_F.
double phase_invariant_distance(const ComplexMatrix& u, const ComplexMatrix& v);

// Haar-distributed U(2^n), 1 <= n <= 12, deterministic in seed.
ComplexMatrix haar_random_unitary(int n, std::uint64_t seed);
// Polar factor of m, the closest unitary in Frobenius norm.
ComplexMatrix nearest_unitary(const ComplexMatrix& m);

ZyzResult zyz_decompose(const Mat2& u);
ZyzResult zyz_decompose(const ComplexMatrix& u);

CsdResult cosine_sine_decompose(const ComplexMatrix& u);

// u1 = v d w and u2 = v d^dagger w.
DemuxResult demux_block_diagonal(const ComplexMatrix& u1, const ComplexMatrix& u2);

}  // namespace qsynth
