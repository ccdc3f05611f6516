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
#include <complex>

namespace qsynth {

using cplx = std::complex<double>;

// Fixed-size 2x2 complex matrix, row-major. Used for one-qubit gates and
// multiplexor payloads where a heap-backed matrix would be wasteful.
struct Mat2 {
  std::array<cplx, 4> m{cplx(1), cplx(0), cplx(0), cplx(1)};

  Mat2() = default;
  Mat2(cplx a, cplx b, cplx c, cplx d) : m{a, b, c, d} {}

  static Mat2 identity() { return Mat2(); }
  static Mat2 diag(cplx a, cplx d) { return Mat2(a, 0.0, 0.0, d); }

  cplx& operator()(int r, int c) { return m[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return m[2 * r + c]; }

  Mat2 adjoint() const {
    return Mat2(std::conj(m[0]), std::conj(m[2]), std::conj(m[1]),
                std::conj(m[3]));
  }
  cplx det() const { return m[0] * m[3] - m[1] * m[2]; }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2(a.m[0] * b.m[0] + a.m[1] * b.m[2],
                a.m[0] * b.m[1] + a.m[1] * b.m[3],
                a.m[2] * b.m[0] + a.m[3] * b.m[2],
                a.m[2] * b.m[1] + a.m[3] * b.m[3]);
  }
  friend Mat2 operator*(cplx s, const Mat2& a) {
    return Mat2(s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]);
  }
};

// Frobenius norm of a - b.
double frobenius_distance(const Mat2& a, const Mat2& b);

// min over unit phases p of ||a - p b||_F.
double phase_invariant_distance(const Mat2& a, const Mat2& b);

}  // namespace qsynth
