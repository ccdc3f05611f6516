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

#include "qsynth/kernels.hpp"

namespace qsynth::kernels::scalar {

// Complex arithmetic is spelled out on real parts; std::complex operator*
// carries NaN recovery code that defeats vectorization and costs ~3x here.

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  double* pc = reinterpret_cast<double*>(c);
  for (std::size_t i = 0; i < 2 * n * n; ++i) pc[i] = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = pc + 2 * i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = pa[2 * (i * n + k)];
      const double ai = pa[2 * (i * n + k) + 1];
      const double* brow = pb + 2 * k * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void apply_1q(cplx* m, std::size_t rows, std::size_t cols, std::size_t bit,
              const Mat2& u) {
  const double u00r = u.m[0].real(), u00i = u.m[0].imag();
  const double u01r = u.m[1].real(), u01i = u.m[1].imag();
  const double u10r = u.m[2].real(), u10i = u.m[2].imag();
  const double u11r = u.m[3].real(), u11i = u.m[3].imag();
  for (std::size_t r = 0; r < rows; ++r) {
    if (r & bit) continue;
    double* x = reinterpret_cast<double*>(m + r * cols);
    double* y = reinterpret_cast<double*>(m + (r | bit) * cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const double xr = x[2 * j], xi = x[2 * j + 1];
      const double yr = y[2 * j], yi = y[2 * j + 1];
      x[2 * j] = u00r * xr - u00i * xi + u01r * yr - u01i * yi;
      x[2 * j + 1] = u00r * xi + u00i * xr + u01r * yi + u01i * yr;
      y[2 * j] = u10r * xr - u10i * xi + u11r * yr - u11i * yi;
      y[2 * j + 1] = u10r * xi + u10i * xr + u11r * yi + u11i * yr;
    }
  }
}

void scale_rows(cplx* m, std::size_t rows, std::size_t cols, const cplx* d) {
  for (std::size_t r = 0; r < rows; ++r) {
    const double dr = d[r].real(), di = d[r].imag();
    double* x = reinterpret_cast<double*>(m + r * cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const double xr = x[2 * j], xi = x[2 * j + 1];
      x[2 * j] = dr * xr - di * xi;
      x[2 * j + 1] = dr * xi + di * xr;
    }
  }
}

}  // namespace qsynth::kernels::scalar
