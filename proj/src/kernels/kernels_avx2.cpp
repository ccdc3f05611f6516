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

#include <immintrin.h>

#include "qsynth/kernels.hpp"

namespace qsynth::kernels::avx2 {
namespace {

// A __m256d holds two complex numbers as [re0, im0, re1, im1].

inline __m256d cmul(__m256d ar, __m256d ai, __m256d x) {
  const __m256d xs = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xs));
}

inline cplx cmul_scalar(cplx a, cplx b) {
  return {a.real() * b.real() - a.imag() * b.imag(),
          a.real() * b.imag() + a.imag() * b.real()};
}

}  // namespace

void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = 0.0;
  const std::size_t vec_end = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = reinterpret_cast<const double*>(b + k * n);
      std::size_t j = 0;
      for (; j < vec_end; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        cv = _mm256_add_pd(cv, cmul(ar, ai, bv));
        _mm256_storeu_pd(crow + 2 * j, cv);
      }
      for (; j < n; ++j) c[i * n + j] += cmul_scalar(aik, b[k * n + j]);
    }
  }
}

void apply_1q(cplx* m, std::size_t rows, std::size_t cols, std::size_t bit,
              const Mat2& u) {
  const __m256d u00r = _mm256_set1_pd(u.m[0].real());
  const __m256d u00i = _mm256_set1_pd(u.m[0].imag());
  const __m256d u01r = _mm256_set1_pd(u.m[1].real());
  const __m256d u01i = _mm256_set1_pd(u.m[1].imag());
  const __m256d u10r = _mm256_set1_pd(u.m[2].real());
  const __m256d u10i = _mm256_set1_pd(u.m[2].imag());
  const __m256d u11r = _mm256_set1_pd(u.m[3].real());
  const __m256d u11i = _mm256_set1_pd(u.m[3].imag());
  const std::size_t vec_end = cols & ~std::size_t{1};
  for (std::size_t r = 0; r < rows; ++r) {
    if (r & bit) continue;
    cplx* xrow = m + r * cols;
    cplx* yrow = m + (r | bit) * cols;
    double* x = reinterpret_cast<double*>(xrow);
    double* y = reinterpret_cast<double*>(yrow);
    std::size_t j = 0;
    for (; j < vec_end; j += 2) {
      const __m256d xv = _mm256_loadu_pd(x + 2 * j);
      const __m256d yv = _mm256_loadu_pd(y + 2 * j);
      const __m256d nx =
          _mm256_add_pd(cmul(u00r, u00i, xv), cmul(u01r, u01i, yv));
      const __m256d ny =
          _mm256_add_pd(cmul(u10r, u10i, xv), cmul(u11r, u11i, yv));
      _mm256_storeu_pd(x + 2 * j, nx);
      _mm256_storeu_pd(y + 2 * j, ny);
    }
    for (; j < cols; ++j) {
      const cplx xv = xrow[j], yv = yrow[j];
      xrow[j] = cmul_scalar(u.m[0], xv) + cmul_scalar(u.m[1], yv);
      yrow[j] = cmul_scalar(u.m[2], xv) + cmul_scalar(u.m[3], yv);
    }
  }
}

void scale_rows(cplx* m, std::size_t rows, std::size_t cols, const cplx* d) {
  const std::size_t vec_end = cols & ~std::size_t{1};
  for (std::size_t r = 0; r < rows; ++r) {
    const __m256d dr = _mm256_set1_pd(d[r].real());
    const __m256d di = _mm256_set1_pd(d[r].imag());
    cplx* row = m + r * cols;
    double* x = reinterpret_cast<double*>(row);
    std::size_t j = 0;
    for (; j < vec_end; j += 2) {
      _mm256_storeu_pd(x + 2 * j, cmul(dr, di, _mm256_loadu_pd(x + 2 * j)));
    }
    for (; j < cols; ++j) row[j] = cmul_scalar(d[r], row[j]);
  }
}

}  // namespace qsynth::kernels::avx2
