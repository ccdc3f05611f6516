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

// Hot loops behind matrix products and gate application. Each kernel has a
// scalar reference and, on x86-64 builds, an AVX2+FMA variant. The variant is
// picked once at first use from CPUID; QSYNTH_KERNELS=scalar forces the
// reference path.

#include <cstddef>
#include <string_view>

#include "qsynth/mat2.hpp"

namespace qsynth::kernels {

enum class Backend { Scalar, Avx2 };

// c = a * b for n x n row-major matrices. c must not alias a or b.
using GemmFn = void (*)(std::size_t n, const cplx* a, const cplx* b, cplx* c);
// Left-multiply rows of an n-column matrix by a one-qubit gate acting on the
// index bit `bit`: rows r and r|bit (bit clear in r) are mixed by u.
using Apply1qFn = void (*)(cplx* m, std::size_t rows, std::size_t cols,
                           std::size_t bit, const Mat2& u);
// Row r of an n-column matrix is multiplied by d[r].
using ScaleRowsFn = void (*)(cplx* m, std::size_t rows, std::size_t cols,
                             const cplx* d);

struct KernelTable {
  Backend backend;
  GemmFn gemm;
  Apply1qFn apply_1q;
  ScaleRowsFn scale_rows;
};

const KernelTable& active();
const KernelTable& scalar_table();
// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_table();

// Overrides the runtime choice (tests and benchmarks). Falls back to scalar
// if the requested variant is unavailable; returns the backend now active.
Backend select(Backend b);
std::string_view backend_name(Backend b);

// Swaps rows r and r|target for rows with the control bit set. Pure data
// movement, shared by every backend.
void apply_cx(cplx* m, std::size_t rows, std::size_t cols, std::size_t control_bit,
              std::size_t target_bit);

namespace scalar {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void apply_1q(cplx* m, std::size_t rows, std::size_t cols, std::size_t bit,
              const Mat2& u);
void scale_rows(cplx* m, std::size_t rows, std::size_t cols, const cplx* d);
}  // namespace scalar

#ifdef QSYNTH_HAVE_AVX2
namespace avx2 {
void gemm(std::size_t n, const cplx* a, const cplx* b, cplx* c);
void apply_1q(cplx* m, std::size_t rows, std::size_t cols, std::size_t bit,
              const Mat2& u);
void scale_rows(cplx* m, std::size_t rows, std::size_t cols, const cplx* d);
}  // namespace avx2
#endif

}  // namespace qsynth::kernels
