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

#include <atomic>
#include <cstdlib>
#include <string>
#include <utility>

#include "qsynth/kernels.hpp"

namespace qsynth::kernels {
namespace {

const KernelTable kScalar{Backend::Scalar, &scalar::gemm, &scalar::apply_1q,
                          &scalar::scale_rows};

#ifdef QSYNTH_HAVE_AVX2
const KernelTable kAvx2{Backend::Avx2, &avx2::gemm, &avx2::apply_1q,
                        &avx2::scale_rows};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

const KernelTable* initial_choice() {
  const char* env = std::getenv("QSYNTH_KERNELS");
  if (env != nullptr && std::string(env) == "scalar") return &kScalar;
  const KernelTable* v = avx2_table();
  return v != nullptr ? v : &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_choice()};
  return table;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#ifdef QSYNTH_HAVE_AVX2
  static const bool ok = cpu_has_avx2();
  return ok ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Backend select(Backend b) {
  const KernelTable* t = &kScalar;
  if (b == Backend::Avx2 && avx2_table() != nullptr) t = avx2_table();
  current().store(t, std::memory_order_release);
  return t->backend;
}

std::string_view backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

void apply_cx(cplx* m, std::size_t rows, std::size_t cols, std::size_t control_bit,
              std::size_t target_bit) {
  for (std::size_t r = 0; r < rows; ++r) {
    if (!(r & control_bit) || (r & target_bit)) continue;
    cplx* x = m + r * cols;
    cplx* y = m + (r | target_bit) * cols;
    for (std::size_t j = 0; j < cols; ++j) std::swap(x[j], y[j]);
  }
}

}  // namespace qsynth::kernels
