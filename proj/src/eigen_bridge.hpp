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

// Conversions between ComplexMatrix and Eigen. Not installed.

#include <Eigen/Dense>

#include "qsynth/complex_matrix.hpp"

namespace qsynth::detail {

using EMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using RowMap =
    Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using MutRowMap =
    Eigen::Map<Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

inline EMat to_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  return RowMap(m.data(), n, n);
}

inline ComplexMatrix from_eigen(const EMat& e) {
  ComplexMatrix out(static_cast<std::size_t>(e.rows()));
  MutRowMap(out.data(), e.rows(), e.cols()) = e;
  return out;
}

}  // namespace qsynth::detail
