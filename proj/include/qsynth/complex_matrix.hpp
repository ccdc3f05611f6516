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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qsynth/mat2.hpp"

namespace qsynth {

// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  // Zero matrix of the given dimension. Throws DimensionError if dim == 0.
  explicit ComplexMatrix(std::size_t dim);
  // Throws DimensionError unless rows form a non-empty square.
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix from_rows(const std::vector<std::vector<cplx>>& rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const cplx> d);
  static ComplexMatrix from_mat2(const Mat2& m);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  cplx trace() const;
  double frobenius_norm() const;

  // Square sub-block of size `size` starting at (r0, c0).
  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t size) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);

  Mat2 to_mat2() const;

  ComplexMatrix& operator*=(cplx s);
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qsynth
