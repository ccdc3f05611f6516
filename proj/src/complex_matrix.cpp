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

#include "qsynth/complex_matrix.hpp"

#include <cmath>

#include "qsynth/errors.hpp"
#include "qsynth/kernels.hpp"

namespace qsynth {

double frobenius_distance(const Mat2& a, const Mat2& b) {
  double s = 0.0;
  for (int i = 0; i < 4; ++i) s += std::norm(a.m[i] - b.m[i]);
  return std::sqrt(s);
}

double phase_invariant_distance(const Mat2& a, const Mat2& b) {
  cplx t = 0.0;
  for (int i = 0; i < 4; ++i) t += std::conj(b.m[i]) * a.m[i];
  const cplx phase = std::abs(t) > 0.0 ? t / std::abs(t) : cplx(1.0);
  return frobenius_distance(a, phase * b);
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
  if (dim == 0) throw DimensionError("matrix dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : ComplexMatrix(from_rows(std::vector<std::vector<cplx>>(rows.begin(), rows.end()))) {}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<cplx>>& rows) {
  ComplexMatrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      throw DimensionError("matrix is not square: row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) + " entries, expected " +
                           std::to_string(rows.size()));
    }
    for (std::size_t c = 0; c < rows.size(); ++c) out(r, c) = rows[r][c];
  }
  return out;
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix out(dim);
  for (std::size_t i = 0; i < dim; ++i) out(i, i) = 1.0;
  return out;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> d) {
  ComplexMatrix out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out(i, i) = d[i];
  return out;
}

ComplexMatrix ComplexMatrix::from_mat2(const Mat2& m) {
  ComplexMatrix out(2);
  for (int i = 0; i < 4; ++i) out.data_[i] = m.m[i];
  return out;
}

Mat2 ComplexMatrix::to_mat2() const {
  if (dim_ != 2) throw DimensionError("expected a 2x2 matrix");
  return Mat2(data_[0], data_[1], data_[2], data_[3]);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t size) const {
  if (r0 + size > dim_ || c0 + size > dim_) throw DimensionError("block out of range");
  ComplexMatrix out(size);
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.dim_ > dim_ || c0 + b.dim_ > dim_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.dim_; ++r)
    for (std::size_t c = 0; c < b.dim_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionError("dimension mismatch in sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (o.dim_ != dim_) throw DimensionError("dimension mismatch in difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw DimensionError("dimension mismatch in product");
  ComplexMatrix c(a.dim_);
  kernels::active().gemm(a.dim_, a.data(), b.data(), c.data());
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  ComplexMatrix out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out(i * m + k, j * m + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.dim() + b.dim());
  out.set_block(0, 0, a);
  out.set_block(a.dim(), a.dim(), b);
  return out;
}

}  // namespace qsynth
