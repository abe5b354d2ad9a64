/*
 * Copyright 2026 the teninv authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "teninv/tensor.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace teninv {

namespace {

std::string mode_string(const std::vector<int>& modes) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < modes.size(); ++i)
    out << (i ? "," : "") << modes[i];
  out << "]";
  return out.str();
}

std::string shape_string(const TensorShape& s) {
  return mode_string(s.left_modes()) + "x" + mode_string(s.right_modes());
}

using MatrixMap = Eigen::Map<const Matrix>;

MatrixMap as_matrix(const DenseTensor& t) {
  return MatrixMap(t.entries().data(), t.shape().left_count(),
                   t.shape().right_count());
}

}  // namespace

TensorShape::TensorShape(std::vector<int> left_modes,
                         std::vector<int> right_modes)
    : left_modes_(std::move(left_modes)), right_modes_(std::move(right_modes)) {
  if (left_modes_.empty() || right_modes_.empty())
    throw Error("TensorShape: mode lists must be nonempty");
  left_count_ = 1;
  for (int m : left_modes_) {
    if (m < 1) throw Error("TensorShape: mode extents must be positive");
    left_count_ *= m;
  }
  right_count_ = 1;
  for (int m : right_modes_) {
    if (m < 1) throw Error("TensorShape: mode extents must be positive");
    right_count_ *= m;
  }
}

DenseTensor::DenseTensor(TensorShape shape, std::vector<Complex> entries)
    : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (static_cast<std::int64_t>(entries_.size()) != shape_.element_count())
    throw ShapeMismatch("DenseTensor: " + std::to_string(entries_.size()) +
                        " entries for shape " + shape_string(shape_) +
                        " (expected " + std::to_string(shape_.element_count()) +
                        ")");
  for (const Complex& v : entries_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error("DenseTensor: entries must be finite");
}

Complex DenseTensor::at(std::span<const int> left_index,
                        std::span<const int> right_index) const {
  const auto& left = shape_.left_modes();
  const auto& right = shape_.right_modes();
  if (left_index.size() != left.size() || right_index.size() != right.size())
    throw ShapeMismatch("DenseTensor::at: index order mismatch");
  std::int64_t offset = 0;
  std::int64_t stride = 1;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left_index[i] < 0 || left_index[i] >= left[i])
      throw Error("DenseTensor::at: left index out of range");
    offset += stride * left_index[i];
    stride *= left[i];
  }
  for (std::size_t i = 0; i < right.size(); ++i) {
    if (right_index[i] < 0 || right_index[i] >= right[i])
      throw Error("DenseTensor::at: right index out of range");
    offset += stride * right_index[i];
    stride *= right[i];
  }
  return entries_[static_cast<std::size_t>(offset)];
}

DenseTensor zero_tensor(const TensorShape& shape) {
  return DenseTensor(shape,
                     std::vector<Complex>(shape.element_count(), Complex{}));
}

DenseTensor identity_tensor(const std::vector<int>& modes) {
  TensorShape shape(modes, modes);
  const std::int64_t n = shape.left_count();
  std::vector<Complex> entries(n * n, Complex{});
  for (std::int64_t i = 0; i < n; ++i) entries[i + n * i] = Complex{1.0, 0.0};
  return DenseTensor(std::move(shape), std::move(entries));
}

DenseTensor einstein_product(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape().right_modes() != b.shape().left_modes())
    throw ShapeMismatch("einstein_product: contraction modes differ, " +
                        shape_string(a.shape()) + " * " +
                        shape_string(b.shape()));
  TensorShape shape(a.shape().left_modes(), b.shape().right_modes());
  std::vector<Complex> entries(shape.element_count());
  Eigen::Map<Matrix>(entries.data(), shape.left_count(), shape.right_count())
      .noalias() = as_matrix(a) * as_matrix(b);
  return DenseTensor(std::move(shape), std::move(entries));
}

DenseTensor add(const DenseTensor& a, const DenseTensor& b) {
  if (a.shape() != b.shape())
    throw ShapeMismatch("add: shapes differ, " + shape_string(a.shape()) +
                        " vs " + shape_string(b.shape()));
  std::vector<Complex> entries(a.entries());
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += b.entries()[i];
  return DenseTensor(a.shape(), std::move(entries));
}

DenseTensor scale(const DenseTensor& a, Complex c) {
  std::vector<Complex> entries(a.entries());
  for (Complex& v : entries) v *= c;
  return DenseTensor(a.shape(), std::move(entries));
}

DenseTensor conj_transpose(const DenseTensor& a) {
  TensorShape shape = a.shape().swapped();
  std::vector<Complex> entries(shape.element_count());
  Eigen::Map<Matrix>(entries.data(), shape.left_count(), shape.right_count()) =
      as_matrix(a).adjoint();
  return DenseTensor(std::move(shape), std::move(entries));
}

DenseTensor transpose(const DenseTensor& a) {
  TensorShape shape = a.shape().swapped();
  std::vector<Complex> entries(shape.element_count());
  Eigen::Map<Matrix>(entries.data(), shape.left_count(), shape.right_count()) =
      as_matrix(a).transpose();
  return DenseTensor(std::move(shape), std::move(entries));
}

Matrix rsh(const DenseTensor& a) { return as_matrix(a); }

DenseTensor rsh_inverse(const Matrix& m, const TensorShape& shape) {
  if (m.rows() != shape.left_count() || m.cols() != shape.right_count())
    throw ShapeMismatch("rsh_inverse: matrix is " + std::to_string(m.rows()) +
                        "x" + std::to_string(m.cols()) + ", shape " +
                        shape_string(shape) + " needs " +
                        std::to_string(shape.left_count()) + "x" +
                        std::to_string(shape.right_count()));
  std::vector<Complex> entries(m.data(), m.data() + m.size());
  return DenseTensor(shape, std::move(entries));
}

int rshrank(const DenseTensor& a, const ToleranceConfig& tol) {
  return matrix_rank(rsh(a), tol);
}

DenseTensor tensor_power(const DenseTensor& a, int m) {
  if (!a.shape().square())
    throw ShapeMismatch("tensor_power: shape " + shape_string(a.shape()) +
                        " is not square");
  if (m < 0) throw Error("tensor_power: negative exponent");
  DenseTensor result = identity_tensor(a.shape().left_modes());
  for (int i = 0; i < m; ++i) result = einstein_product(result, a);
  return result;
}

bool approx_equal(const DenseTensor& a, const DenseTensor& b,
                  const ToleranceConfig& tol) {
  if (a.shape() != b.shape())
    throw ShapeMismatch("approx_equal: shapes differ, " +
                        shape_string(a.shape()) + " vs " +
                        shape_string(b.shape()));
  double diff = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    diff = std::max(diff, std::abs(a.entries()[i] - b.entries()[i]));
  return diff <= tol.eq_bound(std::max(max_abs(a), max_abs(b)));
}

double max_abs(const DenseTensor& a) {
  double result = 0.0;
  for (const Complex& v : a.entries()) result = std::max(result, std::abs(v));
  return result;
}

}  // namespace teninv
