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

#ifndef TENINV_TENSOR_HPP
#define TENINV_TENSOR_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "teninv/matrix.hpp"

namespace teninv {

/// Shape of an even-order tensor: left mode extents I_1..I_M paired with
/// right mode extents J_1..J_N. The Einstein product contracts the right
/// modes of one operand against the left modes of the other.
class TensorShape {
 public:
  TensorShape(std::vector<int> left_modes, std::vector<int> right_modes);

  const std::vector<int>& left_modes() const { return left_modes_; }
  const std::vector<int>& right_modes() const { return right_modes_; }

  /// Product of the left mode extents (row count of the reshaped matrix).
  std::int64_t left_count() const { return left_count_; }
  /// Product of the right mode extents (column count of the reshaped matrix).
  std::int64_t right_count() const { return right_count_; }
  /// Total number of entries.
  std::int64_t element_count() const { return left_count_ * right_count_; }

  /// Left and right mode lists coincide. Required by every inverse except
  /// the Moore-Penrose one.
  bool square() const { return left_modes_ == right_modes_; }

  /// Shape with left and right mode lists swapped.
  TensorShape swapped() const { return TensorShape(right_modes_, left_modes_); }

  friend bool operator==(const TensorShape&, const TensorShape&) = default;

 private:
  std::vector<int> left_modes_;
  std::vector<int> right_modes_;
  std::int64_t left_count_ = 0;
  std::int64_t right_count_ = 0;
};

/// Dense even-order complex tensor.
///
/// Entries are stored flat in column-major linearization: the first left
/// mode varies fastest, all left modes precede all right modes. Values are
/// immutable after construction; every operation below is a pure function,
/// safe to call concurrently.
class DenseTensor {
 public:
  /// Takes ownership of the entries. The length must match the shape and
  /// every entry must be finite.
  DenseTensor(TensorShape shape, std::vector<Complex> entries);

  const TensorShape& shape() const { return shape_; }
  const std::vector<Complex>& entries() const { return entries_; }

  /// Entry at the given zero-based multi-index.
  Complex at(std::span<const int> left_index,
             std::span<const int> right_index) const;

  std::int64_t element_count() const { return shape_.element_count(); }

 private:
  TensorShape shape_;
  std::vector<Complex> entries_;
};

/// All-zero tensor of the given shape.
DenseTensor zero_tensor(const TensorShape& shape);

/// Unit tensor on the given modes: entries are products of Kronecker
/// deltas, the two-sided unit of the Einstein product.
DenseTensor identity_tensor(const std::vector<int>& modes);

/// Einstein product contracting the right modes of a against the left
/// modes of b; those mode lists must coincide.
DenseTensor einstein_product(const DenseTensor& a, const DenseTensor& b);

/// Entrywise sum of two tensors of identical shape.
DenseTensor add(const DenseTensor& a, const DenseTensor& b);

/// Entrywise scalar multiple.
DenseTensor scale(const DenseTensor& a, Complex c);

/// Conjugate transpose: swaps the mode groups and conjugates entries.
DenseTensor conj_transpose(const DenseTensor& a);

/// Transpose without conjugation.
DenseTensor transpose(const DenseTensor& a);

/// Reshape to the left_count x right_count matrix. With column-major
/// storage on both sides this is a pure relabeling: it turns the Einstein
/// product into the matrix product, bit for bit.
Matrix rsh(const DenseTensor& a);

/// Inverse reshaping; matrix dimensions must match the shape counts.
DenseTensor rsh_inverse(const Matrix& m, const TensorShape& shape);

/// Tensor rank: the numerical rank of the reshaped matrix.
int rshrank(const DenseTensor& a, const ToleranceConfig& tol);

/// m-fold Einstein power of a square tensor, by iterated multiplication;
/// m = 0 gives the identity.
DenseTensor tensor_power(const DenseTensor& a, int m);

/// Entrywise closeness: max |a_i - b_i| <= eq_atol + eq_rtol * max of the
/// two entry magnitudes. Shapes must agree.
bool approx_equal(const DenseTensor& a, const DenseTensor& b,
                  const ToleranceConfig& tol);

/// Largest entry magnitude.
double max_abs(const DenseTensor& a);

}  // namespace teninv

#endif  // TENINV_TENSOR_HPP
