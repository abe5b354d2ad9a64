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

// Shared test machinery: seeded random constructions with controlled
// conditioning, and a brute-force Einstein-product oracle that is
// independent of the reshape-based implementation path.

#ifndef TENINV_TESTS_SUPPORT_HPP
#define TENINV_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "teninv/inverses.hpp"
#include "teninv/tensor.hpp"

namespace support {

using teninv::Complex;
using teninv::DenseTensor;
using teninv::Matrix;
using teninv::TensorShape;

inline Matrix gaussian(Eigen::Index rows, Eigen::Index cols,
                       std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      m(i, j) = Complex(normal(gen), normal(gen));
  return m;
}

inline Matrix unitary(Eigen::Index n, std::mt19937_64& gen) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(n, n, gen));
  return qr.householderQ() * Matrix::Identity(n, n);
}

// Singular values drawn from [0.5, 1.5] keep every construction here far
// away from the rank cutoff.
inline Eigen::VectorXd mild_spectrum(Eigen::Index r, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.5, 1.5);
  Eigen::VectorXd s(r);
  for (Eigen::Index i = 0; i < r; ++i) s(i) = u(gen);
  return s;
}

// Invertible with condition number at most 3.
inline Matrix well_conditioned(Eigen::Index n, std::mt19937_64& gen) {
  if (n == 0) return Matrix(0, 0);
  return unitary(n, gen) * mild_spectrum(n, gen).asDiagonal() *
         unitary(n, gen);
}

inline double sigma_min(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().minCoeff();
}

inline std::int64_t mode_product(const std::vector<int>& modes) {
  std::int64_t n = 1;
  for (int m : modes) n *= m;
  return n;
}

inline DenseTensor from_matrix(const Matrix& m, const std::vector<int>& modes) {
  return teninv::rsh_inverse(m, TensorShape(modes, modes));
}

inline DenseTensor random_tensor(const TensorShape& shape,
                                 std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> entries(shape.element_count());
  for (Complex& v : entries) v = Complex(normal(gen), normal(gen));
  return DenseTensor(shape, std::move(entries));
}

inline DenseTensor random_square(const std::vector<int>& modes,
                                 std::uint64_t seed) {
  return random_tensor(TensorShape(modes, modes), seed);
}

// Standard-normal square tensor, redrawn while the reshaped condition
// number is large. The battery takes ninth powers through pseudoinverse
// formulas, so the cap must keep cond^9 well inside double precision.
inline DenseTensor random_square_conditioned(const std::vector<int>& modes,
                                             std::uint64_t seed,
                                             double max_cond = 5.0) {
  std::mt19937_64 gen(seed);
  const std::int64_t n = mode_product(modes);
  for (;;) {
    Matrix m = gaussian(n, n, gen);
    Eigen::JacobiSVD<Matrix> svd(m);
    const auto& s = svd.singularValues();
    if (s(0) <= max_cond * s(n - 1)) return from_matrix(m, modes);
  }
}

// Rank-r index-1 tensor built as P * Q from full-rank factors drawn out of
// one well-conditioned similarity, re-checked: Q P must stay invertible
// with margin, which is exactly the index-1 condition for P Q.
inline DenseTensor random_index1(const std::vector<int>& modes, int rank,
                                 std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  for (;;) {
    Matrix w = well_conditioned(n, gen);
    Matrix p = w.leftCols(rank) * well_conditioned(rank, gen);
    Matrix q = w.partialPivLu().solve(Matrix::Identity(n, n)).topRows(rank);
    if (sigma_min(q * p) < 0.2) continue;
    return from_matrix(p * q, modes);
  }
}

// Tensor of exact index k: a k-step shift block padded with an invertible
// block. The shift powers vanish exactly, which pins the index without
// any rank decision near the cutoff.
inline DenseTensor random_index_k(const std::vector<int>& modes, int k,
                                  std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  Matrix b = Matrix::Zero(n, n);
  for (int i = 1; i < k; ++i) b(i, i - 1) = Complex(1.0, 0.0);
  b.bottomRightCorner(n - k, n - k) = well_conditioned(n - k, gen);
  // Couple the blocks so the tensor is not merely block diagonal; the
  // strictly upper-triangular coupling leaves the index intact.
  if (n > k) b.topRightCorner(k, n - k) = 0.5 * gaussian(k, n - k, gen);
  return from_matrix(b, modes);
}

// EP tensor of rank r: an invertible r x r block in a unitary frame, so
// range(A) and range(A*) coincide by construction.
inline DenseTensor random_ep(const std::vector<int>& modes, int rank,
                             std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  Matrix u = unitary(n, gen);
  Matrix b = Matrix::Zero(n, n);
  b.topLeftCorner(rank, rank) = well_conditioned(rank, gen);
  return from_matrix(u * b * u.adjoint(), modes);
}

// Oblique projector X (Y X)^-1 Y: idempotent of rank r, generally not
// Hermitian.
inline DenseTensor random_idempotent(const std::vector<int>& modes, int rank,
                                     std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  for (;;) {
    Matrix x = unitary(n, gen).leftCols(rank);
    Matrix y = unitary(n, gen).topRows(rank);
    Matrix yx = y * x;
    if (sigma_min(yx) < 0.2) continue;
    return from_matrix(
        x * yx.partialPivLu().solve(Matrix::Identity(rank, rank)) * y, modes);
  }
}

// Hermitian tripotent U diag(+-1, 0) U* with at least one -1 when rank
// allows; EP and tripotent but not idempotent.
inline DenseTensor random_tripotent(const std::vector<int>& modes, int rank,
                                    std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  Matrix u = unitary(n, gen);
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
  std::bernoulli_distribution flip(0.5);
  for (int i = 0; i < rank; ++i) d(i) = flip(gen) ? 1.0 : -1.0;
  if (rank >= 2) d(1) = -1.0;
  return from_matrix(u * d.asDiagonal() * u.adjoint(), modes);
}

// Normal partial isometry: unimodular spectrum on the rank support.
inline DenseTensor random_ep_partial_isometry(const std::vector<int>& modes,
                                              int rank, std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  Matrix u = unitary(n, gen);
  Eigen::VectorXcd d = Eigen::VectorXcd::Zero(n);
  for (int i = 0; i < rank; ++i) d(i) = std::polar(1.0, angle(gen));
  return from_matrix(u * d.asDiagonal() * u.adjoint(), modes);
}

// Pair supported on complementary diagonal blocks, so A * B = B * A =
// A* * B = O hold exactly (the cross products only ever multiply stored
// zeros). Each block is invertible or an index-k shift-plus-block.
inline std::pair<DenseTensor, DenseTensor> orthogonal_pair(
    const std::vector<int>& modes, int index_a, int index_b,
    std::uint64_t seed) {
  const std::int64_t n = mode_product(modes);
  std::mt19937_64 gen(seed);
  const std::int64_t n1 = n / 2;
  const std::int64_t n2 = n - n1;
  auto block = [&](std::int64_t size, int index) -> Matrix {
    if (index <= 1) return well_conditioned(size, gen);
    Matrix b = Matrix::Zero(size, size);
    for (int i = 1; i < index; ++i) b(i, i - 1) = Complex(1.0, 0.0);
    b.bottomRightCorner(size - index, size - index) =
        well_conditioned(size - index, gen);
    return b;
  };
  Matrix ma = Matrix::Zero(n, n);
  Matrix mb = Matrix::Zero(n, n);
  ma.topLeftCorner(n1, n1) = block(n1, index_a);
  mb.bottomRightCorner(n2, n2) = block(n2, index_b);
  return {from_matrix(ma, modes), from_matrix(mb, modes)};
}

// Direct index-expansion Einstein product. Strides are derived from first
// principles here so the contraction algebra is checked against the
// reshape-based implementation rather than through it.
inline DenseTensor brute_einstein_product(const DenseTensor& a,
                                          const DenseTensor& b) {
  const std::vector<int>& left = a.shape().left_modes();
  const std::vector<int>& shared = a.shape().right_modes();
  const std::vector<int>& right = b.shape().right_modes();

  auto advance = [](std::vector<int>& idx, const std::vector<int>& modes) {
    for (std::size_t m = 0; m < modes.size(); ++m) {
      if (++idx[m] < modes[m]) return true;
      idx[m] = 0;
    }
    return false;
  };
  auto linear = [](const std::vector<int>& idx, const std::vector<int>& modes) {
    std::int64_t offset = 0;
    std::int64_t stride = 1;
    for (std::size_t m = 0; m < modes.size(); ++m) {
      offset += stride * idx[m];
      stride *= modes[m];
    }
    return offset;
  };

  TensorShape shape(left, right);
  std::vector<Complex> out(shape.element_count(), Complex{});
  const std::int64_t a_rows = mode_product(left);
  const std::int64_t b_rows = mode_product(shared);

  std::vector<int> i_idx(left.size(), 0);
  do {
    std::vector<int> j_idx(right.size(), 0);
    do {
      Complex sum{};
      std::vector<int> k_idx(shared.size(), 0);
      do {
        const std::int64_t a_off =
            linear(i_idx, left) + a_rows * linear(k_idx, shared);
        const std::int64_t b_off =
            linear(k_idx, shared) + b_rows * linear(j_idx, right);
        sum += a.entries()[a_off] * b.entries()[b_off];
      } while (advance(k_idx, shared));
      out[linear(i_idx, left) + a_rows * linear(j_idx, right)] = sum;
    } while (advance(j_idx, right));
  } while (advance(i_idx, left));
  return DenseTensor(std::move(shape), std::move(out));
}

// Largest entrywise difference; shapes must agree.
inline double tensor_diff(const DenseTensor& a, const DenseTensor& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

// Relative closeness at the given tolerance, with scale floored at one.
inline bool close(const DenseTensor& a, const DenseTensor& b, double rel) {
  const double scale =
      std::max(1.0, std::max(teninv::max_abs(a), teninv::max_abs(b)));
  return tensor_diff(a, b) <= rel * scale;
}

}  // namespace support

#endif  // TENINV_TESTS_SUPPORT_HPP
