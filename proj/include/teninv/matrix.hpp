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

#ifndef TENINV_MATRIX_HPP
#define TENINV_MATRIX_HPP

#include <Eigen/Dense>
#include <complex>
#include <utility>

#include "teninv/errors.hpp"
#include "teninv/tolerance.hpp"

namespace teninv {

using Complex = std::complex<double>;

/// Dense complex matrix, column-major flat storage. Every tensor inverse
/// reduces to operations on this type through the reshaping isomorphism.
using Matrix = Eigen::MatrixXcd;

/// Thin singular value decomposition A = U diag(s) V*.
///
/// u is rows x r, v is cols x r, s holds r = min(rows, cols) singular
/// values sorted nonincreasing. U and V have orthonormal columns.
struct SvdResult {
  Matrix u;
  Eigen::VectorXd s;
  Matrix v;
};

/// Thin SVD. Throws ConvergenceFailure if the decomposition comes back
/// non-finite.
SvdResult svd(const Matrix& a);

/// Number of singular values above the relative cutoff
/// effective_rank_rtol(rows, cols) * s(0); zero when s(0) == 0.
/// s must be nonincreasing.
int numerical_rank(const Eigen::VectorXd& s, Eigen::Index rows,
                   Eigen::Index cols, const ToleranceConfig& tol);

/// Numerical rank of a matrix under tol.
int matrix_rank(const Matrix& a, const ToleranceConfig& tol);

/// Moore-Penrose pseudoinverse V diag(1/s_i) U* over the retained
/// singular values.
Matrix pinv_matrix(const Matrix& a, const ToleranceConfig& tol);

/// Full-rank factorization A = P * Q with P of full column rank r and Q of
/// full row rank r, r = numerical rank of A, taken from the rank-truncated
/// SVD: P = U_r diag(s_r), Q = V_r*.
std::pair<Matrix, Matrix> full_rank_factorization(const Matrix& a,
                                                  const ToleranceConfig& tol);

/// Column-space inclusion range(b) <= range(a), decided by the rank test
/// rank([a b]) == rank(a). Operands must have the same row count.
bool range_subset(const Matrix& b, const Matrix& a, const ToleranceConfig& tol);

/// Matrix product with an explicit shape check.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Entrywise sum with an explicit shape check.
Matrix matadd(const Matrix& a, const Matrix& b);

/// m-fold product of a square matrix; m = 0 gives the identity.
Matrix matpow(const Matrix& a, int m);

/// Conjugate transpose.
Matrix conj_transpose(const Matrix& a);

/// Largest entry magnitude; zero for empty matrices.
double max_abs(const Matrix& a);

}  // namespace teninv

#endif  // TENINV_MATRIX_HPP
