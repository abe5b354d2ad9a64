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

#include "teninv/matrix.hpp"

#include <string>

namespace teninv {

namespace {

std::string dims(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

SvdResult svd(const Matrix& a) {
  if (!a.allFinite())
    throw ConvergenceFailure("SVD input (" + dims(a) +
                             ") contains non-finite values");
  Eigen::JacobiSVD<Matrix> dec(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SvdResult result{dec.matrixU(), dec.singularValues(), dec.matrixV()};
  if (!result.s.allFinite() || !result.u.allFinite() || !result.v.allFinite())
    throw ConvergenceFailure("SVD of a " + dims(a) +
                             " matrix produced non-finite values");
  return result;
}

int numerical_rank(const Eigen::VectorXd& s, Eigen::Index rows,
                   Eigen::Index cols, const ToleranceConfig& tol) {
  if (s.size() == 0 || s(0) <= 0.0) return 0;
  const double cutoff = tol.effective_rank_rtol(rows, cols) * s(0);
  int rank = 0;
  while (rank < s.size() && s(rank) > cutoff) ++rank;
  return rank;
}

int matrix_rank(const Matrix& a, const ToleranceConfig& tol) {
  if (a.size() == 0) return 0;
  return numerical_rank(svd(a).s, a.rows(), a.cols(), tol);
}

Matrix pinv_matrix(const Matrix& a, const ToleranceConfig& tol) {
  if (a.size() == 0) return Matrix::Zero(a.cols(), a.rows());
  const SvdResult dec = svd(a);
  const int r = numerical_rank(dec.s, a.rows(), a.cols(), tol);
  Matrix x = Matrix::Zero(a.cols(), a.rows());
  for (int i = 0; i < r; ++i)
    x.noalias() += (1.0 / dec.s(i)) * dec.v.col(i) * dec.u.col(i).adjoint();
  return x;
}

std::pair<Matrix, Matrix> full_rank_factorization(const Matrix& a,
                                                  const ToleranceConfig& tol) {
  const SvdResult dec = svd(a);
  const int r = numerical_rank(dec.s, a.rows(), a.cols(), tol);
  Matrix p = dec.u.leftCols(r) * dec.s.head(r).asDiagonal();
  Matrix q = dec.v.leftCols(r).adjoint();
  return {std::move(p), std::move(q)};
}

bool range_subset(const Matrix& b, const Matrix& a,
                  const ToleranceConfig& tol) {
  if (b.rows() != a.rows())
    throw ShapeMismatch("range_subset: row counts differ (" + dims(b) +
                        " vs " + dims(a) + ")");
  Matrix stacked(a.rows(), a.cols() + b.cols());
  stacked << a, b;
  return matrix_rank(stacked, tol) == matrix_rank(a, tol);
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows())
    throw ShapeMismatch("matmul: " + dims(a) + " times " + dims(b));
  return a * b;
}

Matrix matadd(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeMismatch("matadd: " + dims(a) + " plus " + dims(b));
  return a + b;
}

Matrix matpow(const Matrix& a, int m) {
  if (a.rows() != a.cols())
    throw ShapeMismatch("matpow: matrix is " + dims(a) + ", not square");
  if (m < 0) throw Error("matpow: negative exponent");
  Matrix result = Matrix::Identity(a.rows(), a.cols());
  for (int i = 0; i < m; ++i) result = result * a;
  return result;
}

Matrix conj_transpose(const Matrix& a) { return a.adjoint(); }

double max_abs(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

}  // namespace teninv
