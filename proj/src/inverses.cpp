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

#include "teninv/inverses.hpp"

#include <random>

namespace teninv {

namespace {

void require_square(const DenseTensor& a, const char* op) {
  if (!a.shape().square())
    throw ShapeMismatch(std::string(op) + ": tensor is not square");
}

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols,
                       std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix w(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i)
      w(i, j) = Complex(normal(gen), normal(gen));
  return w;
}

// {1,3}-inverse of m: the pseudoinverse, or the seeded perturbation
// X + (I - X m) W which stays inside m{1,3}.
Matrix one_three_matrix(const Matrix& m, const ToleranceConfig& tol,
                        std::optional<std::uint64_t> seed) {
  Matrix x = pinv_matrix(m, tol);
  if (!seed) return x;
  Matrix w = gaussian_matrix(m.cols(), m.rows(), *seed);
  return x + (Matrix::Identity(m.cols(), m.cols()) - x * m) * w;
}

// Inner ({1}-)inverse of m: the pseudoinverse, or the seeded perturbation
// X + W - X m W m X which still satisfies m Y m = m.
Matrix inner_matrix(const Matrix& m, const ToleranceConfig& tol,
                    std::optional<std::uint64_t> seed) {
  Matrix x = pinv_matrix(m, tol);
  if (!seed) return x;
  Matrix w = gaussian_matrix(m.cols(), m.rows(), *seed);
  return x + w - x * m * w * m * x;
}

Matrix group_matrix(const Matrix& m, const ToleranceConfig& tol) {
  return m * pinv_matrix(matpow(m, 3), tol) * m;
}

Matrix core_matrix(const Matrix& m, const ToleranceConfig& tol,
                   CoreFormula formula, std::optional<std::uint64_t> seed) {
  switch (formula) {
    case CoreFormula::GroupMP:
      return group_matrix(m, tol) * m * pinv_matrix(m, tol);
    case CoreFormula::PinvOfA2Adag:
      return pinv_matrix(matpow(m, 2) * pinv_matrix(m, tol), tol);
    case CoreFormula::Frf: {
      auto [p, q] = full_rank_factorization(m, tol);
      if (p.cols() == 0) return Matrix::Zero(m.rows(), m.cols());
      Matrix inner = p.adjoint() * m * p;
      Matrix solved = inner.fullPivLu().solve(
          Matrix::Identity(inner.rows(), inner.cols()));
      return p * solved * p.adjoint();
    }
    case CoreFormula::OneThreeBased:
      return group_matrix(m, tol) * m * one_three_matrix(m, tol, seed);
    case CoreFormula::UAstar: {
      Matrix mstar_m2 = m.adjoint() * matpow(m, 2);
      return m * inner_matrix(mstar_m2, tol, seed) * m.adjoint();
    }
  }
  throw Error("core_inverse: unknown formula");
}

}  // namespace

const char* formula_name(CoreFormula f) {
  switch (f) {
    case CoreFormula::GroupMP: return "group_mp";
    case CoreFormula::PinvOfA2Adag: return "pinv_a2_adag";
    case CoreFormula::Frf: return "frf";
    case CoreFormula::OneThreeBased: return "one_three";
    case CoreFormula::UAstar: return "u_astar";
  }
  return "unknown";
}

const char* formula_name(CoreEpFormula f) {
  switch (f) {
    case CoreEpFormula::DrazinMP: return "drazin_mp";
    case CoreEpFormula::PowerPinv: return "power_pinv";
    case CoreEpFormula::PowerCore: return "power_core";
  }
  return "unknown";
}

const char* kind_name(InverseKind k) {
  switch (k) {
    case InverseKind::MoorePenrose: return "moore_penrose";
    case InverseKind::Group: return "group";
    case InverseKind::Drazin: return "drazin";
    case InverseKind::Core: return "core";
    case InverseKind::CoreEP: return "core_ep";
    case InverseKind::Inner: return "inner";
    case InverseKind::Reflexive: return "reflexive";
    case InverseKind::OneThree: return "one_three";
  }
  return "unknown";
}

IndexInfo index_search(const DenseTensor& a, const ToleranceConfig& tol) {
  require_square(a, "tensor_index");
  const std::int64_t cap = a.shape().left_count();
  IndexInfo info;
  Matrix m = rsh(a);
  Matrix power = m;
  info.ranks.push_back(matrix_rank(power, tol));
  for (int k = 1; k <= cap; ++k) {
    power = power * m;
    const int next = matrix_rank(power, tol);
    info.ranks.push_back(next);
    if (next > info.ranks[k - 1])
      throw IndexNotFound(
          "tensor_index: rank sequence increased from rshrank(A^" +
          std::to_string(k) + ")=" + std::to_string(info.ranks[k - 1]) +
          " to " + std::to_string(next) + "; rank cutoff is unreliable here");
    if (next == info.ranks[k - 1]) {
      info.index = k;
      return info;
    }
  }
  throw IndexNotFound("tensor_index: rank sequence did not stabilize within " +
                      std::to_string(cap) + " powers");
}

int tensor_index(const DenseTensor& a, const ToleranceConfig& tol) {
  return index_search(a, tol).index;
}

InverseResult moore_penrose(const DenseTensor& a, const ToleranceConfig& tol) {
  DenseTensor value = rsh_inverse(pinv_matrix(rsh(a), tol), a.shape().swapped());
  return {std::move(value), InverseKind::MoorePenrose, "svd_pinv", std::nullopt,
          {}};
}

InverseResult group_inverse(const DenseTensor& a, const ToleranceConfig& tol) {
  require_square(a, "group_inverse");
  IndexInfo info = index_search(a, tol);
  if (info.index != 1)
    throw NotIndexOne("group_inverse: tensor has index " +
                          std::to_string(info.index) + ", group inverse needs 1",
                      info.index);
  DenseTensor value = rsh_inverse(group_matrix(rsh(a), tol), a.shape());
  return {std::move(value), InverseKind::Group, "a_pinv_a3_a", 1,
          std::move(info.ranks)};
}

InverseResult drazin_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                             std::optional<int> l) {
  require_square(a, "drazin_inverse");
  IndexInfo info = index_search(a, tol);
  const int exponent = l.value_or(info.index);
  if (exponent < info.index)
    throw BadExponent("drazin_inverse: exponent " + std::to_string(exponent) +
                      " is below the index " + std::to_string(info.index));
  Matrix m = rsh(a);
  Matrix ml = matpow(m, exponent);
  Matrix value = ml * pinv_matrix(matpow(m, 2 * exponent + 1), tol) * ml;
  return {rsh_inverse(value, a.shape()), InverseKind::Drazin,
          "power_pinv_sandwich", exponent, std::move(info.ranks)};
}

InverseResult core_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                           CoreFormula formula,
                           std::optional<std::uint64_t> seed) {
  require_square(a, "core_inverse");
  IndexInfo info = index_search(a, tol);
  if (info.index != 1)
    throw NotIndexOne("core_inverse: tensor has index " +
                          std::to_string(info.index) +
                          ", the core inverse exists only at index 1",
                      info.index);
  Matrix value = core_matrix(rsh(a), tol, formula, seed);
  return {rsh_inverse(value, a.shape()), InverseKind::Core,
          formula_name(formula), 1, std::move(info.ranks)};
}

InverseResult core_ep_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                              CoreEpFormula formula, std::optional<int> l) {
  require_square(a, "core_ep_inverse");
  IndexInfo info = index_search(a, tol);
  const int k = info.index;
  const int exponent = l.value_or(k);
  if (exponent < k)
    throw BadExponent("core_ep_inverse: exponent " + std::to_string(exponent) +
                      " is below the index " + std::to_string(k));
  Matrix m = rsh(a);
  Matrix value;
  int used = exponent;
  switch (formula) {
    case CoreEpFormula::DrazinMP: {
      Matrix ml = matpow(m, exponent);
      Matrix drazin = ml * pinv_matrix(matpow(m, 2 * exponent + 1), tol) * ml;
      value = drazin * ml * pinv_matrix(ml, tol);
      break;
    }
    case CoreEpFormula::PowerPinv:
      value = matpow(m, exponent) * pinv_matrix(matpow(m, exponent + 1), tol);
      break;
    case CoreEpFormula::PowerCore:
      // A^(k-1) * (A^k)^core is stated for k equal to the index; the
      // supplied l does not apply to this variant.
      value = matpow(m, k - 1) *
              core_matrix(matpow(m, k), tol, CoreFormula::GroupMP, std::nullopt);
      used = k;
      break;
  }
  return {rsh_inverse(value, a.shape()), InverseKind::CoreEP,
          formula_name(formula), used, std::move(info.ranks)};
}

DenseTensor one_three_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                              std::optional<std::uint64_t> seed) {
  return rsh_inverse(one_three_matrix(rsh(a), tol, seed), a.shape().swapped());
}

SumHypotheses sum_hypotheses(const DenseTensor& a, const DenseTensor& b) {
  const double scale = std::max(1.0, max_abs(a) * max_abs(b));
  SumHypotheses h;
  h.ab_zero = max_abs(einstein_product(a, b)) / scale;
  h.astar_b_zero = max_abs(einstein_product(conj_transpose(a), b)) / scale;
  h.ba_zero = max_abs(einstein_product(b, a)) / scale;
  return h;
}

namespace {

void require_sum_operands(const DenseTensor& a, const DenseTensor& b,
                          const char* op) {
  require_square(a, op);
  if (a.shape() != b.shape())
    throw ShapeMismatch(std::string(op) + ": operand shapes differ");
}

void require_hypotheses(const SumHypotheses& h, bool need_ab, bool need_astar_b,
                        bool need_ba, const ToleranceConfig& tol,
                        const char* op) {
  const double bound = tol.eq_atol + tol.eq_rtol;
  std::string violated;
  if (need_ab && h.ab_zero > bound) violated += " A*B != O;";
  if (need_astar_b && h.astar_b_zero > bound) violated += " A^H*B != O;";
  if (need_ba && h.ba_zero > bound) violated += " B*A != O;";
  if (!violated.empty())
    throw HypothesisViolated(std::string(op) + ": hypotheses violated:" +
                                 violated,
                             h);
}

}  // namespace

InverseResult core_inverse_of_sum(const DenseTensor& a, const DenseTensor& b,
                                  const ToleranceConfig& tol) {
  require_sum_operands(a, b, "core_inverse_of_sum");
  SumHypotheses h = sum_hypotheses(a, b);
  require_hypotheses(h, true, true, false, tol, "core_inverse_of_sum");
  InverseResult core_a = core_inverse(a, tol);
  InverseResult core_b = core_inverse(b, tol);
  DenseTensor identity = identity_tensor(a.shape().left_modes());
  DenseTensor projector =
      add(identity, scale(einstein_product(b, core_b.value), Complex{-1.0}));
  DenseTensor value =
      add(einstein_product(projector, core_a.value), core_b.value);
  return {std::move(value), InverseKind::Core, "sum_orthogonal", 1, {}};
}

InverseResult drazin_of_sum(const DenseTensor& a, const DenseTensor& b,
                            const ToleranceConfig& tol) {
  require_sum_operands(a, b, "drazin_of_sum");
  SumHypotheses h = sum_hypotheses(a, b);
  require_hypotheses(h, true, false, true, tol, "drazin_of_sum");
  InverseResult da = drazin_inverse(a, tol);
  InverseResult db = drazin_inverse(b, tol);
  const int used = std::max(da.index_used.value_or(1), db.index_used.value_or(1));
  return {add(da.value, db.value), InverseKind::Drazin, "sum_orthogonal", used,
          {}};
}

InverseResult core_ep_of_sum(const DenseTensor& a, const DenseTensor& b,
                             const ToleranceConfig& tol) {
  require_sum_operands(a, b, "core_ep_of_sum");
  SumHypotheses h = sum_hypotheses(a, b);
  require_hypotheses(h, true, true, true, tol, "core_ep_of_sum");
  InverseResult ea = core_ep_inverse(a, tol);
  InverseResult eb = core_ep_inverse(b, tol);
  const int used = std::max(ea.index_used.value_or(1), eb.index_used.value_or(1));
  return {add(ea.value, eb.value), InverseKind::CoreEP, "sum_orthogonal", used,
          {}};
}

bool is_ep(const DenseTensor& a, const ToleranceConfig& tol) {
  require_square(a, "is_ep");
  Matrix m = rsh(a);
  Matrix x = pinv_matrix(m, tol);
  Matrix mx = m * x;
  const double residual = max_abs(Matrix(mx - x * m)) / std::max(1.0, max_abs(mx));
  return residual <= tol.eq_atol + tol.eq_rtol;
}

bool is_partial_isometry(const DenseTensor& a, const ToleranceConfig& tol) {
  Matrix m = rsh(a);
  const double residual =
      max_abs(Matrix(m * m.adjoint() * m - m)) / std::max(1.0, max_abs(m));
  return residual <= tol.eq_atol + tol.eq_rtol;
}

bool is_idempotent(const DenseTensor& a, const ToleranceConfig& tol) {
  require_square(a, "is_idempotent");
  Matrix m = rsh(a);
  const double residual =
      max_abs(Matrix(m * m - m)) / std::max(1.0, max_abs(m));
  return residual <= tol.eq_atol + tol.eq_rtol;
}

bool is_tripotent(const DenseTensor& a, const ToleranceConfig& tol) {
  require_square(a, "is_tripotent");
  Matrix m = rsh(a);
  const double residual =
      max_abs(Matrix(m * m * m - m)) / std::max(1.0, max_abs(m));
  return residual <= tol.eq_atol + tol.eq_rtol;
}

bool is_hermitian_idempotent(const DenseTensor& a, const ToleranceConfig& tol) {
  return is_idempotent(a, tol) && approx_equal(a, conj_transpose(a), tol);
}

}  // namespace teninv
