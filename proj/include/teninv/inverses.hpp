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

#ifndef TENINV_INVERSES_HPP
#define TENINV_INVERSES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teninv/tensor.hpp"

namespace teninv {

enum class InverseKind {
  MoorePenrose,
  Group,
  Drazin,
  Core,
  CoreEP,
  Inner,
  Reflexive,
  OneThree,
};

/// Construction variants for the core inverse. All of them compute the
/// same unique tensor; the non-default ones exist to cross-validate
/// uniqueness.
enum class CoreFormula {
  GroupMP,        // A^# * A * A+
  PinvOfA2Adag,   // (A^2 * A+)+
  Frf,            // P * (P* * A * P)^-1 * P* from A = P * Q
  OneThreeBased,  // A^# * A * X with X a {1,3}-inverse
  UAstar,         // A * (A* * A^2)^(1) * A*
};

/// Construction variants for the core-EP inverse.
enum class CoreEpFormula {
  DrazinMP,   // A^D * A^l * (A^l)+
  PowerPinv,  // A^l * (A^(l+1))+
  PowerCore,  // A^(k-1) * (A^k)^core with k the index
};

const char* formula_name(CoreFormula f);
const char* formula_name(CoreEpFormula f);
const char* kind_name(InverseKind k);

/// A computed inverse together with its provenance: which formula variant
/// produced it, which exponent was used, and the rank sequence observed
/// while the index was determined.
struct InverseResult {
  DenseTensor value;
  InverseKind kind;
  std::string formula;
  std::optional<int> index_used;
  std::vector<int> ranks_of_powers;
};

/// Rank sequence rshrank(A), rshrank(A^2), ... up to stabilization.
struct IndexInfo {
  int index = 0;
  std::vector<int> ranks;
};

/// Smallest k >= 1 with rshrank(A^k) == rshrank(A^(k+1)), found by walking
/// the powers. The search is capped at the reshaped row count, and a rank
/// sequence that increases along the way raises IndexNotFound instead of
/// guessing.
IndexInfo index_search(const DenseTensor& a, const ToleranceConfig& tol);

/// Tensor index of a square tensor.
int tensor_index(const DenseTensor& a, const ToleranceConfig& tol);

/// Moore-Penrose inverse, the unique solution of the four Penrose
/// equations, computed through the reshaped pseudoinverse.
InverseResult moore_penrose(const DenseTensor& a, const ToleranceConfig& tol);

/// Group inverse A * (A^3)+ * A of an index-1 tensor.
/// Throws NotIndexOne when the index exceeds 1.
InverseResult group_inverse(const DenseTensor& a, const ToleranceConfig& tol);

/// Drazin inverse A^l * (A^(2l+1))+ * A^l with l >= index; l defaults to
/// the index. Throws BadExponent when a supplied l is below the index.
InverseResult drazin_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                             std::optional<int> l = std::nullopt);

/// Core inverse of an index-1 tensor. The optional seed draws a randomized
/// witness for the OneThreeBased and UAstar variants; those variants use
/// the Moore-Penrose inverse as the canonical witness when no seed is
/// given.
InverseResult core_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                           CoreFormula formula = CoreFormula::GroupMP,
                           std::optional<std::uint64_t> seed = std::nullopt);

/// Core-EP inverse. l >= index when supplied, defaults to the index. The
/// PowerCore variant always uses the computed index as its power.
InverseResult core_ep_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                              CoreEpFormula formula = CoreEpFormula::PowerPinv,
                              std::optional<int> l = std::nullopt);

/// A member of A{1,3}: the Moore-Penrose inverse when no seed is given,
/// otherwise A+ + (I - A+ * A) * W with W drawn from the seed.
DenseTensor one_three_inverse(const DenseTensor& a, const ToleranceConfig& tol,
                              std::optional<std::uint64_t> seed = std::nullopt);

/// Residuals of the orthogonality hypotheses for a pair (a, b), each
/// normalized by the product of the operand magnitudes.
SumHypotheses sum_hypotheses(const DenseTensor& a, const DenseTensor& b);

/// Core inverse of a + b by the additive formula
/// (I - B * B^core) * A^core + B^core, valid when A * B = O and
/// A* * B = O. Violated hypotheses raise HypothesisViolated with the
/// measured residuals.
InverseResult core_inverse_of_sum(const DenseTensor& a, const DenseTensor& b,
                                  const ToleranceConfig& tol);

/// Drazin inverse of a + b as A^D + B^D, valid when A * B = B * A = O.
InverseResult drazin_of_sum(const DenseTensor& a, const DenseTensor& b,
                            const ToleranceConfig& tol);

/// Core-EP inverse of a + b as the sum of the core-EP inverses, valid when
/// A * B = B * A = O and A* * B = O.
InverseResult core_ep_of_sum(const DenseTensor& a, const DenseTensor& b,
                             const ToleranceConfig& tol);

/// A * A+ == A+ * A within tolerance.
bool is_ep(const DenseTensor& a, const ToleranceConfig& tol);

/// A * A* * A == A within tolerance.
bool is_partial_isometry(const DenseTensor& a, const ToleranceConfig& tol);

/// A^2 == A within tolerance.
bool is_idempotent(const DenseTensor& a, const ToleranceConfig& tol);

/// A^3 == A within tolerance.
bool is_tripotent(const DenseTensor& a, const ToleranceConfig& tol);

/// Idempotent and equal to its own conjugate transpose.
bool is_hermitian_idempotent(const DenseTensor& a, const ToleranceConfig& tol);

}  // namespace teninv

#endif  // TENINV_INVERSES_HPP
