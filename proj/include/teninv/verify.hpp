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

#ifndef TENINV_VERIFY_HPP
#define TENINV_VERIFY_HPP

#include <map>
#include <optional>
#include <set>
#include <string>

#include "teninv/inverses.hpp"
#include "teninv/tensor.hpp"

namespace teninv {

/// Tags of the defining equations a candidate inverse can satisfy.
enum class AxiomTag {
  T1,   // A X A = A
  T2,   // X A X = X
  T3,   // (A X)* = A X
  T4,   // (X A)* = X A
  T5,   // A X = X A
  T1k,  // A^(k+1) X = A^k
  C1,   // X A^2 = A
  C2,   // A X^2 = X
  EP,   // X A^(k+1) = A^k
};

const char* tag_name(AxiomTag t);
std::optional<AxiomTag> tag_from_name(const std::string& name);

/// Per-equation residuals of a candidate inverse x against every defining
/// system. Each residual is the max-norm of the defect divided by
/// max(1, max-norm of the reference side), so zero tensors never divide by
/// zero. Square-only tags are absent (not failed) for rectangular
/// operands.
struct AxiomReport {
  std::map<AxiomTag, double> residuals;
  std::map<AxiomTag, bool> satisfied;
  std::optional<int> index_k;

  bool has(AxiomTag t) const { return residuals.count(t) != 0; }
  bool ok(AxiomTag t) const;
};

/// Evaluates all applicable residuals of x as a candidate inverse of a.
/// k is the power used by the T1k and EP equations; it defaults to the
/// tensor index of a. Rectangular operands get the four Penrose residuals
/// only.
AxiomReport check(const DenseTensor& a, const DenseTensor& x,
                  std::optional<int> k, const ToleranceConfig& tol);

/// Inverse-family labels derivable from an AxiomReport.
std::set<std::string> labels_from_report(const AxiomReport& report);

/// Memberships of x among the inverse families of a:
/// "{1}", "{1,2}", "{1,3}", "{1,4}", "{1,2,3}", "moore_penrose", "group",
/// "drazin", "core", "core_ep".
std::set<std::string> classify(const DenseTensor& a, const DenseTensor& x,
                               const ToleranceConfig& tol);

/// Label a computed InverseResult kind must appear under in classify().
const char* kind_label(InverseKind kind);

}  // namespace teninv

#endif  // TENINV_VERIFY_HPP
