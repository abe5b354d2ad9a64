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

// The inverse-theory battery: every identity the core and core-EP
// characterizations promise, run against one tensor (or one constructed
// family). Shared between the property tests and the acceptance suite.

#ifndef TENINV_TESTS_INVARIANTS_HPP
#define TENINV_TESTS_INVARIANTS_HPP

#include <string>
#include <vector>

#include "support.hpp"
#include "teninv/verify.hpp"

namespace support {

struct BatteryResult {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

using namespace teninv;

// Identities that hold for every square tensor, whatever its index.
inline void check_core_ep_battery(const DenseTensor& a,
                                  const ToleranceConfig& tol, double rel,
                                  BatteryResult& out) {
  const IndexInfo info = index_search(a, tol);
  const int k = info.index;
  const DenseTensor x = core_ep_inverse(a, tol).value;

  // Uniqueness across the three construction variants.
  const DenseTensor x_drazin =
      core_ep_inverse(a, tol, CoreEpFormula::DrazinMP).value;
  const DenseTensor x_power =
      core_ep_inverse(a, tol, CoreEpFormula::PowerCore).value;
  out.expect(close(x, x_drazin, rel), "core-EP variants: drazin_mp");
  out.expect(close(x, x_power, rel), "core-EP variants: power_core");

  // Defining equations.
  AxiomReport report = check(a, x, k, tol);
  out.expect(report.residuals.at(AxiomTag::EP) <= rel, "core-EP: EP tag");
  out.expect(report.residuals.at(AxiomTag::C2) <= rel, "core-EP: C2 tag");
  out.expect(report.residuals.at(AxiomTag::T3) <= rel, "core-EP: 3T tag");

  const DenseTensor drazin = drazin_inverse(a, tol).value;
  const DenseTensor ax = einstein_product(a, x);

  // Power identities for exponents at and above the index.
  for (int m : {k, k + 1}) {
    const DenseTensor am = tensor_power(a, m);
    const DenseTensor xm = tensor_power(x, m);
    const DenseTensor am_xm = einstein_product(am, xm);
    out.expect(close(ax, am_xm, rel), "A*X == A^m*X^m");
    out.expect(close(einstein_product(einstein_product(x, a), x), x, rel),
               "X*A*X == X");
    out.expect(close(einstein_product(am_xm, am), am, rel),
               "A^m*X^m*A^m == A^m");
    out.expect(close(einstein_product(tensor_power(x, m + 1), am), drazin, rel),
               "X^(m+1)*A^m == A^D");
    // A * coreEP(A) equals the projector A^l * (A^l)+.
    const DenseTensor am_pinv = moore_penrose(am, tol).value;
    out.expect(close(ax, einstein_product(am, am_pinv), rel),
               "A*X == A^l*(A^l)+");
  }

  // Core-EP through the core inverse of the index power.
  const DenseTensor ak = tensor_power(a, k);
  const DenseTensor core_ak = core_inverse(ak, tol).value;
  out.expect(close(tensor_power(x, k), core_ak, rel), "X^k == core(A^k)");
  out.expect(close(x, einstein_product(tensor_power(a, k - 1), core_ak), rel),
             "X == A^(k-1)*core(A^k)");

  // Commuting with powers of the argument.
  for (int j : {1, 2, 3}) {
    const DenseTensor aj = tensor_power(a, j);
    const DenseTensor coreep_aj = core_ep_inverse(aj, tol).value;
    out.expect(close(coreep_aj, tensor_power(x, j), rel),
               "coreEP(A^j) == coreEP(A)^j");
    out.expect(close(x, einstein_product(tensor_power(a, j - 1), coreep_aj),
                     rel),
               "X == A^(j-1)*coreEP(A^j)");
  }

  // Core-EP of the core-EP, and the triple application.
  const DenseTensor a2x = einstein_product(tensor_power(a, 2), x);
  const DenseTensor coreep_x = core_ep_inverse(x, tol).value;
  out.expect(close(coreep_x, a2x, rel), "coreEP(coreEP(A)) == A^2*coreEP(A)");
  out.expect(close(core_inverse(x, tol).value, a2x, rel),
             "core(coreEP(A)) == A^2*coreEP(A)");
  out.expect(close(core_ep_inverse(coreep_x, tol).value, x, rel),
             "triple core-EP application");

  // Drazin and Moore-Penrose defining tags.
  AxiomReport dz = check(a, drazin, k, tol);
  out.expect(dz.residuals.at(AxiomTag::T1k) <= rel, "drazin: 1kT tag");
  out.expect(dz.residuals.at(AxiomTag::T2) <= rel, "drazin: 2T tag");
  out.expect(dz.residuals.at(AxiomTag::T5) <= rel, "drazin: 5T tag");

  AxiomReport mp = check(a, moore_penrose(a, tol).value, k, tol);
  for (AxiomTag t : {AxiomTag::T1, AxiomTag::T2, AxiomTag::T3, AxiomTag::T4})
    out.expect(mp.residuals.at(t) <= rel, "moore-penrose tag");
}

// Identities specific to index-1 (core) tensors.
inline void check_core_battery(const DenseTensor& a, const ToleranceConfig& tol,
                               double rel, BatteryResult& out) {
  const DenseTensor x = core_inverse(a, tol).value;

  // Uniqueness across all five construction variants.
  for (CoreFormula f : {CoreFormula::PinvOfA2Adag, CoreFormula::Frf,
                        CoreFormula::OneThreeBased, CoreFormula::UAstar})
    out.expect(close(x, core_inverse(a, tol, f).value, rel),
               std::string("core variants: ") + formula_name(f));

  // Member of A{1,2,3} and the defining triad; every alternate triad in
  // the characterizations is a subset of these residuals.
  AxiomReport report = check(a, x, 1, tol);
  for (AxiomTag t : {AxiomTag::T1, AxiomTag::T2, AxiomTag::T3, AxiomTag::C1,
                     AxiomTag::C2})
    out.expect(report.residuals.at(t) <= rel, "core: defining residuals");
  out.expect(range_subset(rsh(x), rsh(a), tol), "core: range(X) <= range(A)");

  const DenseTensor pinv = moore_penrose(a, tol).value;
  const DenseTensor group = group_inverse(a, tol).value;
  const DenseTensor a2_adag =
      einstein_product(tensor_power(a, 2), pinv);

  // A^n * core == A^n * pinv for n = 1, 2, 3.
  for (int n : {1, 2, 3}) {
    const DenseTensor an = tensor_power(a, n);
    out.expect(close(einstein_product(an, x), einstein_product(an, pinv), rel),
               "A^n*core == A^n*pinv");
  }

  out.expect(close(moore_penrose(x, tol).value, a2_adag, rel),
             "pinv(core(A)) == A^2*A+");
  out.expect(is_ep(x, tol), "core(A) is EP");
  out.expect(close(core_inverse(x, tol).value, a2_adag, rel),
             "core(core(A)) == A^2*A+");
  out.expect(close(einstein_product(tensor_power(x, 2), a), group, rel),
             "core^2*A == group");
  out.expect(close(einstein_product(x, a), einstein_product(group, a), rel),
             "core*A == group*A");

  // Powers: core(A)^m == core(A^m) and A^m*core(A)^m == A*A+.
  const DenseTensor projector = einstein_product(a, pinv);
  for (int m : {1, 2, 3}) {
    const DenseTensor am = tensor_power(a, m);
    const DenseTensor xm = tensor_power(x, m);
    out.expect(close(xm, core_inverse(am, tol).value, rel),
               "core(A)^m == core(A^m)");
    out.expect(close(einstein_product(am, xm), projector, rel),
               "A^m*core^m == A*A+");
  }

  // Index-1 reductions.
  out.expect(close(core_ep_inverse(a, tol).value, x, rel),
             "core-EP == core at index 1");
  out.expect(close(drazin_inverse(a, tol).value, group, rel),
             "drazin == group at index 1");
}

// EP, idempotent, tripotent and partial-isometry families and the
// equivalences they witness.
inline void check_constructed_classes(const std::vector<int>& modes,
                                      std::uint64_t seed,
                                      const ToleranceConfig& tol, double rel,
                                      BatteryResult& out) {
  const auto n = mode_product(modes);
  const int rank = 1 + static_cast<int>(seed % n);

  {
    const DenseTensor a = random_ep(modes, rank, seed);
    out.expect(is_ep(a, tol), "constructed EP tensor is EP");
    const DenseTensor core = core_inverse(a, tol).value;
    const DenseTensor pinv = moore_penrose(a, tol).value;
    const DenseTensor group = group_inverse(a, tol).value;
    out.expect(close(core, pinv, rel), "EP: core == pinv");
    out.expect(close(core, group, rel), "EP: core == group");
    out.expect(close(core_inverse(core, tol).value, a, rel),
               "EP: core(core(A)) == A");
    out.expect(close(einstein_product(core, a), einstein_product(a, core), rel),
               "EP: core*A == A*core");
    out.expect(close(core_inverse(pinv, tol).value, a, rel),
               "EP: core(pinv(A)) == A");
    out.expect(close(moore_penrose(core, tol).value, a, rel),
               "EP: pinv(core(A)) == A");
  }
  {
    const DenseTensor a = random_idempotent(modes, rank, seed + 1);
    out.expect(is_idempotent(a, tol), "constructed idempotent is idempotent");
    const DenseTensor pinv = moore_penrose(a, tol).value;
    out.expect(close(core_inverse(a, tol).value, einstein_product(a, pinv),
                     rel),
               "idempotent: core == A*A+");
  }
  {
    const DenseTensor a = random_tripotent(modes, rank, seed + 2);
    out.expect(is_tripotent(a, tol) && is_ep(a, tol),
               "constructed tripotent is EP and tripotent");
    out.expect(close(core_inverse(a, tol).value, a, rel),
               "EP tripotent: core == A");
  }
  {
    const DenseTensor a = random_ep_partial_isometry(modes, rank, seed + 3);
    out.expect(is_partial_isometry(a, tol) && is_ep(a, tol),
               "constructed partial isometry is EP");
    out.expect(close(core_inverse(a, tol).value, conj_transpose(a), rel),
               "EP partial isometry: core == A*");
  }
  {
    // Classifier direction: commuting with its core inverse forces EP.
    const DenseTensor a = random_index1(modes, rank, seed + 4);
    const DenseTensor core = core_inverse(a, tol).value;
    if (close(einstein_product(core, a), einstein_product(a, core), rel))
      out.expect(is_ep(a, tol), "commuting core inverse implies EP");
    else
      out.expect(true, "commuting core inverse implies EP (vacuous)");
  }
}

// Additive formulas on pairs supported by complementary orthogonal blocks.
inline void check_sum_formulas(const std::vector<int>& modes,
                               std::uint64_t seed, const ToleranceConfig& tol,
                               double rel, BatteryResult& out) {
  {
    auto [a, b] = orthogonal_pair(modes, 1, 1, seed);
    const DenseTensor direct = core_inverse(add(a, b), tol).value;
    const InverseResult by_formula = core_inverse_of_sum(a, b, tol);
    out.expect(close(by_formula.value, direct, rel), "core sum formula");
    out.expect(classify(add(a, b), by_formula.value, tol).count("core") == 1,
               "core sum classifies as core");

    // Group analogue: (A+B)^# = (I - B B^#) A^# + B^# (I - A A^#).
    const DenseTensor ga = group_inverse(a, tol).value;
    const DenseTensor gb = group_inverse(b, tol).value;
    const DenseTensor id = identity_tensor(modes);
    const DenseTensor lhs = group_inverse(add(a, b), tol).value;
    const DenseTensor rhs =
        add(einstein_product(
                add(id, scale(einstein_product(b, gb), Complex{-1, 0})), ga),
            einstein_product(
                gb, add(id, scale(einstein_product(a, ga), Complex{-1, 0}))));
    out.expect(close(lhs, rhs, rel), "group sum formula");

    const DenseTensor dz = drazin_of_sum(a, b, tol).value;
    out.expect(close(dz, drazin_inverse(add(a, b), tol).value, rel),
               "drazin sum formula (index 1)");
  }
  if (mode_product(modes) >= 4) {
    auto [a, b] = orthogonal_pair(modes, 2, 1, seed + 1);
    const DenseTensor direct = core_ep_inverse(add(a, b), tol).value;
    const InverseResult by_formula = core_ep_of_sum(a, b, tol);
    out.expect(close(by_formula.value, direct, rel), "core-EP sum formula");
    out.expect(
        classify(add(a, b), by_formula.value, tol).count("core_ep") == 1,
        "core-EP sum classifies as core_ep");
    const InverseResult dz = drazin_of_sum(a, b, tol);
    out.expect(close(dz.value, drazin_inverse(add(a, b), tol).value, rel),
               "drazin sum formula (mixed index)");
    out.expect(classify(add(a, b), dz.value, tol).count("drazin") == 1,
               "drazin sum classifies as drazin");
  }
  {
    // B = O degenerates every sum formula to the plain inverse.
    const auto n = mode_product(modes);
    const DenseTensor a = random_index1(modes, 1 + static_cast<int>(seed % n),
                                        seed + 2);
    const DenseTensor zero = zero_tensor(a.shape());
    out.expect(close(core_inverse_of_sum(a, zero, tol).value,
                     core_inverse(a, tol).value, rel),
               "core sum with zero");
    out.expect(close(drazin_of_sum(a, zero, tol).value,
                     drazin_inverse(a, tol).value, rel),
               "drazin sum with zero");
    out.expect(close(core_ep_of_sum(a, zero, tol).value,
                     core_ep_inverse(a, tol).value, rel),
               "core-EP sum with zero");
  }
}

}  // namespace support

#endif  // TENINV_TESTS_INVARIANTS_HPP
