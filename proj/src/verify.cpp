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

#include "teninv/verify.hpp"

namespace teninv {

const char* tag_name(AxiomTag t) {
  switch (t) {
    case AxiomTag::T1: return "1T";
    case AxiomTag::T2: return "2T";
    case AxiomTag::T3: return "3T";
    case AxiomTag::T4: return "4T";
    case AxiomTag::T5: return "5T";
    case AxiomTag::T1k: return "1kT";
    case AxiomTag::C1: return "C1";
    case AxiomTag::C2: return "C2";
    case AxiomTag::EP: return "EP";
  }
  return "?";
}

std::optional<AxiomTag> tag_from_name(const std::string& name) {
  for (AxiomTag t :
       {AxiomTag::T1, AxiomTag::T2, AxiomTag::T3, AxiomTag::T4, AxiomTag::T5,
        AxiomTag::T1k, AxiomTag::C1, AxiomTag::C2, AxiomTag::EP})
    if (name == tag_name(t)) return t;
  return std::nullopt;
}

bool AxiomReport::ok(AxiomTag t) const {
  auto it = satisfied.find(t);
  return it != satisfied.end() && it->second;
}

namespace {

// Residual of defect versus reference, guarded so zero references never
// divide by zero.
double residual(const Matrix& defect, const Matrix& reference) {
  return max_abs(defect) / std::max(1.0, max_abs(reference));
}

}  // namespace

AxiomReport check(const DenseTensor& a, const DenseTensor& x,
                  std::optional<int> k, const ToleranceConfig& tol) {
  if (a.shape().swapped() != x.shape())
    throw ShapeMismatch(
        "check: candidate shape must be the input shape with mode groups "
        "swapped");

  const Matrix ma = rsh(a);
  const Matrix mx = rsh(x);
  const Matrix ax = ma * mx;
  const Matrix xa = mx * ma;

  AxiomReport report;
  report.residuals[AxiomTag::T1] = residual(ax * ma - ma, ma);
  report.residuals[AxiomTag::T2] = residual(xa * mx - mx, mx);
  report.residuals[AxiomTag::T3] = residual(ax.adjoint() - ax, ax);
  report.residuals[AxiomTag::T4] = residual(xa.adjoint() - xa, xa);

  if (a.shape().square()) {
    const int power = k.value_or(tensor_index(a, tol));
    report.index_k = power;
    const Matrix ak = matpow(ma, power);
    const Matrix ak1 = ak * ma;
    report.residuals[AxiomTag::T5] = residual(ax - xa, ax);
    report.residuals[AxiomTag::T1k] = residual(ak1 * mx - ak, ak);
    report.residuals[AxiomTag::C1] = residual(xa * ma - ma, ma);
    report.residuals[AxiomTag::C2] = residual(ax * mx - mx, mx);
    report.residuals[AxiomTag::EP] = residual(mx * ak1 - ak, ak);
  }

  const double bound = tol.eq_atol + tol.eq_rtol;
  for (const auto& [tag, value] : report.residuals)
    report.satisfied[tag] = value <= bound;
  return report;
}

std::set<std::string> labels_from_report(const AxiomReport& r) {
  std::set<std::string> labels;
  const bool t1 = r.ok(AxiomTag::T1);
  const bool t2 = r.ok(AxiomTag::T2);
  const bool t3 = r.ok(AxiomTag::T3);
  const bool t4 = r.ok(AxiomTag::T4);
  if (t1) labels.insert("{1}");
  if (t1 && t2) labels.insert("{1,2}");
  if (t1 && t3) labels.insert("{1,3}");
  if (t1 && t4) labels.insert("{1,4}");
  if (t1 && t2 && t3) labels.insert("{1,2,3}");
  if (t1 && t2 && t3 && t4) labels.insert("moore_penrose");
  if (r.has(AxiomTag::T5)) {
    const bool t5 = r.ok(AxiomTag::T5);
    if (t1 && t2 && t5) labels.insert("group");
    if (r.ok(AxiomTag::T1k) && t2 && t5) labels.insert("drazin");
    if (r.ok(AxiomTag::C1) && r.ok(AxiomTag::C2) && t3) labels.insert("core");
    if (r.ok(AxiomTag::EP) && r.ok(AxiomTag::C2) && t3)
      labels.insert("core_ep");
  }
  return labels;
}

std::set<std::string> classify(const DenseTensor& a, const DenseTensor& x,
                               const ToleranceConfig& tol) {
  return labels_from_report(check(a, x, std::nullopt, tol));
}

const char* kind_label(InverseKind kind) {
  switch (kind) {
    case InverseKind::MoorePenrose: return "moore_penrose";
    case InverseKind::Group: return "group";
    case InverseKind::Drazin: return "drazin";
    case InverseKind::Core: return "core";
    case InverseKind::CoreEP: return "core_ep";
    case InverseKind::Inner: return "{1}";
    case InverseKind::Reflexive: return "{1,2}";
    case InverseKind::OneThree: return "{1,3}";
  }
  return "?";
}

}  // namespace teninv
