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

#ifndef TENINV_TOLERANCE_HPP
#define TENINV_TOLERANCE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>

namespace teninv {

/// Numerical thresholds that govern every rank and equality decision.
///
/// Fixture tensors carry exact rational entries while computed inverses
/// carry SVD round-off, so equality tests use a mixed absolute/relative
/// bound: |a - b| <= eq_atol + eq_rtol * scale.
struct ToleranceConfig {
  /// Relative singular-value cutoff for rank decisions. A value <= 0
  /// selects the default max(rows, cols) * machine-epsilon at the point
  /// of use.
  double rank_rtol = 0.0;
  /// Absolute entrywise equality threshold.
  double eq_atol = 1e-10;
  /// Relative residual threshold.
  double eq_rtol = 1e-8;

  /// Cutoff factor applied to the largest singular value of a
  /// rows x cols matrix.
  double effective_rank_rtol(std::int64_t rows, std::int64_t cols) const {
    if (rank_rtol > 0.0) return rank_rtol;
    return static_cast<double>(std::max<std::int64_t>({rows, cols, 1})) *
           std::numeric_limits<double>::epsilon();
  }

  /// Mixed absolute/relative equality bound at the given magnitude scale.
  double eq_bound(double scale) const { return eq_atol + eq_rtol * scale; }
};

}  // namespace teninv

#endif  // TENINV_TOLERANCE_HPP
