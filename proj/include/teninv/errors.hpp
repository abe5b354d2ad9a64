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

#ifndef TENINV_ERRORS_HPP
#define TENINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace teninv {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes are incompatible with the requested operation.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

/// The SVD kernel produced a non-finite result.
class ConvergenceFailure : public Error {
 public:
  explicit ConvergenceFailure(const std::string& what) : Error(what) {}
};

/// An operation that exists only for index-1 tensors was applied to a
/// tensor of higher index.
class NotIndexOne : public Error {
 public:
  NotIndexOne(const std::string& what, int index) : Error(what), index(index) {}
  int index;
};

/// A supplied exponent is below the tensor index.
class BadExponent : public Error {
 public:
  explicit BadExponent(const std::string& what) : Error(what) {}
};

/// The rank sequence of powers did not stabilize within the search bound,
/// which signals numerical pathology near the rank cutoff.
class IndexNotFound : public Error {
 public:
  explicit IndexNotFound(const std::string& what) : Error(what) {}
};

/// Residuals of the orthogonality hypotheses required by the additive
/// formulas for inverses of sums.
struct SumHypotheses {
  double ab_zero = 0.0;
  double astar_b_zero = 0.0;
  double ba_zero = 0.0;
};

/// An additive formula was invoked on a pair that violates its
/// orthogonality hypotheses; carries the measured residuals.
class HypothesisViolated : public Error {
 public:
  HypothesisViolated(const std::string& what, SumHypotheses residuals)
      : Error(what), residuals(residuals) {}
  SumHypotheses residuals;
};

/// Requested bundled fixture does not exist.
class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& what) : Error(what) {}
};

/// A tensor file (or report) failed to parse or validate.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace teninv

#endif  // TENINV_ERRORS_HPP
