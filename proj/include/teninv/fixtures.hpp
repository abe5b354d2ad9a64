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

#ifndef TENINV_FIXTURES_HPP
#define TENINV_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "teninv/tensor.hpp"

namespace teninv {

/// A bundled worked example: the input tensor(s) under key "a" (and "b"
/// for pairs) plus golden reference values under descriptive keys such as
/// "pinv", "group", "core", "coreep".
struct Fixture {
  std::string name;
  std::vector<std::pair<std::string, DenseTensor>> tensors;

  const DenseTensor& get(const std::string& key) const;
  bool has(const std::string& key) const;
};

const std::vector<std::string>& fixture_names();

/// Fixture by name; throws UnknownFixture.
Fixture fixture(const std::string& name);

}  // namespace teninv

#endif  // TENINV_FIXTURES_HPP
