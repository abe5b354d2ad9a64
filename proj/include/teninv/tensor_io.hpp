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

#ifndef TENINV_TENSOR_IO_HPP
#define TENINV_TENSOR_IO_HPP

#include <json.hpp>

#include <string>

#include "teninv/tensor.hpp"
#include "teninv/verify.hpp"

namespace teninv {

/// Tensor interchange record:
///   {"left_modes": [...], "right_modes": [...],
///    "real": [...], "imag": [...optional...], "order": "col-major"}
/// Arrays are flat in column-major linearization; "imag" defaults to zero.
/// Parsing rejects length mismatches and any order other than "col-major".
nlohmann::json tensor_to_json(const DenseTensor& t);
DenseTensor tensor_from_json(const nlohmann::json& j);

/// File convenience wrappers; I/O failures raise ParseError.
void save_tensor(const DenseTensor& t, const std::string& path);
DenseTensor load_tensor(const std::string& path);

/// {"residuals": {...}, "satisfied": {...}, "index_k": n}
nlohmann::json axiom_report_to_json(const AxiomReport& report);

}  // namespace teninv

#endif  // TENINV_TENSOR_IO_HPP
