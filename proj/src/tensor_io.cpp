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

#include "teninv/tensor_io.hpp"

#include <cmath>
#include <fstream>

namespace teninv {

namespace {

using nlohmann::json;

std::vector<int> modes_from_json(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw ParseError(std::string("tensor file: missing array \"") + key + "\"");
  std::vector<int> modes;
  for (const auto& v : j.at(key)) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 1)
      throw ParseError(std::string("tensor file: \"") + key +
                       "\" must hold positive integers");
    modes.push_back(v.get<int>());
  }
  return modes;
}

std::vector<double> reals_from_json(const json& j, const char* key,
                                    std::size_t expected) {
  if (!j.contains(key)) return std::vector<double>(expected, 0.0);
  const auto& arr = j.at(key);
  if (!arr.is_array())
    throw ParseError(std::string("tensor file: \"") + key +
                     "\" must be an array");
  if (arr.size() != expected)
    throw ParseError(std::string("tensor file: \"") + key + "\" has " +
                     std::to_string(arr.size()) + " entries, shape needs " +
                     std::to_string(expected));
  std::vector<double> values;
  values.reserve(expected);
  for (const auto& v : arr) {
    if (!v.is_number())
      throw ParseError(std::string("tensor file: \"") + key +
                       "\" must hold numbers");
    values.push_back(v.get<double>());
  }
  return values;
}

}  // namespace

json tensor_to_json(const DenseTensor& t) {
  json j;
  j["left_modes"] = t.shape().left_modes();
  j["right_modes"] = t.shape().right_modes();
  std::vector<double> re(t.entries().size());
  std::vector<double> im(t.entries().size());
  bool any_imag = false;
  for (std::size_t i = 0; i < t.entries().size(); ++i) {
    re[i] = t.entries()[i].real();
    im[i] = t.entries()[i].imag();
    any_imag = any_imag || im[i] != 0.0;
  }
  j["real"] = re;
  if (any_imag) j["imag"] = im;
  j["order"] = "col-major";
  return j;
}

DenseTensor tensor_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("tensor file: not a JSON object");
  if (j.contains("order") &&
      (!j.at("order").is_string() || j.at("order") != "col-major"))
    throw ParseError("tensor file: unsupported \"order\" (want \"col-major\")");
  std::vector<int> left = modes_from_json(j, "left_modes");
  std::vector<int> right = modes_from_json(j, "right_modes");
  TensorShape shape = [&] {
    try {
      return TensorShape(std::move(left), std::move(right));
    } catch (const Error& e) {
      throw ParseError(std::string("tensor file: ") + e.what());
    }
  }();
  const auto expected = static_cast<std::size_t>(shape.element_count());
  if (!j.contains("real"))
    throw ParseError("tensor file: missing array \"real\"");
  std::vector<double> re = reals_from_json(j, "real", expected);
  std::vector<double> im = reals_from_json(j, "imag", expected);
  std::vector<Complex> entries(expected);
  for (std::size_t i = 0; i < expected; ++i) entries[i] = Complex(re[i], im[i]);
  try {
    return DenseTensor(std::move(shape), std::move(entries));
  } catch (const Error& e) {
    throw ParseError(std::string("tensor file: ") + e.what());
  }
}

void save_tensor(const DenseTensor& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << tensor_to_json(t).dump(2) << "\n";
  if (!out) throw ParseError("write to " + path + " failed");
}

DenseTensor load_tensor(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return tensor_from_json(j);
}

json axiom_report_to_json(const AxiomReport& report) {
  json residuals = json::object();
  json satisfied = json::object();
  for (const auto& [tag, value] : report.residuals)
    residuals[tag_name(tag)] = value;
  for (const auto& [tag, value] : report.satisfied)
    satisfied[tag_name(tag)] = value;
  json j;
  j["residuals"] = residuals;
  j["satisfied"] = satisfied;
  if (report.index_k) j["index_k"] = *report.index_k;
  return j;
}

}  // namespace teninv
