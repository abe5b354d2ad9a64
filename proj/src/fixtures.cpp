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

#include "teninv/fixtures.hpp"

#include <algorithm>

namespace teninv {

namespace {

// A slice is the matrix over the two left modes at one fixed right
// multi-index, written row-major the way the worked examples print them.
struct SliceSpec {
  std::vector<int> right_index;  // one-based, as printed
  double scale;
  std::vector<std::vector<double>> rows;
};

DenseTensor from_slices(const std::vector<int>& left,
                        const std::vector<int>& right,
                        const std::vector<SliceSpec>& slices) {
  TensorShape shape(left, right);
  std::vector<Complex> entries(shape.element_count(), Complex{});
  const std::int64_t rows = left[0];
  for (const SliceSpec& s : slices) {
    std::int64_t right_lin = 0;
    std::int64_t stride = 1;
    for (std::size_t m = 0; m < right.size(); ++m) {
      right_lin += stride * (s.right_index[m] - 1);
      stride *= right[m];
    }
    for (std::size_t i = 0; i < s.rows.size(); ++i)
      for (std::size_t j = 0; j < s.rows[i].size(); ++j)
        entries[static_cast<std::int64_t>(i) + rows * j +
                shape.left_count() * right_lin] = s.scale * s.rows[i][j];
  }
  return DenseTensor(std::move(shape), std::move(entries));
}

// Rank-1 tensor on (2x3)x(2x3) modes whose only nonzero slice sits at
// right index (1,1); its Moore-Penrose, group and core inverses all
// differ, and the group inverse is the tensor itself.
Fixture make_example3_1() {
  const std::vector<int> m23{2, 3};
  DenseTensor a = from_slices(m23, m23,
                              {
                                  {{1, 1}, 1.0, {{1, 6, 2}, {-1, 3, 0}}},
                              });
  DenseTensor pinv = from_slices(
      m23, m23,
      {
          {{1, 1}, 1.0, {{1.0 / 51, 0, 0}, {0, 0, 0}}},
          {{1, 2}, 1.0, {{2.0 / 17, 0, 0}, {0, 0, 0}}},
          {{1, 3}, 1.0, {{2.0 / 51, 0, 0}, {0, 0, 0}}},
          {{2, 1}, 1.0, {{-1.0 / 51, 0, 0}, {0, 0, 0}}},
          {{2, 2}, 1.0, {{1.0 / 17, 0, 0}, {0, 0, 0}}},
      });
  DenseTensor core = from_slices(
      m23, m23,
      {
          {{1, 1}, 1.0, {{1.0 / 51, 2.0 / 17, 2.0 / 51},
                         {-1.0 / 51, 1.0 / 17, 0}}},
          {{1, 2}, 1.0, {{2.0 / 17, 12.0 / 17, 4.0 / 17},
                         {-2.0 / 17, 6.0 / 17, 0}}},
          {{1, 3}, 1.0, {{2.0 / 51, 4.0 / 17, 4.0 / 51},
                         {-2.0 / 51, 2.0 / 17, 0}}},
          {{2, 1}, 1.0, {{-1.0 / 51, -2.0 / 17, -2.0 / 51},
                         {1.0 / 51, -1.0 / 17, 0}}},
          {{2, 2}, 1.0, {{1.0 / 17, 6.0 / 17, 2.0 / 17},
                         {-1.0 / 17, 3.0 / 17, 0}}},
      });
  DenseTensor group = a;
  return Fixture{"example3_1",
                 {{"a", std::move(a)},
                  {"pinv", std::move(pinv)},
                  {"group", std::move(group)},
                  {"core", std::move(core)}}};
}

// Pair whose sum is nilpotent: A + B is nonzero with (A + B)^2 = O, so the
// additive core formula's hypothesis A * B = O genuinely fails.
Fixture make_counterexample_sum() {
  const std::vector<int> m23{2, 3};
  DenseTensor a = from_slices(m23, m23,
                              {
                                  {{1, 1}, 1.0, {{1, 6, 2}, {-1, 3, 0}}},
                              });
  DenseTensor b = from_slices(m23, m23,
                              {
                                  {{1, 1}, 1.0, {{-1, -1, -3}, {-1, -2, 0}}},
                              });
  return Fixture{"counterexample_sum",
                 {{"a", std::move(a)}, {"b", std::move(b)}}};
}

// Index-1 tensor with two nonzero slices; verifies the core-inverse
// characterizations at 15-digit scale.
Fixture make_example5_1() {
  const std::vector<int> m22{2, 2};
  DenseTensor a = from_slices(
      m22, m22,
      {
          {{1, 1}, 1e2, {{0.985940927109977, 1.682512984915278},
                         {1.420272484319284, 1.962489222569553}}},
          {{1, 2}, 1e2, {{8.929224052859770, 5.557379427193866},
                         {7.032232245562910, 1.844336677576532}}},
      });
  DenseTensor pinv = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{-0.002139621590719, 0.000961949275511}, {0, 0}}},
          {{2, 1}, 1e-3, {{0.154116174683626, 0.400242571625946}, {0, 0}}},
          {{1, 2}, 1.0, {{0.001721913469812, 0.000005405961529}, {0, 0}}},
          {{2, 2}, 1.0, {{0.004582706318709, -0.000777570778470}, {0, 0}}},
      });
  DenseTensor core = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{-0.002139621590719, 0.000961949275511},
                         {-0.000303613542775, 0.003332187328937}}},
          {{2, 1}, 1e-3, {{0.154116174683627, 0.400242571625946},
                          {0.304669984681755, 0.532596423124327}}},
          {{1, 2}, 1.0, {{0.001721913469812, 0.000005405961529},
                         {0.000713871950958, -0.001398898974183}}},
          {{2, 2}, 1.0, {{0.004582706318709, -0.000777570778470},
                         {0.001422901360057, -0.005026199525584}}},
      });
  DenseTensor group = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{-0.005822728386101, 0.001762848163527},
                         {-0.001341208843236, 0.007661282558445}}},
          {{1, 2}, 1.0, {{0.009355568940286, -0.001033016783992},
                         {0.003238756270141, -0.009348711331342}}},
      });
  DenseTensor a_times_core = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{0.647992011370661, 0.174597600453917},
                         {0.372580504169106, -0.242482598137053}}},
          {{2, 1}, 1.0, {{0.372580504169107, 0.248360229853187},
                         {0.303348568052670, 0.104063338661755}}},
          {{1, 2}, 1.0, {{0.174597600453919, 0.292718475124185},
                         {0.248360229853188, 0.338920703982751}}},
          {{2, 2}, 1.0, {{-0.242482598137050, 0.338920703982753},
                         {0.104063338661757, 0.755940945452490}}},
      });
  DenseTensor core_times_a = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{1.000000000000006, -0.000000000000000},
                         {0.412689678913960, -0.817575617868222}}},
          {{1, 2}, 1.0, {{-0.000000000000000, 1.000000000000001},
                         {0.602304320244615, 1.645497247305027}}},
      });
  return Fixture{"example5_1",
                 {{"a", std::move(a)},
                  {"pinv", std::move(pinv)},
                  {"group", std::move(group)},
                  {"core", std::move(core)},
                  {"a_times_core", std::move(a_times_core)},
                  {"core_times_a", std::move(core_times_a)}}};
}

// Index-2 tensor whose core-EP inverse collapses to a single unit entry.
Fixture make_example5_2() {
  const std::vector<int> m22{2, 2};
  DenseTensor a = from_slices(m22, m22,
                              {
                                  {{1, 1}, 1.0, {{1, 0}, {0, 0}}},
                                  {{2, 1}, 1.0, {{1, 0}, {0, 0}}},
                                  {{2, 2}, 1.0, {{0, 1}, {0, 0}}},
                              });
  DenseTensor coreep = from_slices(m22, m22,
                                   {
                                       {{1, 1}, 1.0, {{1, 0}, {0, 0}}},
                                   });
  return Fixture{"example5_2",
                 {{"a", std::move(a)}, {"coreep", std::move(coreep)}}};
}

// Index-2 tensor exercising the power representation of the core-EP
// inverse; powers and the pseudoinverse of the cube are part of the
// golden data.
Fixture make_example5_3() {
  const std::vector<int> m22{2, 2};
  DenseTensor a = from_slices(m22, m22,
                              {
                                  {{1, 1}, 1.0, {{2, 8}, {4, 16}}},
                                  {{2, 1}, 1.0, {{1, 4}, {2, 8}}},
                                  {{1, 2}, 1.0, {{0, 2}, {1, 4}}},
                                  {{2, 2}, 1.0, {{0, 1}, {0, 2}}},
                              });
  DenseTensor a2 = from_slices(m22, m22,
                               {
                                   {{1, 1}, 1.0, {{8, 64}, {24, 128}}},
                                   {{2, 1}, 1.0, {{4, 32}, {12, 64}}},
                                   {{1, 2}, 1.0, {{1, 12}, {4, 24}}},
                                   {{2, 2}, 1.0, {{0, 4}, {1, 8}}},
                               });
  DenseTensor a3 = from_slices(m22, m22,
                               {
                                   {{1, 1}, 1.0, {{40, 416}, {144, 832}}},
                                   {{2, 1}, 1.0, {{20, 208}, {72, 416}}},
                                   {{1, 2}, 1.0, {{6, 72}, {24, 144}}},
                                   {{2, 2}, 1.0, {{1, 20}, {6, 40}}},
                               });
  DenseTensor a3_pinv = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{0.048094852307653, -0.270803595540296},
                         {0.024047426153826, -0.276815452078752}}},
          {{2, 1}, 1.0, {{0.047143242930443, -0.264910690173993},
                         {0.023571621465222, -0.270803595540299}}},
          {{1, 2}, 1.0, {{-0.003806437508841, 0.023571621465222},
                         {-0.001903218754421, 0.024047426153827}}},
          {{2, 2}, 1.0, {{-0.007612875017682, 0.047143242930443},
                         {-0.003806437508841, 0.048094852307653}}},
      });
  DenseTensor coreep = from_slices(
      m22, m22,
      {
          {{1, 1}, 1.0, {{0.210144927536232, -0.509316770186336},
                         {0.082815734989648, -1.018633540372671}}},
          {{2, 1}, 1.0, {{0.206521739130437, -0.490683229813671},
                         {0.083850931677020, -0.981366459627341}}},
          {{1, 2}, 1.0, {{-0.014492753623189, 0.074534161490684},
                         {0.004140786749482, 0.149068322981367}}},
          {{2, 2}, 1.0, {{-0.028985507246377, 0.149068322981367},
                         {0.008281573498965, 0.298136645962735}}},
      });
  return Fixture{"example5_3",
                 {{"a", std::move(a)},
                  {"a2", std::move(a2)},
                  {"a3", std::move(a3)},
                  {"a3_pinv", std::move(a3_pinv)},
                  {"coreep", std::move(coreep)}}};
}

}  // namespace

const DenseTensor& Fixture::get(const std::string& key) const {
  for (const auto& [k, t] : tensors)
    if (k == key) return t;
  throw UnknownFixture("fixture " + name + " has no tensor \"" + key + "\"");
}

bool Fixture::has(const std::string& key) const {
  return std::any_of(tensors.begin(), tensors.end(),
                     [&](const auto& kv) { return kv.first == key; });
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "example3_1", "counterexample_sum", "example5_1", "example5_2",
      "example5_3"};
  return names;
}

Fixture fixture(const std::string& name) {
  if (name == "example3_1") return make_example3_1();
  if (name == "counterexample_sum") return make_counterexample_sum();
  if (name == "example5_1") return make_example5_1();
  if (name == "example5_2") return make_example5_2();
  if (name == "example5_3") return make_example5_3();
  throw UnknownFixture("unknown fixture \"" + name + "\"");
}

}  // namespace teninv
