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

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "teninv/fixtures.hpp"
#include "teninv/inverses.hpp"
#include "teninv/tensor_io.hpp"
#include "teninv/verify.hpp"

namespace {

using nlohmann::json;
using namespace teninv;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitDomain = 2;

json shape_json(const DenseTensor& t) {
  return json{{"left_modes", t.shape().left_modes()},
              {"right_modes", t.shape().right_modes()}};
}

void emit(const json& report, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << report.dump(2) << std::endl;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw ParseError("cannot open " + output_path + " for writing");
  out << report.dump(2) << "\n";
  if (!out) throw ParseError("write to " + output_path + " failed");
}

// Defining equations of each inverse kind; the report must show all of
// them satisfied or the invocation fails.
std::vector<AxiomTag> defining_tags(InverseKind kind) {
  switch (kind) {
    case InverseKind::MoorePenrose:
      return {AxiomTag::T1, AxiomTag::T2, AxiomTag::T3, AxiomTag::T4};
    case InverseKind::Group:
      return {AxiomTag::T1, AxiomTag::T2, AxiomTag::T5};
    case InverseKind::Drazin:
      return {AxiomTag::T1k, AxiomTag::T2, AxiomTag::T5};
    case InverseKind::Core:
      return {AxiomTag::C1, AxiomTag::C2, AxiomTag::T3};
    case InverseKind::CoreEP:
      return {AxiomTag::EP, AxiomTag::C2, AxiomTag::T3};
    default:
      return {};
  }
}

struct InverseCommand {
  std::string name;
  std::string input;
  std::string output;
  std::string core_formula = "group_mp";
  std::string coreep_formula = "power_pinv";
  std::optional<int> exponent;
  ToleranceConfig tol;
};

CoreFormula parse_core_formula(const std::string& s) {
  for (CoreFormula f :
       {CoreFormula::GroupMP, CoreFormula::PinvOfA2Adag, CoreFormula::Frf,
        CoreFormula::OneThreeBased, CoreFormula::UAstar})
    if (s == formula_name(f)) return f;
  throw CLI::ValidationError("--formula", "unknown core formula: " + s);
}

CoreEpFormula parse_coreep_formula(const std::string& s) {
  for (CoreEpFormula f : {CoreEpFormula::DrazinMP, CoreEpFormula::PowerPinv,
                          CoreEpFormula::PowerCore})
    if (s == formula_name(f)) return f;
  throw CLI::ValidationError("--formula", "unknown core-EP formula: " + s);
}

int run_inverse(const InverseCommand& cmd) {
  DenseTensor a = load_tensor(cmd.input);
  InverseResult result = [&] {
    if (cmd.name == "pinv") return moore_penrose(a, cmd.tol);
    if (cmd.name == "group") return group_inverse(a, cmd.tol);
    if (cmd.name == "drazin") return drazin_inverse(a, cmd.tol, cmd.exponent);
    if (cmd.name == "core")
      return core_inverse(a, cmd.tol, parse_core_formula(cmd.core_formula));
    return core_ep_inverse(a, cmd.tol, parse_coreep_formula(cmd.coreep_formula),
                           cmd.exponent);
  }();

  AxiomReport axioms = check(a, result.value, std::nullopt, cmd.tol);
  json report;
  report["operation"] = cmd.name;
  report["kind"] = kind_name(result.kind);
  report["formula"] = result.formula;
  if (result.index_used) report["index_used"] = *result.index_used;
  if (!result.ranks_of_powers.empty())
    report["ranks_of_powers"] = result.ranks_of_powers;
  report["input"] = {{"a", shape_json(a)}};
  report["result"] = tensor_to_json(result.value);
  report["axioms"] = axiom_report_to_json(axioms);

  bool sound = true;
  for (AxiomTag tag : defining_tags(result.kind)) sound = sound && axioms.ok(tag);
  emit(report, cmd.output);
  if (!sound) {
    std::cerr << "teninv " << cmd.name
              << ": computed inverse fails its defining equations\n";
    return kExitDomain;
  }
  return kExitOk;
}

int run_index(const std::string& input, const std::string& output,
              const ToleranceConfig& tol) {
  DenseTensor a = load_tensor(input);
  IndexInfo info = index_search(a, tol);
  json report;
  report["operation"] = "index";
  report["input"] = {{"a", shape_json(a)}};
  report["index"] = info.index;
  report["ranks_of_powers"] = info.ranks;
  emit(report, output);
  return kExitOk;
}

int run_rank(const std::string& input, const std::string& output,
             const ToleranceConfig& tol) {
  DenseTensor a = load_tensor(input);
  json report;
  report["operation"] = "rank";
  report["input"] = {{"a", shape_json(a)}};
  report["rank"] = rshrank(a, tol);
  emit(report, output);
  return kExitOk;
}

int run_verify(const std::string& a_path, const std::string& x_path,
               std::optional<int> k, const std::string& output,
               const ToleranceConfig& tol) {
  DenseTensor a = load_tensor(a_path);
  DenseTensor x = load_tensor(x_path);
  AxiomReport axioms = check(a, x, k, tol);
  json report;
  report["operation"] = "verify";
  report["input"] = {{"a", shape_json(a)}, {"x", shape_json(x)}};
  report["axioms"] = axiom_report_to_json(axioms);
  report["labels"] = labels_from_report(axioms);
  emit(report, output);
  return kExitOk;
}

int run_einsum(const std::string& a_path, const std::string& b_path,
               const std::string& output) {
  DenseTensor a = load_tensor(a_path);
  DenseTensor b = load_tensor(b_path);
  DenseTensor product = einstein_product(a, b);
  json report;
  report["operation"] = "einsum";
  report["input"] = {{"a", shape_json(a)}, {"b", shape_json(b)}};
  report["result"] = tensor_to_json(product);
  emit(report, output);
  return kExitOk;
}

int run_fixtures(bool list, const std::string& name, const std::string& dir,
                 const std::string& output) {
  if (list) {
    json report;
    report["fixtures"] = fixture_names();
    emit(report, output);
    return kExitOk;
  }
  Fixture f = fixture(name);
  if (dir.empty()) {
    json tensors = json::object();
    for (const auto& [key, t] : f.tensors) tensors[key] = tensor_to_json(t);
    json report;
    report["fixture"] = f.name;
    report["tensors"] = tensors;
    emit(report, output);
    return kExitOk;
  }
  std::filesystem::create_directories(dir);
  json files = json::array();
  for (const auto& [key, t] : f.tensors) {
    const std::string filename =
        key == "a" ? f.name + ".json" : f.name + "." + key + ".json";
    const std::string path = (std::filesystem::path(dir) / filename).string();
    save_tensor(t, path);
    files.push_back(path);
  }
  json report;
  report["fixture"] = f.name;
  report["files"] = files;
  emit(report, output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Generalized inverses of even-order tensors under the Einstein "
      "product: Moore-Penrose, group, Drazin, core and core-EP, with "
      "residual-based verification"};
  app.require_subcommand(1);

  InverseCommand cmd;
  std::string a_path, x_path, b_path, output, fixture_name, fixture_dir;
  std::optional<int> verify_k;
  bool list_fixtures = false;
  ToleranceConfig tol;

  auto add_tolerance_flags = [&tol](CLI::App* sub) {
    sub->add_option("--rank-rtol", tol.rank_rtol,
                    "relative singular-value cutoff for rank decisions "
                    "(default: max(rows,cols) * machine epsilon)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--atol", tol.eq_atol, "absolute equality threshold")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--rtol", tol.eq_rtol, "relative residual threshold")
        ->check(CLI::NonNegativeNumber);
  };

  auto add_inverse_sub = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("--input", cmd.input, "tensor file")->required();
    sub->add_option("--output", output, "report file (default: stdout)");
    add_tolerance_flags(sub);
    return sub;
  };

  add_inverse_sub("pinv", "Moore-Penrose inverse");
  add_inverse_sub("group", "group inverse (index-1 tensors)");
  CLI::App* drazin_sub = add_inverse_sub("drazin", "Drazin inverse");
  int exponent = 0;
  drazin_sub->add_option("--l", exponent, "exponent l >= index");
  CLI::App* core_sub = add_inverse_sub("core", "core inverse (index-1 tensors)");
  core_sub->add_option(
      "--formula", cmd.core_formula,
      "construction: group_mp, pinv_a2_adag, frf, one_three, u_astar");
  CLI::App* coreep_sub = add_inverse_sub("coreep", "core-EP inverse");
  coreep_sub->add_option("--formula", cmd.coreep_formula,
                         "construction: drazin_mp, power_pinv, power_core");
  coreep_sub->add_option("--l", exponent, "exponent l >= index");

  CLI::App* index_sub = app.add_subcommand("index", "tensor index");
  index_sub->add_option("--input", cmd.input, "tensor file")->required();
  index_sub->add_option("--output", output, "report file");
  add_tolerance_flags(index_sub);

  CLI::App* rank_sub = app.add_subcommand("rank", "tensor rank");
  rank_sub->add_option("--input", cmd.input, "tensor file")->required();
  rank_sub->add_option("--output", output, "report file");
  add_tolerance_flags(rank_sub);

  CLI::App* verify_sub =
      app.add_subcommand("verify", "check a candidate inverse");
  verify_sub->add_option("--a", a_path, "tensor file")->required();
  verify_sub->add_option("--x", x_path, "candidate inverse file")->required();
  int k_value = 0;
  CLI::Option* k_opt =
      verify_sub->add_option("--k", k_value, "power for the 1kT/EP equations");
  verify_sub->add_option("--output", output, "report file");
  add_tolerance_flags(verify_sub);

  CLI::App* einsum_sub = app.add_subcommand("einsum", "Einstein product");
  einsum_sub->add_option("--a", a_path, "left tensor file")->required();
  einsum_sub->add_option("--b", b_path, "right tensor file")->required();
  einsum_sub->add_option("--output", output, "report file");

  CLI::App* fixtures_sub =
      app.add_subcommand("fixtures", "bundled worked examples");
  fixtures_sub->add_flag("--list", list_fixtures, "list fixture names");
  fixtures_sub->add_option("--name", fixture_name, "fixture name");
  fixtures_sub->add_option("--dir", fixture_dir,
                           "write the fixture tensors as files here");
  fixtures_sub->add_option("--output", output, "report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitIo;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "pinv" || name == "group" || name == "drazin" ||
        name == "core" || name == "coreep") {
      cmd.name = name;
      cmd.output = output;
      cmd.tol = tol;
      if ((name == "drazin" && drazin_sub->count("--l")) ||
          (name == "coreep" && coreep_sub->count("--l")))
        cmd.exponent = exponent;
      return run_inverse(cmd);
    }
    if (name == "index") return run_index(cmd.input, output, tol);
    if (name == "rank") return run_rank(cmd.input, output, tol);
    if (name == "verify") {
      if (k_opt->count()) verify_k = k_value;
      return run_verify(a_path, x_path, verify_k, output, tol);
    }
    if (name == "einsum") return run_einsum(a_path, b_path, output);
    if (name == "fixtures") {
      if (!list_fixtures && fixture_name.empty())
        throw CLI::ValidationError("fixtures", "need --list or --name");
      return run_fixtures(list_fixtures, fixture_name, fixture_dir, output);
    }
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "teninv: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnknownFixture& e) {
    std::cerr << "teninv: " << e.what() << "\n";
    return kExitIo;
  } catch (const CLI::Error& e) {
    std::cerr << "teninv: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "teninv: " << e.what() << "\n";
    return kExitDomain;
  }
}
