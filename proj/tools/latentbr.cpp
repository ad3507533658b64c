// Copyright 2026 The latentbr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// latentbr: run scenario files and the postulate suite.
//
// Exit codes: 0 success, 1 postulate failure, 2 validation error,
// 3 work-limit overflow.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "latentbr/conformance.hpp"
#include "latentbr/scenario.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPostulateFailure = 1;
constexpr int kValidationError = 2;
constexpr int kWorkLimit = 3;

bool WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << text << "\n";
  return true;
}

int RunCommand(const std::string& file, const std::string& json_path, bool trace,
               std::size_t max_states) {
  latentbr::Scenario scenario;
  try {
    scenario = latentbr::LoadScenario(file);
  } catch (const latentbr::ScenarioError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return kValidationError;
  }
  const latentbr::Universe& u = scenario.logic->universe();
  latentbr::Limits limits;
  limits.max_states = max_states;
  std::vector<latentbr::TraceEvent> partial;
  try {
    const latentbr::RunResult result = latentbr::Run(scenario, limits, &partial);
    if (trace) std::cout << latentbr::TraceText(result.trace, u) << "\n";
    std::cout << latentbr::SnapshotText(
        latentbr::TakeSnapshot(result.final_set, scenario.print_basis), u);
    if (!json_path.empty() && !WriteFile(json_path, latentbr::RunJson(scenario, result))) {
      return kValidationError;
    }
  } catch (const latentbr::WorkLimitExceeded& e) {
    if (trace) std::cout << latentbr::TraceText(partial, u);
    std::cerr << "error: " << e.what() << " after " << partial.size() << " event(s)\n";
    return kWorkLimit;
  }
  return kOk;
}

int CheckCommand(std::uint64_t seeds, std::uint64_t first, int atoms,
                 const std::string& report_path, std::size_t max_states) {
  if (atoms < 1 || atoms > 4) {
    std::cerr << "error: --atoms must be between 1 and 4\n";
    return kValidationError;
  }
  latentbr::Bounds bounds;
  bounds.atoms = atoms;
  latentbr::Limits limits;
  limits.max_states = max_states;
  const latentbr::ConformanceReport report =
      latentbr::CheckSeeds(first, seeds, bounds, limits);
  for (const latentbr::Tally& t : report.tallies()) {
    std::cout << (t.failed > 0 ? "FAIL " : "pass ") << t.name << "  fired " << t.fired
              << "/" << t.checked << "  failed " << t.failed << "\n";
  }
  std::cout << report.instances() << " instances, " << report.overflows().size()
            << " over the work limit\n";
  if (!report_path.empty() && !WriteFile(report_path, report.Json())) {
    return kValidationError;
  }
  if (!report.all_passed()) return kPostulateFailure;
  return report.overflows().empty() ? kOk : kWorkLimit;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Belief change with latent attributive beliefs"};
  app.require_subcommand(1);

  std::size_t max_states = latentbr::Limits{}.max_states;
  app.add_option("--max-states", max_states, "Work limit for remainder computation")
      ->capture_default_str();

  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  std::string file, json_path;
  bool trace = false;
  run->add_option("file", file, "Scenario file")->required();
  run->add_option("--json", json_path, "Write the run as JSON");
  run->add_flag("--trace", trace, "Print the trigger trace");

  CLI::App* check = app.add_subcommand("check", "Run the postulate suite");
  std::uint64_t seeds = 1000, first = 0;
  int atoms = 4;
  std::string report_path;
  check->add_option("--seeds", seeds, "Number of generated instances")->capture_default_str();
  check->add_option("--first-seed", first, "First seed")->capture_default_str();
  check->add_option("--atoms", atoms, "Atoms per instance (1-4)")->capture_default_str();
  check->add_option("--report", report_path, "Write the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidationError;
  }
  if (*run) return RunCommand(file, json_path, trace, max_states);
  return CheckCommand(seeds, first, atoms, report_path, max_states);
}
