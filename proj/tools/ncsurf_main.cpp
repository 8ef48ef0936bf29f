// Copyright 2026 the ncsurf authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ncsurf/scenario.hpp"
#include "ncsurf/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "ncsurf: exact series calculator for elliptic-algebra surfaces, their "
      "blowups and blowdowns, and line-module intersection numbers"};

  std::string scenario_path;
  std::string suite_name;
  std::string format = "text";
  ncsurf::run_options options;

  app.add_option("--scenario", scenario_path,
                 "scenario file to run, or the built-in name "
                 "'reproduce-section9'");
  app.add_option("--verify", suite_name,
                 "verification suite: epsilon|roundtrip|point-tables|oracle|all");
  app.add_option("--window", options.window, "expansion window for reports")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "seed for randomized suites");
  app.add_flag("--trace", options.trace, "emit per-degree section-count rows");
  app.add_option("--format", format, "output format: text|structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI11_PARSE(app, argc, argv);
  options.structured = format == "structured";

  if (scenario_path.empty() == suite_name.empty()) {
    std::cerr << "exactly one of --scenario or --verify is required\n";
    return ncsurf::kExitParse;
  }

  if (!scenario_path.empty()) {
    if (scenario_path == ncsurf::kBuiltinPathology)
      return ncsurf::run_builtin_pathology(options, std::cout, std::cerr);
    return ncsurf::run_scenario_file(scenario_path, options, std::cout,
                                     std::cerr);
  }

  ncsurf::suite_options suite{options.seed, 50};
  try {
    auto results = ncsurf::run_named_suite(suite_name, suite);
    bool all_pass = true;
    for (const auto& r : results) {
      std::cout << (r.pass ? "pass" : "FAIL") << "  " << r.name << ": "
                << r.detail << "\n";
      all_pass = all_pass && r.pass;
    }
    return all_pass ? ncsurf::kExitOk : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return ncsurf::kExitParse;
  }
}
