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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

// Line-oriented scenario files: declare a curve model and an algebra, then
// walk it through blowups, blowdowns, intersections and fact declarations.
// Execution is transactional per command and every emitted record carries
// the rule it came from and a provenance tag.

namespace ncsurf {

struct run_options {
  long window = 64;
  unsigned long long seed = 0x5eedULL;
  bool trace = false;
  bool structured = false;  // one schema-checked JSON record per line
};

// Exit codes: 0 success, 2 parse error, 3 precondition failure,
// 4 internal inconsistency or contradiction.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInconsistent = 4;

int run_scenario_text(std::string_view text, const run_options& options,
                      std::ostream& out, std::ostream& err);
int run_scenario_file(const std::string& path, const run_options& options,
                      std::ostream& out, std::ostream& err);

// The built-in scenario name understood by the CLI.
inline constexpr std::string_view kBuiltinPathology = "reproduce-section9";
int run_builtin_pathology(const run_options& options, std::ostream& out,
                         std::ostream& err);

}  // namespace ncsurf
