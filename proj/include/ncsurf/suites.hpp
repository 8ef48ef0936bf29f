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

#include <string>
#include <vector>

#include "ncsurf/curve.hpp"

// Verification suites: every closed-form identity the engine claims is
// replayed against an independent route (per-degree section scans, the
// concrete group law, coefficient recurrences) at pinned windows.  The CLI
// exposes named subsets; the acceptance binary runs the full list.

namespace ncsurf {

struct suite_options {
  unsigned long long seed = 0x5eedULL;
  long window = 50;
};

struct check_result {
  std::string name;
  bool pass = false;
  std::string detail;  // the first counterexample, or a summary
  double seconds = 0.0;
};

check_result check_epsilon_identity(const suite_options& options);
check_result check_hom_ideal_ring(const suite_options& options);
check_result check_roundtrip(const suite_options& options);
check_result check_blowdown_delta(const suite_options& options);
check_result check_point_tables(const suite_options& options);
check_result check_intersection_range(const suite_options& options);
check_result check_inference(const suite_options& options);
check_result check_twice_blown_up(const suite_options& options);
check_result check_oracle(const suite_options& options);
check_result check_series_engine(const suite_options& options);

// All ten checks in acceptance order.
std::vector<check_result> run_all_checks(const suite_options& options);

// Named subsets for the CLI: epsilon | roundtrip | point-tables | oracle | all.
std::vector<check_result> run_named_suite(const std::string& name,
                                          const suite_options& options);

// Deterministic search for a prime-field curve whose group has prime order,
// with the named orbits bound to spaced multiples of a generator.  This is
// the concrete model behind the multi-orbit oracle checks.
bound_model<prime_field> prime_oracle_model(
    const std::vector<std::string>& orbit_names);

// The default rational model: y^2 = x^3 - 2 with translation point (3, 5),
// all named orbits bound to the translation point itself.
bound_model<rational_field> rational_oracle_model(
    const std::vector<std::string>& orbit_names);

}  // namespace ncsurf
