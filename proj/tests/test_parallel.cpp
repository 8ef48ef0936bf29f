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

#include <doctest.h>

#include <random>

#include "ncsurf/suites.hpp"
#include "ncsurf/tcr.hpp"

using namespace ncsurf;

TEST_CASE("parallel section scan matches the serial reference on a bound context") {
  genericity_context bound;
  bound.bind(oracle_binding(rational_oracle_model({"M", "P"})));
  auto ctx = std::make_shared<genericity_context>(std::move(bound));
  tcr_descriptor B(ctx, divisor::of_point(curve_point{"M", 0}, 7));
  divisor F = -divisor::of_point(curve_point{"P", 0});
  divisor G = -divisor::of_point(curve_point{"P", 3});
  CHECK(h0_window(B, F, G, -5, 80) == h0_window_serial(B, F, G, -5, 80));
}

TEST_CASE("parallel principality batch matches the serial reference") {
  genericity_context bound;
  bound.bind(oracle_binding(rational_oracle_model({"P"})));
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> shift(-10, 10);
  std::uniform_int_distribution<long> mult(1, 3);
  std::vector<divisor> batch;
  for (int i = 0; i < 150; ++i) {
    divisor D;
    for (int t = 0; t < 3; ++t) {
      long m = mult(rng);
      D += divisor::of_point(curve_point{"P", shift(rng)}, m);
      D -= divisor::of_point(curve_point{"P", shift(rng)}, m);
    }
    batch.push_back(D);
  }
  CHECK(principal_batch(bound, batch) == principal_batch_serial(bound, batch));
}

TEST_CASE("named verification suites run and reject unknown names") {
  suite_options options;
  auto results = run_named_suite("epsilon", options);
  REQUIRE(results.size() == 1);
  CHECK(results[0].pass);
  CHECK(results[0].name == "epsilon-identity");
  CHECK_THROWS_AS(run_named_suite("nope", options), std::invalid_argument);
}
