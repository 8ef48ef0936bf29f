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

// Benchmark of the windowed kernels: the OpenMP variants against the serial
// references, on the per-degree section scan and on batched principality
// over the rational oracle.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncsurf/suites.hpp"
#include "ncsurf/tcr.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using clock_type = std::chrono::steady_clock;

template <class Fn>
double time_once(Fn&& fn) {
  auto start = clock_type::now();
  fn();
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncsurf kernel benchmark: serial references vs OpenMP"};
  long window = 3000;
  long batch = 400;
  unsigned long long seed = 0x5eedULL;
  app.add_option("--window", window, "section-scan window size");
  app.add_option("--batch", batch, "principality batch size");
  app.add_option("--seed", seed, "random seed");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("openmp: %d threads\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  // per-degree section scan over a symbolic context
  {
    auto ctx = std::make_shared<ncsurf::genericity_context>();
    ncsurf::tcr_descriptor B(
        ctx, ncsurf::divisor::of_point(ncsurf::curve_point{"M", 0}, 9));
    ncsurf::divisor F = -ncsurf::divisor::of_point(ncsurf::curve_point{"P", 0});
    ncsurf::divisor G = ncsurf::divisor::of_point(ncsurf::curve_point{"Q", 0}, 2);
    std::vector<long> serial, parallel;
    double t_serial =
        time_once([&] { serial = ncsurf::h0_window_serial(B, F, G, 0, window); });
    double t_parallel =
        time_once([&] { parallel = ncsurf::h0_window(B, F, G, 0, window); });
    std::printf("section-scan  window=%-6ld serial=%.3fs parallel=%.3fs "
                "speedup=%.2fx agree=%s\n",
                window, t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "yes" : "NO");
  }

  // batched principality over the rational oracle (bignum group law)
  {
    ncsurf::genericity_context bound;
    bound.bind(ncsurf::oracle_binding(ncsurf::rational_oracle_model({"P"})));
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> shift(-40, 40);
    std::uniform_int_distribution<long> mult(1, 3);
    std::vector<ncsurf::divisor> divisors;
    for (long i = 0; i < batch; ++i) {
      ncsurf::divisor D;
      for (int t = 0; t < 3; ++t) {
        long m = mult(rng);
        D += ncsurf::divisor::of_point(ncsurf::curve_point{"P", shift(rng)}, m);
        D -= ncsurf::divisor::of_point(ncsurf::curve_point{"P", shift(rng)}, m);
      }
      divisors.push_back(D);
    }
    std::vector<char> serial, parallel;
    double t_serial = time_once(
        [&] { serial = ncsurf::principal_batch_serial(bound, divisors); });
    double t_parallel =
        time_once([&] { parallel = ncsurf::principal_batch(bound, divisors); });
    std::printf("oracle-batch  batch=%-7ld serial=%.3fs parallel=%.3fs "
                "speedup=%.2fx agree=%s\n",
                batch, t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "yes" : "NO");
  }
  return 0;
}
