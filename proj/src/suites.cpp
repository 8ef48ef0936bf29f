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

#include "ncsurf/suites.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "ncsurf/intersection.hpp"

namespace ncsurf {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

// Runs the body, fills pass/detail, and never lets an exception escape as
// anything but a failure message.
check_result run_check(const std::string& name,
                       const std::function<std::string()>& body) {
  check_result out;
  out.name = name;
  auto start = clock_type::now();
  try {
    out.detail = body();
    out.pass = true;
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = e.what();
  }
  out.seconds = seconds_since(start);
  return out;
}

struct check_failure : std::runtime_error {
  explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool condition, const std::string& counterexample) {
  if (!condition) throw check_failure(counterexample);
}

std::shared_ptr<const genericity_context> generic_ctx() {
  return std::make_shared<genericity_context>();
}

tcr_descriptor generic_tcr(long mu) {
  return tcr_descriptor(generic_ctx(),
                        divisor::of_point(curve_point{"M", 0}, mu));
}

void compare_windows(const hilbert_series& series, const tcr_descriptor& B,
                     const divisor& F, const divisor& G, long window,
                     const std::string& label) {
  auto scan = h0_window_serial(B, F, G, 0, window);
  for (long n = 0; n <= window; ++n)
    require(series.coeff(n) == scan[static_cast<size_t>(n)],
            label + ": closed form and per-degree scan disagree at degree " +
                std::to_string(n));
}

}  // namespace

check_result check_epsilon_identity(const suite_options& options) {
  return run_check("epsilon-identity", [&] {
    const curve_point p{"P", 0};
    const curve_point q{"Q", 0};
    int cases = 0;
    for (long mu : {3L, 7L, 9L}) {
      tcr_descriptor B = generic_tcr(mu);
      hilbert_series hb = hilb_B(B);
      struct relation {
        curve_point lhs, rhs;
        int eps;
        const char* label;
      };
      for (const relation& rel :
           {relation{p, p, 1, "equal points"},
            relation{tau_power(p, 3), p, 0, "orbit offset three"},
            relation{p, q, 0, "distinct orbits"}}) {
        auto start = clock_type::now();
        divisor F = -divisor::of_point(rel.lhs);
        divisor G = -divisor::of_point(rel.rhs);
        hilbert_series lhs = hom_saturated(B, F, G).series;
        hilbert_series rhs = hb - hilbert_series::one() +
                             hilbert_series::constant(rel.eps);
        require(lhs == rhs, std::string(rel.label) + " at degree " +
                                std::to_string(mu) + ": series differ");
        for (long n = 0; n <= options.window; ++n)
          require(lhs.coeff(n) == rhs.coeff(n),
                  std::string(rel.label) + ": coefficient mismatch at " +
                      std::to_string(n));
        compare_windows(lhs, B, F, G, options.window, rel.label);
        require(seconds_since(start) < 1.0,
                std::string(rel.label) + ": case exceeded one second");
        ++cases;
      }
    }
    return std::to_string(cases) + " cases, window 0.." +
           std::to_string(options.window);
  });
}

check_result check_hom_ideal_ring(const suite_options& options) {
  return run_check("hom-line-ideal-into-ring", [&] {
    const hilbert_series expected_tail = hilbert_series::parse("s / (1-s)^2");
    for (long mu = 3; mu <= 9; ++mu) {
      algebra_descriptor A = make_elliptic_algebra(
          generic_ctx(), divisor::of_point(curve_point{"M", 0}, mu));
      line_module_ref L{curve_point{"P", 0}, module_side::right, 0};
      hilbert_series lhs = hom_line_ideal_ring_series(A, L);
      hilbert_series rhs = hilb_R(A) + expected_tail;
      require(lhs == rhs, "degree " + std::to_string(mu) + ": series differ");
      for (long n = 0; n <= options.window; ++n)
        require(lhs.coeff(n) == rhs.coeff(n),
                "degree " + std::to_string(mu) +
                    ": coefficient mismatch at " + std::to_string(n));
    }
    return "degrees 3..9, window 0.." + std::to_string(options.window);
  });
}

namespace {

std::string roundtrip_body(const suite_options& options, bool check_delta) {
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> shift(-12, 12);
  std::uniform_int_distribution<int> orbit(0, 2);
  const hilbert_series expected_delta = hilbert_series::parse("s / (1-s)^3");
  auto start = clock_type::now();
  int trips = 0;
  for (long mu = 4; mu <= 9; ++mu) {
    algebra_descriptor A = make_elliptic_algebra(
        generic_ctx(), divisor::of_point(curve_point{"M", 0}, mu));
    for (int trial = 0; trial < 50; ++trial) {
      const char* names[] = {"M", "P", "Q"};
      curve_point p{names[orbit(rng)], shift(rng)};
      blowup_result up = blowup(A, p);
      algebra_descriptor back = blowdown(up.algebra, up.exceptional);
      if (check_delta) {
        hilbert_series delta = hilb_R(back) - hilb_R(up.algebra);
        require(delta == expected_delta,
                "delta mismatch at degree " + std::to_string(mu) + ", point " +
                    p.to_string() + ": " + delta.to_string());
        for (long n = 0; n <= options.window; ++n)
          require(delta.coeff(n) == expected_delta.coeff(n),
                  "delta coefficient mismatch at " + std::to_string(n));
      } else {
        require(descriptor_equal(back, A),
                "round trip failed at degree " + std::to_string(mu) +
                    ", point " + p.to_string());
      }
      ++trips;
    }
  }
  if (!check_delta)
    require(seconds_since(start) < 1.0, "round trips exceeded one second");
  return std::to_string(trips) + " blowup/blowdown trips";
}

}  // namespace

check_result check_roundtrip(const suite_options& options) {
  return run_check("blowup-blowdown-roundtrip",
                   [&] { return roundtrip_body(options, false); });
}

check_result check_blowdown_delta(const suite_options& options) {
  return run_check("blowdown-series-delta",
                   [&] { return roundtrip_body(options, true); });
}

check_result check_point_tables(const suite_options&) {
  return run_check("point-module-tables", [&] {
    tcr_descriptor B3 = generic_tcr(3);
    tcr_descriptor B2 = generic_tcr(2);
    const curve_point q{"Q", 0};
    const curve_point off{"P", 0};
    auto right = [](const curve_point& pt) {
      return point_module_ref{pt, module_side::right, 0};
    };
    for (long j = -4; j <= 4; ++j) {
      point_module_ref pj = right(tau_power(q, j));
      hilbert_series hom = point_hom(B3, pj, right(q));
      hilbert_series ext = point_ext1(B3, pj, right(q));
      if (j >= 0) {
        require(hom == hilbert_series::monomial(j),
                "graded Hom at offset " + std::to_string(j));
        require(ext == hilbert_series::monomial(-1) + hilbert_series::monomial(j),
                "graded Ext at offset " + std::to_string(j));
      } else {
        require(hom == hilbert_series::zero(),
                "graded Hom at negative offset " + std::to_string(j));
        require(ext == hilbert_series::monomial(-1),
                "graded Ext at negative offset " + std::to_string(j));
      }
      for (const tcr_descriptor* B : {&B2, &B3}) {
        auto [qh, qe] = point_qgr_homext(*B, pj, right(q));
        require(qh == hilbert_series::monomial(j),
                "quotient Hom at offset " + std::to_string(j));
        require(qe == hilbert_series::monomial(j),
                "quotient Ext at offset " + std::to_string(j));
      }
      require(leq(hom, point_qgr_homext(B3, pj, right(q)).first),
              "graded Hom does not embed at offset " + std::to_string(j));
    }
    require(point_hom(B3, right(off), right(q)) == hilbert_series::zero(),
            "graded Hom off-orbit");
    require(point_ext1(B3, right(off), right(q)) == hilbert_series::monomial(-1),
            "graded Ext off-orbit");
    auto qoff = point_qgr_homext(B3, right(off), right(q));
    require(qoff.first == hilbert_series::zero() &&
                qoff.second == hilbert_series::zero(),
            "quotient tables off-orbit");
    return std::string("offsets -4..4 and off-orbit, degrees 2 and 3");
  });
}

check_result check_intersection_range(const suite_options&) {
  return run_check("intersection-range", [&] {
    std::vector<pair_relation> rels;
    rels.push_back({pair_kind::same_line, 0});
    rels.push_back({pair_kind::off_orbit, 0});
    for (long j = -5; j <= 5; ++j) rels.push_back({pair_kind::on_orbit, j});
    int entries = 0;
    for (const auto& rel : rels) {
      ledger_candidates led = ledger(rel);
      for (const auto& entry : led.entries(rel)) {
        require(entry.dot >= -1 && entry.dot <= 1,
                "intersection number out of range");
        if (entry.dot == -1)
          require(rel.kind == pair_kind::same_line,
                  "-1 outside the same-line case");
        auto rank = entry.X.rank_at_one();
        require(rank.has_value(), "X series with a double pole");
        require(*rank == entry.dot,
                "coefficient sum and rank at one disagree");
        require(leq(entry.C, led.E), "C escapes the Ext ledger");
        require(entry.C.nonneg(), "negative connecting image");
        ++entries;
      }
    }
    return std::to_string(entries) + " ledger entries enumerated";
  });
}

check_result check_inference(const suite_options&) {
  return run_check("inference-soundness", [&] {
    const std::string line = "line[E:1]/right";
    const std::string algebra = "algebra 9*[M:0]";
    rule_subjects subjects{line, line, algebra, "pair"};
    auto lit = [&](predicate p, bool v) {
      fact f;
      f.subject = p == predicate::qgr_smooth ? algebra : line;
      f.pred = p;
      f.value = v;
      return f;
    };

    fact_base a;
    a.add(lit(predicate::exceptional_line, true));
    a.add(lit(predicate::qgr_smooth, true));
    auto ra = infer(a, {pair_kind::same_line, 0}, subjects);
    require(!ra.contradiction, "exceptional+smooth closure contradicts");
    require(ra.closure.has(line, predicate::self_intersection_minus_one, true),
            "exceptional+smooth closure misses (L.L) = -1");
    require(ra.closure.has(line, predicate::ext1_line_self_zero, true),
            "exceptional+smooth closure misses vanishing self-extensions");

    fact_base b;
    b.add(lit(predicate::end_series_matches_ring, true));
    auto rb = infer(b, {pair_kind::same_line, 0}, subjects);
    require(!rb.contradiction, "lone End-series closure contradicts");
    for (predicate p :
         {predicate::ext1_ideal_self_zero, predicate::ext1_line_self_zero,
          predicate::hom_ideal_line_shifted_plane,
          predicate::self_intersection_minus_one})
      require(!rb.closure.value(line, p).has_value(),
              "lone End-series closure overreaches");

    fact_base c;
    c.add(lit(predicate::end_series_matches_ring, true));
    c.add(lit(predicate::nonsplit_self_extension, true));
    auto rc = infer(c, {pair_kind::same_line, 0}, subjects);
    require(!rc.contradiction, "pathology closure contradicts");
    require(rc.closure.has(line, predicate::self_intersection_minus_one, false),
            "pathology closure misses (L.L) != -1");
    return std::string("three closures checked");
  });
}

check_result check_twice_blown_up(const suite_options&) {
  return run_check("twice-blown-up-point", [&] {
    auto start = clock_type::now();
    algebra_descriptor T = make_elliptic_algebra(
        generic_ctx(), divisor::of_point(curve_point{"M", 0}, 9),
        smoothness::smooth);
    twice_blown_up_data data = twice_blown_up_report(T, curve_point{"P", 0});
    require(data.degrees == std::vector<long>{9, 8, 7}, "degree chain");
    require(data.dim_J1 == 6, "line ideal in degree one");
    require(data.y_mod_r == hilbert_series::parse("2*s / (1-s)^2"),
            "overring quotient series");
    require(data.twice == smoothness::not_smooth,
            "second blowup should not be smooth");
    require(data.ms_undefined, "alternating Ext sum should be undefined");
    require(data.contractibility_holds && data.minus_one_excluded &&
                !data.contradiction,
            "closure of the pathology facts");
    require(data.final_degree == 8, "closing blowdown degree");
    require(seconds_since(start) < 2.0, "report exceeded two seconds");
    return std::string("degrees 9/8/7, undefined tower, contraction done");
  });
}

bound_model<rational_field> rational_oracle_model(
    const std::vector<std::string>& orbit_names) {
  weierstrass_curve<rational_field> curve(rational_field{}, mpq_class(0),
                                          mpq_class(-2));
  auto t = curve.make_point(3, 5);
  auto guard = order_guard(curve, t, 100);
  if (!guard.ok) throw std::logic_error("rational translation point is torsion");
  bound_model<rational_field> model{curve, t, {}};
  for (const auto& name : orbit_names) model.orbit_base[name] = t;
  return model;
}

bound_model<prime_field> prime_oracle_model(
    const std::vector<std::string>& orbit_names) {
  // Scan small coefficients over F_p until the curve group has prime order;
  // every nonzero point then generates, so spaced multiples of a generator
  // are free of small-coefficient collisions.
  const unsigned long p = 1000003;  // 3 mod 4, so square roots are a powmod
  std::vector<char> is_square(p, 0);
  for (unsigned long y = 0; y < p; ++y)
    is_square[(y * y) % p] = 1;
  prime_field F((mpz_class(p)));
  for (unsigned long a = 0; a <= 4; ++a) {
    for (unsigned long b = 1; b <= 60; ++b) {
      if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
      unsigned long count = 1;  // infinity
      for (unsigned long x = 0; x < p; ++x) {
        unsigned long rhs = (x * x % p * x + a * x + b) % p;
        count += rhs == 0 ? 1 : (is_square[rhs] ? 2 : 0);
      }
      mpz_class order(count);
      if (mpz_probab_prime_p(order.get_mpz_t(), 30) == 0) continue;
      weierstrass_curve<prime_field> curve(F, F.from_long(a), F.from_long(b));
      // first point on the curve with a square right-hand side
      for (unsigned long x = 0;; ++x) {
        unsigned long rhs = (x * x % p * x + a * x + b) % p;
        if (rhs != 0 && !is_square[rhs]) continue;
        mpz_class y;
        mpz_class exponent((p + 1) / 4);
        mpz_class rhs_z(rhs);
        mpz_powm(y.get_mpz_t(), rhs_z.get_mpz_t(), exponent.get_mpz_t(),
                 F.p.get_mpz_t());
        if (F.reduce(y * y) != rhs_z) continue;
        auto G = curve.make_point(mpz_class(x), y);
        if (G.infinity) continue;
        bound_model<prime_field> model{curve, G, {}};
        // spacing 500 keeps every bounded combination short of one group order
        mpz_class multiple = 1;
        for (const auto& name : orbit_names) {
          model.orbit_base[name] = curve.scalar_mul(multiple, G);
          multiple *= 500;
        }
        return model;
      }
    }
  }
  throw std::logic_error("no prime-order curve found in the search range");
}

namespace {

divisor balanced_single_orbit_divisor(std::mt19937_64& rng,
                                      const std::string& orbit,
                                      bool force_principal) {
  std::uniform_int_distribution<long> shift(-8, 8);
  std::uniform_int_distribution<long> mult(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<int> npairs(1, 3);
  divisor D;
  int k = npairs(rng);
  for (int i = 0; i < k; ++i) {
    long m = mult(rng) * (sign(rng) ? 1 : -1);
    D += divisor::of_point(curve_point{orbit, shift(rng)}, m);
    D -= divisor::of_point(curve_point{orbit, shift(rng)}, m);
  }
  if (force_principal) {
    long weight = 0;
    for (const auto& [pt, m] : D.terms()) weight += pt.shift * m;
    D += divisor::of_point(curve_point{orbit, -weight});
    D -= divisor::of_point(curve_point{orbit, 0});
  }
  return D;
}

divisor balanced_two_orbit_divisor(std::mt19937_64& rng, const std::string& a,
                                   const std::string& b, bool force_principal) {
  std::uniform_int_distribution<long> shift(-6, 6);
  std::uniform_int_distribution<long> mult(1, 2);
  std::uniform_int_distribution<int> sign(0, 1);
  divisor D;
  for (const std::string& orbit : {a, b}) {
    for (int i = 0; i < 2; ++i) {
      long m = mult(rng) * (sign(rng) ? 1 : -1);
      D += divisor::of_point(curve_point{orbit, shift(rng)}, m);
      if (force_principal)
        D -= divisor::of_point(curve_point{orbit, shift(rng)}, m);
    }
  }
  // balance the total degree on the second orbit
  D -= divisor::of_point(curve_point{b, 0}, D.degree());
  if (force_principal) {
    // zero each orbit sum, then the weighted sum, staying degree zero
    long sum_a = 0, weight = 0;
    for (const auto& [pt, m] : D.terms()) {
      if (pt.orbit == a) sum_a += m;
      weight += pt.shift * m;
    }
    D -= divisor::of_point(curve_point{a, 0}, sum_a);
    D += divisor::of_point(curve_point{b, 0}, sum_a);
    weight = 0;
    for (const auto& [pt, m] : D.terms()) weight += pt.shift * m;
    D += divisor::of_point(curve_point{a, -weight});
    D -= divisor::of_point(curve_point{a, 0});
  }
  return D;
}

}  // namespace

check_result check_oracle(const suite_options& options) {
  return run_check("oracle-equivalence", [&] {
    std::mt19937_64 rng(options.seed);
    int agreements = 0, principal_seen = 0, nonprincipal_seen = 0;

    // single-orbit divisors over the rational model
    {
      genericity_context symbolic;
      genericity_context bound;
      bound.bind(oracle_binding(rational_oracle_model({"P"})));
      std::vector<divisor> batch;
      for (int i = 0; i < 200; ++i)
        batch.push_back(balanced_single_orbit_divisor(rng, "P", i % 2 == 0));
      auto concrete = principal_batch(bound, batch);
      for (size_t i = 0; i < batch.size(); ++i) {
        bool sym = symbolic.is_principal(batch[i]);
        require(sym == (concrete[i] != 0),
                "rational model disagrees on " + batch[i].to_string());
        (sym ? principal_seen : nonprincipal_seen)++;
        ++agreements;
      }
    }

    // multi-orbit divisors over the prime-field model, behind the guard
    {
      auto model = prime_oracle_model({"A", "B"});
      auto guard = order_guard(model.curve, model.translation, 400);
      require(guard.ok, "prime-field translation point failed the guard");
      genericity_context symbolic;
      genericity_context bound;
      bound.bind(oracle_binding(model));
      std::vector<divisor> batch;
      for (int i = 0; i < 200; ++i)
        batch.push_back(balanced_two_orbit_divisor(rng, "A", "B", i % 2 == 0));
      auto concrete = principal_batch(bound, batch);
      auto concrete_serial = principal_batch_serial(bound, batch);
      require(concrete == concrete_serial,
              "parallel and serial principality batches disagree");
      for (size_t i = 0; i < batch.size(); ++i) {
        bool sym = symbolic.is_principal(batch[i]);
        require(sym == (concrete[i] != 0),
                "prime-field model disagrees on " + batch[i].to_string());
        (sym ? principal_seen : nonprincipal_seen)++;
        ++agreements;
      }
    }

    require(principal_seen >= 50 && nonprincipal_seen >= 50,
            "batch did not exercise both branches");
    std::ostringstream detail;
    detail << agreements << " divisors agreed (" << principal_seen
           << " principal, " << nonprincipal_seen << " not)";
    return detail.str();
  });
}

check_result check_series_engine(const suite_options& options) {
  return run_check("series-engine", [&] {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<long> exp(-6, 8);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<unsigned> pole(0, 3);
    auto random_series = [&] {
      laurent num;
      int k = nterms(rng);
      for (int i = 0; i < k; ++i) num += laurent(exp(rng), coeff(rng));
      return hilbert_series(num, pole(rng));
    };
    for (int trial = 0; trial < 500; ++trial) {
      hilbert_series a = random_series();
      hilbert_series b = random_series();
      hilbert_series recanonical(a.numerator(), a.pole_order());
      require(recanonical == a, "canonicalization is not idempotent");
      hilbert_series sum = a + b;
      hilbert_series prod = a * b;
      long lo_a = a.is_zero() ? 0 : a.numerator().min_exp();
      long lo_b = b.is_zero() ? 0 : b.numerator().min_exp();
      for (long n = -10; n <= 50; ++n) {
        require(sum.coeff(n) == a.coeff(n) + b.coeff(n),
                "additive coefficient law fails at degree " + std::to_string(n));
        if (n % 7 == 0) {
          mpz_class conv = 0;
          for (long i = lo_a; i <= n - lo_b; ++i)
            conv += a.coeff(i) * b.coeff(n - i);
          require(prod.coeff(n) == conv,
                  "product coefficient law fails at degree " + std::to_string(n));
        }
      }
      if (a.pole_order() == 1) {
        auto rank = a.rank_at_one();
        require(rank.has_value(), "simple pole without a rank");
        long start = a.numerator().max_exp();
        for (long n = start; n <= start + 3; ++n)
          require(a.coeff(n) == *rank, "rank differs from eventual coefficient");
      }
    }
    return "500 random pairs, window -10.." + std::to_string(options.window);
  });
}

std::vector<check_result> run_all_checks(const suite_options& options) {
  return {
      check_epsilon_identity(options), check_hom_ideal_ring(options),
      check_roundtrip(options),        check_blowdown_delta(options),
      check_point_tables(options),     check_intersection_range(options),
      check_inference(options),        check_twice_blown_up(options),
      check_oracle(options),           check_series_engine(options),
  };
}

std::vector<check_result> run_named_suite(const std::string& name,
                                          const suite_options& options) {
  if (name == "epsilon") return {check_epsilon_identity(options)};
  if (name == "roundtrip")
    return {check_roundtrip(options), check_blowdown_delta(options)};
  if (name == "point-tables") return {check_point_tables(options)};
  if (name == "oracle") return {check_oracle(options)};
  if (name == "all") return run_all_checks(options);
  throw std::invalid_argument(
      "unknown suite (expected epsilon|roundtrip|point-tables|oracle|all): " +
      name);
}

}  // namespace ncsurf
