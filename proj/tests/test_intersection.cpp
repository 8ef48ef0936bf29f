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

#include <algorithm>
#include <random>

#include "ncsurf/intersection.hpp"

using namespace ncsurf;

namespace {

const std::string kLineA = "line[P:0]/right";
const std::string kLineB = "line[Q:0]/right";
const std::string kAlgebra = "algebra 9*[M:0]";
const std::string kPair = "pair";

rule_subjects subjects() { return {kLineA, kLineB, kAlgebra, kPair}; }

fact make_fact(const std::string& subject, predicate p, bool value) {
  fact f;
  f.subject = subject;
  f.pred = p;
  f.value = value;
  return f;
}

}  // namespace

TEST_CASE("classify pairs") {
  genericity_context ctx;
  line_module_ref L{{"P", 0}, module_side::right, 0};
  line_module_ref Lup{{"P", 3}, module_side::right, 0};
  line_module_ref M{{"Q", 0}, module_side::right, 0};
  CHECK(classify_pair(ctx, L, L) == pair_relation{pair_kind::same_line, 0});
  CHECK(classify_pair(ctx, Lup, L) == pair_relation{pair_kind::on_orbit, 3});
  CHECK(classify_pair(ctx, L, Lup) == pair_relation{pair_kind::on_orbit, -3});
  CHECK(classify_pair(ctx, L, M) == pair_relation{pair_kind::off_orbit, 0});
}

TEST_CASE("ledger for the same line") {
  pair_relation rel{pair_kind::same_line, 0};
  ledger_candidates led = ledger(rel);
  CHECK(led.H == hilbert_series::one());
  CHECK(led.E == hilbert_series::parse("s^-1 + 1"));
  REQUIRE(led.C_options.size() == 2);

  // C = 0: X = -1/(1-s) and the self-intersection is -1
  CHECK(x_series(rel, led.C_options[0]) == hilbert_series::parse("-1 / (1-s)"));
  CHECK(dot(rel, led.C_options[0]) == -1);
  // C = s^-1: X = s^-1 is finite and the self-intersection is 0
  CHECK(x_series(rel, led.C_options[1]) == hilbert_series::monomial(-1));
  CHECK(dot(rel, led.C_options[1]) == 0);
}

TEST_CASE("ledger along an orbit and off it") {
  pair_relation rel{pair_kind::on_orbit, 2};
  ledger_candidates led = ledger(rel);
  CHECK(led.H == hilbert_series::monomial(2));
  REQUIRE(led.C_options.size() == 3);
  // C = s^j: X = 0
  CHECK(dot(rel, led.C_options[0]) == 0);
  // C = s^-1: X = s^-1 + ... + s^(j-1), a polynomial
  hilbert_series X = x_series(rel, led.C_options[1]);
  CHECK(X == hilbert_series::parse("s^-1 + 1 + s"));
  CHECK(dot(rel, led.C_options[1]) == 0);
  // C = s^-1 + s^j: X = s^-1/(1-s)
  CHECK(x_series(rel, led.C_options[2]) == hilbert_series::parse("s^-1 / (1-s)"));
  CHECK(dot(rel, led.C_options[2]) == 1);

  pair_relation off{pair_kind::off_orbit, 0};
  ledger_candidates led_off = ledger(off);
  CHECK(led_off.H == hilbert_series::zero());
  REQUIRE(led_off.C_options.size() == 2);
  CHECK(dot(off, led_off.C_options[0]) == 0);
  CHECK(dot(off, led_off.C_options[1]) == 1);

  pair_relation neg{pair_kind::on_orbit, -4};
  CHECK(ledger(neg).H == hilbert_series::zero());
}

TEST_CASE("intersection range over all relations") {
  std::vector<pair_relation> rels;
  rels.push_back({pair_kind::same_line, 0});
  rels.push_back({pair_kind::off_orbit, 0});
  for (long j = -5; j <= 5; ++j) rels.push_back({pair_kind::on_orbit, j});
  for (const auto& rel : rels) {
    ledger_candidates led = ledger(rel);
    for (const auto& entry : led.entries(rel)) {
      CHECK(entry.dot >= -1);
      CHECK(entry.dot <= 1);
      if (entry.dot == -1) CHECK(rel.kind == pair_kind::same_line);
      // the rank at one of X recomputes the coefficient sum
      auto rank = entry.X.rank_at_one();
      REQUIRE(rank.has_value());
      CHECK(*rank == entry.dot);
      // C stays within the Ext ledger
      CHECK(leq(entry.C, led.E));
    }
  }
}

TEST_CASE("line hom dichotomy") {
  line_hom_result same = line_hom_candidates({pair_kind::same_line, 0});
  CHECK(same.series == hilbert_series::geometric(1));
  CHECK_FALSE(same.conditional);

  line_hom_result orbit = line_hom_candidates({pair_kind::on_orbit, 2});
  CHECK(orbit.series == hilbert_series::parse("s^2 / (1-s)"));
  CHECK(orbit.conditional);

  line_hom_result off = line_hom_candidates({pair_kind::off_orbit, 0});
  CHECK(off.series == hilbert_series::zero());
  CHECK_FALSE(off.conditional);

  line_hom_result behind = line_hom_candidates({pair_kind::on_orbit, -2});
  CHECK(behind.series == hilbert_series::zero());
  CHECK_FALSE(behind.conditional);
}

TEST_CASE("alternating Ext sums") {
  CHECK(*ms_dot(ext_rank_profile{{1}, {}}) == -1);
  CHECK(*ms_dot(ext_rank_profile{{0, 1}, {}}) == 1);
  CHECK(*ms_dot(ext_rank_profile{{1, 2, 1}, {0, 0}}) == 0);
  CHECK_FALSE(ms_dot(ext_rank_profile{{1, 1}, {1}}).has_value());
  CHECK_FALSE(ms_dot(ext_rank_profile{{1}, {0, 2}}).has_value());

  // where defined, the truncated sums settle to the same value
  ext_rank_profile p{{1, 3, 2}, {}};
  CHECK(ms_dot_partial(p, 200) == *ms_dot(p));
}

TEST_CASE("hom series between line ideals") {
  hilbert_series hr = hilbert_series::parse("(1 + 5*s + s^2) / (1-s)^3");
  pair_relation same{pair_kind::same_line, 0};
  pair_relation distinct{pair_kind::off_orbit, 0};

  homjj_result a = hom_JJ_series(same, hilbert_series::zero(), hr);
  CHECK(a.series == hr);
  CHECK(a.consistent);

  homjj_result b = hom_JJ_series(distinct, hilbert_series::zero(), hr);
  CHECK(b.series == hr - hilbert_series::geometric(1));
  CHECK(b.consistent);

  homjj_result c = hom_JJ_series(same, hilbert_series::parse("1 + s"), hr);
  CHECK(c.series ==
        hr - hilbert_series::parse("(1 + s) / (1-s)"));
  CHECK(c.consistent);

  // an image too large to fit flags the inputs
  homjj_result bad =
      hom_JJ_series(distinct, hilbert_series::parse("9 + 9*s"), hr);
  CHECK_FALSE(bad.consistent);

  // the Hom series between distinct line ideals sits below the ring
  CHECK(leq(b.series, hr));
}

TEST_CASE("the X identity across resolved scenarios") {
  // X = hilb Ext^1(J,J') + hilb R - 1/(1-s) - hilb Hom(J,J') whenever the
  // chain conditions pin every series
  hilbert_series hr = hilbert_series::parse("(1 + 7*s + s^2) / (1-s)^3");
  hilbert_series one_over = hilbert_series::geometric(1);

  // same line, vanishing Ext between the ideals
  {
    pair_relation rel{pair_kind::same_line, 0};
    hilbert_series ext_jj = hilbert_series::zero();
    hilbert_series hom_jj = hr;  // the End-series match
    hilbert_series X = x_series(rel, hilbert_series::zero());
    CHECK(X == ext_jj + hr - one_over - hom_jj);
  }
  // distinct divisors, vanishing Ext between the ideals
  {
    pair_relation rel{pair_kind::off_orbit, 0};
    hilbert_series ext_jj = hilbert_series::zero();
    hilbert_series hom_jj = hr - one_over;
    hilbert_series X = x_series(rel, hilbert_series::zero());
    CHECK(X == ext_jj + hr - one_over - hom_jj);
  }
  // non-isomorphic lines with the two-term Ext series
  {
    pair_relation rel{pair_kind::off_orbit, 0};
    hilbert_series ext_jj = hilbert_series::parse("s^-1 + 1");
    hilbert_series hom_jj = hr - hilbert_series::parse("(1 + s) / (1-s)");
    hilbert_series X = x_series(rel, hilbert_series::monomial(-1));
    CHECK(X == ext_jj + hr - one_over - hom_jj);
  }
}

TEST_CASE("inference: exceptional line on a smooth algebra has (L.L) = -1") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::exceptional_line, true));
  facts.add(make_fact(kAlgebra, predicate::qgr_smooth, true));
  auto result = infer(facts, {pair_kind::same_line, 0}, subjects());
  CHECK_FALSE(result.contradiction);
  CHECK(result.closure.has(kLineA, predicate::self_intersection_minus_one, true));
  CHECK(result.closure.has(kLineA, predicate::ext1_line_self_zero, true));
  // derived facts carry their rule chain
  const fact* f =
      result.closure.find(kLineA, predicate::self_intersection_minus_one, true);
  REQUIRE(f != nullptr);
  CHECK(f->prov == provenance_kind::derived);
  CHECK_FALSE(f->rule.empty());
  CHECK_FALSE(f->premises.empty());
}

TEST_CASE("inference: the End-series match alone stays alone") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::end_series_matches_ring, true));
  auto result = infer(facts, {pair_kind::same_line, 0}, subjects());
  CHECK_FALSE(result.contradiction);
  CHECK(result.closure.has(kLineA, predicate::end_series_matches_ring, true));
  for (predicate p :
       {predicate::ext1_ideal_self_zero, predicate::ext1_line_self_zero,
        predicate::hom_ideal_line_shifted_plane,
        predicate::self_intersection_minus_one})
    CHECK_FALSE(result.closure.value(kLineA, p).has_value());
}

TEST_CASE("inference: the pathology facts exclude -1 without contradiction") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::end_series_matches_ring, true));
  facts.add(make_fact(kLineA, predicate::nonsplit_self_extension, true));
  auto result = infer(facts, {pair_kind::same_line, 0}, subjects());
  CHECK_FALSE(result.contradiction);
  CHECK(result.closure.has(kLineA, predicate::self_intersection_minus_one,
                           false));
  CHECK(result.closure.has(kLineA, predicate::ext1_line_self_zero, false));
  CHECK(result.closure.has(kLineA, predicate::end_series_matches_ring, true));
}

TEST_CASE("inference: zero-intersection chain for divisor-disjoint pairs") {
  fact_base facts;
  facts.add(make_fact(kPair, predicate::ext1_ideal_pair_zero, true));
  auto result = infer(facts, {pair_kind::off_orbit, 0}, subjects());
  CHECK(result.closure.has(kPair, predicate::intersection_zero, true));
  CHECK(result.closure.has(kPair, predicate::hom_ideal_pair_gap_single, true));

  // the gap condition upgrades only with a projective ideal
  fact_base gap_only;
  gap_only.add(make_fact(kPair, predicate::hom_ideal_pair_gap_single, true));
  auto weak = infer(gap_only, {pair_kind::off_orbit, 0}, subjects());
  CHECK_FALSE(
      weak.closure.value(kPair, predicate::ext1_ideal_pair_zero).has_value());
  gap_only.add(make_fact(kLineA, predicate::ideal_localisation_projective, true));
  auto strong = infer(gap_only, {pair_kind::off_orbit, 0}, subjects());
  CHECK(strong.closure.has(kPair, predicate::ext1_ideal_pair_zero, true));
}

TEST_CASE("inference: one-intersection ladder is one-way") {
  fact_base facts;
  facts.add(make_fact(kPair, predicate::ext1_ideal_pair_two_terms, true));
  auto result = infer(facts, {pair_kind::on_orbit, 2}, subjects());
  CHECK(result.closure.has(kPair, predicate::intersection_one, true));
  CHECK(result.closure.has(kPair, predicate::hom_ideal_pair_gap_double, true));

  fact_base reverse;
  reverse.add(make_fact(kPair, predicate::intersection_one, true));
  auto weak = infer(reverse, {pair_kind::on_orbit, 2}, subjects());
  CHECK_FALSE(weak.closure.value(kPair, predicate::ext1_ideal_pair_two_terms)
                  .has_value());
}

TEST_CASE("inference: equal divisors on distinct lines sit outside coverage") {
  fact_base facts;
  auto result = infer(facts, {pair_kind::on_orbit, 0}, subjects());
  REQUIRE_FALSE(result.notes.empty());
  CHECK(result.notes.front().find("outside") != std::string::npos);
}

TEST_CASE("optional assumption slots") {
  // the conjecture slot is recorded and never consumed by any rule
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::no_line_at_exceptional_divisor, true));
  auto result = infer(facts, {pair_kind::same_line, 0}, subjects());
  CHECK(result.closure.all().size() == 1);

  // the smooth-forces-minus-one rule fires only when assumed
  fact_base smooth_only;
  smooth_only.add(make_fact(kAlgebra, predicate::qgr_smooth, true));
  auto without = infer(smooth_only, {pair_kind::same_line, 0}, subjects());
  CHECK_FALSE(without.closure
                  .value(kLineA, predicate::self_intersection_minus_one)
                  .has_value());
  smooth_only.add(
      make_fact(kAlgebra, predicate::assume_smooth_forces_minus_one, true));
  auto with_assumption = infer(smooth_only, {pair_kind::same_line, 0}, subjects());
  CHECK(with_assumption.closure.has(kLineA,
                                    predicate::self_intersection_minus_one,
                                    true));
}

TEST_CASE("inference: contradictions are flagged") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::self_intersection_minus_one, true));
  facts.add(make_fact(kLineA, predicate::nonsplit_self_extension, true));
  auto result = infer(facts, {pair_kind::same_line, 0}, subjects());
  CHECK(result.contradiction);
  CHECK_FALSE(result.contradictions.empty());
}

TEST_CASE("inference is monotone and idempotent") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::exceptional_line, true));
  auto once = infer(facts, {pair_kind::same_line, 0}, subjects());
  facts.add(make_fact(kAlgebra, predicate::qgr_smooth, true));
  auto more = infer(facts, {pair_kind::same_line, 0}, subjects());
  for (const auto& f : once.closure.all())
    CHECK(more.closure.has(f.subject, f.pred, f.value));
  auto twice = infer(more.closure, {pair_kind::same_line, 0}, subjects());
  CHECK(same_assertions(twice.closure, more.closure));
}

TEST_CASE("the closure does not depend on rule order") {
  fact_base facts;
  facts.add(make_fact(kLineA, predicate::exceptional_line, true));
  facts.add(make_fact(kAlgebra, predicate::qgr_smooth, true));
  facts.add(make_fact(kPair, predicate::ext1_ideal_pair_two_terms, true));

  std::vector<inference_rule> rules = self_intersection_rules();
  for (auto& r : one_intersection_rules()) rules.push_back(r);
  auto reference = run_rules(facts, rules, subjects());

  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(rules.begin(), rules.end(), rng);
    auto shuffled = run_rules(facts, rules, subjects());
    CHECK(same_assertions(shuffled.closure, reference.closure));
    CHECK(shuffled.contradiction == reference.contradiction);
  }
}

TEST_CASE("truncated sums settle for every defined profile") {
  std::mt19937_64 rng(67);
  std::uniform_int_distribution<long> rank(0, 4);
  std::uniform_int_distribution<int> len(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    ext_rank_profile profile;
    int n = len(rng);
    for (int i = 0; i < n; ++i) profile.prefix.push_back(rank(rng));
    auto value = ms_dot(profile);
    REQUIRE(value.has_value());
    CHECK(ms_dot_partial(profile, 200) == *value);
  }
}

TEST_CASE("the twice-blown-up-point report") {
  auto ctx = std::make_shared<genericity_context>();
  algebra_descriptor T = make_elliptic_algebra(
      ctx, divisor::of_point(curve_point{"M", 0}, 9), smoothness::smooth);
  curve_point p{"P", 0};
  twice_blown_up_data data = twice_blown_up_report(T, p);

  CHECK(data.degrees == std::vector<long>{9, 8, 7});
  CHECK(data.dim_J1 == 6);
  CHECK(data.y_mod_r == hilbert_series::parse("2*s / (1-s)^2"));
  CHECK(data.lines_isomorphic);
  CHECK(data.base == smoothness::smooth);
  CHECK(data.once == smoothness::smooth);
  CHECK(data.twice == smoothness::not_smooth);
  CHECK(data.contractibility_holds);
  CHECK(data.minus_one_excluded);
  CHECK_FALSE(data.contradiction);
  CHECK(data.ms_undefined);
  CHECK(ms_dot_partial(data.profile, 200) < 0);  // partial sums never settle
  CHECK(data.final_degree == 8);
  REQUIRE(data.final_algebra.has_value());
  CHECK(data.final_algebra->degree() == 8);
  // the contraction is legal but carries no smoothness transfer
  CHECK(data.final_algebra->smooth == smoothness::unknown);

  // guards: wrong degree or missing smoothness axiom
  algebra_descriptor T8 = make_elliptic_algebra(
      ctx, divisor::of_point(curve_point{"M", 0}, 8), smoothness::smooth);
  CHECK_THROWS_AS(twice_blown_up_report(T8, p), precondition_error);
  algebra_descriptor T9 =
      make_elliptic_algebra(ctx, divisor::of_point(curve_point{"M", 0}, 9));
  CHECK_THROWS_AS(twice_blown_up_report(T9, p), precondition_error);
}
