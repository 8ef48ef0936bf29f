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

#include "ncsurf/intersection.hpp"

#include <stdexcept>

namespace ncsurf {

pair_relation classify_pair(const genericity_context& ctx,
                            const line_module_ref& L,
                            const line_module_ref& Lp) {
  if (L == Lp) return {pair_kind::same_line, 0};
  auto j = ctx.orbit_offset(L.div_point, Lp.div_point);
  if (j) return {pair_kind::on_orbit, *j};
  return {pair_kind::off_orbit, 0};
}

ledger_candidates ledger(const pair_relation& rel) {
  const hilbert_series sm1 = hilbert_series::monomial(-1);
  ledger_candidates out;
  switch (rel.kind) {
    case pair_kind::same_line:
      out.H = hilbert_series::one();
      out.E = sm1 + out.H;
      // The End series is pinned, so the connecting image either vanishes
      // (the (-1) endpoint) or is the whole degree -1 piece.
      out.C_options = {hilbert_series::zero(), sm1};
      break;
    case pair_kind::on_orbit:
      if (rel.j >= 0) {
        out.H = hilbert_series::monomial(rel.j);
        out.E = sm1 + out.H;
        // Distinct lines force a nonzero image.
        out.C_options = {out.H, sm1, sm1 + out.H};
        break;
      }
      [[fallthrough]];
    case pair_kind::off_orbit:
      out.H = hilbert_series::zero();
      out.E = sm1;
      out.C_options = {hilbert_series::zero(), sm1};
      break;
  }
  return out;
}

hilbert_series x_series(const pair_relation& rel, const hilbert_series& C) {
  hilbert_series diff = C - ledger(rel).H;
  if (diff.pole_order() != 0)
    throw std::invalid_argument("C must be a polynomial ledger entry");
  return hilbert_series(diff.numerator(), 1);
}

long dot(const pair_relation& rel, const hilbert_series& C) {
  hilbert_series diff = C - ledger(rel).H;
  if (diff.pole_order() != 0)
    throw std::invalid_argument("C must be a polynomial ledger entry");
  mpz_class sum = diff.numerator().value_at_one();
  if (!sum.fits_slong_p())
    throw std::logic_error("intersection number out of range");
  return sum.get_si();
}

std::vector<ledger_entry> ledger_candidates::entries(
    const pair_relation& rel) const {
  std::vector<ledger_entry> out;
  for (const auto& C : C_options)
    out.push_back({C, x_series(rel, C), dot(rel, C)});
  return out;
}

line_hom_result line_hom_candidates(const pair_relation& rel) {
  switch (rel.kind) {
    case pair_kind::same_line:
      // End(L) is the central polynomial ring; no dichotomy here.
      return {hilbert_series::geometric(1), false};
    case pair_kind::on_orbit:
      if (rel.j >= 0)
        return {hilbert_series::monomial(rel.j) * hilbert_series::geometric(1),
                true};
      [[fallthrough]];
    case pair_kind::off_orbit:
      return {hilbert_series::zero(), false};
  }
  return {hilbert_series::zero(), false};
}

long ext_rank_profile::rank_at(long n) const {
  if (n < 0) throw std::invalid_argument("Ext index must be nonnegative");
  if (n < static_cast<long>(prefix.size())) return prefix[static_cast<size_t>(n)];
  if (tail.empty()) return 0;
  return tail[static_cast<size_t>((n - prefix.size()) % tail.size())];
}

bool ext_rank_profile::eventually_zero() const {
  for (long r : tail)
    if (r != 0) return false;
  return true;
}

std::optional<long> ms_dot(const ext_rank_profile& profile) {
  if (!profile.eventually_zero()) return std::nullopt;
  long sum = 0;
  for (size_t n = 0; n < profile.prefix.size(); ++n)
    sum += (n % 2 == 0 ? -1 : 1) * profile.prefix[n];
  return sum;
}

long ms_dot_partial(const ext_rank_profile& profile, long upto) {
  long sum = 0;
  for (long n = 0; n <= upto; ++n)
    sum += (n % 2 == 0 ? -1 : 1) * profile.rank_at(n);
  return sum;
}

homjj_result hom_JJ_series(const pair_relation& rel,
                           const hilbert_series& im_alpha,
                           const hilbert_series& hilb_R) {
  if (!im_alpha.nonneg())
    throw std::invalid_argument("im_alpha must have nonnegative coefficients");
  bool points_equal = rel.kind == pair_kind::same_line ||
                      (rel.kind == pair_kind::on_orbit && rel.j == 0);
  hilbert_series eps_term =
      points_equal ? hilbert_series::zero()
                   : hilbert_series(laurent::constant(-1), 1);
  hilbert_series out =
      hilb_R + eps_term - im_alpha * hilbert_series::geometric(1);
  return {out, out.nonneg()};
}

inference_result infer(const fact_base& facts, const pair_relation& rel,
                       const rule_subjects& subjects) {
  std::vector<inference_rule> rules = self_intersection_rules();
  if (rel.kind != pair_kind::same_line) {
    // The per-line rules apply to the second line too.
    for (auto& r : self_intersection_rules()) {
      auto remap = [](rule_literal l) {
        if (l.slot == rule_slot::line_a) l.slot = rule_slot::line_b;
        return l;
      };
      inference_rule copy = r;
      for (auto& prem : copy.premises) prem = remap(prem);
      copy.conclusion = remap(copy.conclusion);
      rules.push_back(std::move(copy));
    }
    for (auto& r : one_intersection_rules()) rules.push_back(std::move(r));
  }
  bool divisors_distinct =
      rel.kind == pair_kind::off_orbit ||
      (rel.kind == pair_kind::on_orbit && rel.j != 0);
  if (divisors_distinct)
    for (auto& r : zero_intersection_rules()) rules.push_back(std::move(r));

  inference_result out = run_rules(facts, rules, subjects);
  if (rel.kind == pair_kind::on_orbit && rel.j == 0)
    out.notes.push_back(
        "distinct lines with equal divisors fall outside the "
        "zero-intersection characterisation");
  return out;
}

twice_blown_up_data twice_blown_up_report(const algebra_descriptor& base,
                              const curve_point& p) {
  if (base.degree() != 9)
    throw precondition_error("the twice-blown-up-point report starts from a "
                             "degree-9 algebra");
  if (base.smooth != smoothness::smooth)
    throw precondition_error("the twice-blown-up-point report needs the base "
                             "algebra declared smooth");

  twice_blown_up_data out;
  out.base = base.smooth;
  out.degrees.push_back(base.degree());

  // First blowup: smooth, with the finite-pdim hypothesis recorded for its
  // exceptional line.
  blowup_result once = blowup(base, p, pdim_state::finite);
  out.once = once.algebra.smooth;
  out.degrees.push_back(once.algebra.degree());

  // The stated facts about the second exceptional line ride along with the
  // blowup, so the smoothness propagation can read the projective-dimension
  // consequence off them.
  line_module_ref second{tau_power(p, 1), module_side::right, 0};
  std::vector<fact> stated(2);
  stated[0].pred = predicate::ideal_localisation_projective;
  stated[0].value = false;
  stated[0].prov = provenance_kind::axiom;
  stated[0].detail = "the localised line ideal generates but is not projective";
  stated[1].pred = predicate::nonsplit_self_extension;
  stated[1].value = true;
  stated[1].prov = provenance_kind::axiom;
  stated[1].detail =
      "the overring quotient is a nonsplit extension of the line by itself";

  blowup_result twice = blowup(once.algebra, p, pdim_state::unknown, stated);
  out.twice = twice.algebra.smooth;
  out.degrees.push_back(twice.algebra.degree());
  {
    fact f;
    f.subject = algebra_subject(twice.algebra);
    f.pred = predicate::ring_localisation_simple;
    f.value = true;
    f.prov = provenance_kind::axiom;
    twice.algebra.facts.add(std::move(f));
  }

  if (!(twice.exceptional == second))
    throw inconsistency_error("second exceptional line moved unexpectedly");
  out.lines_isomorphic = once.exceptional.div_point == twice.exceptional.div_point;

  out.dim_J1 =
      line_ideal_series(twice.algebra, twice.exceptional).coeff(1).get_si();

  // The overring quotient is built from two shifted copies of the line.
  out.y_mod_r = line_series(second).shifted(1).scaled(2);

  const std::string subject = line_subject(twice.algebra, second);
  out.closure = line_closure(twice.algebra, second);
  out.contradiction = out.closure.contradiction;
  out.contractibility_holds = out.closure.closure.has(
      subject, predicate::end_series_matches_ring, true);
  out.minus_one_excluded = out.closure.closure.has(
      subject, predicate::self_intersection_minus_one, false);

  // Stated Ext tower of the localised line: rank one in degrees 0 and 1,
  // and a nonvanishing constant tower from degree 2 on.
  out.profile = ext_rank_profile{{1, 1}, {1}};
  out.ms_undefined = !ms_dot(out.profile).has_value();

  algebra_descriptor contracted = blowdown(twice.algebra, second);
  out.final_degree = contracted.degree();
  out.final_algebra = std::move(contracted);
  return out;
}

}  // namespace ncsurf
