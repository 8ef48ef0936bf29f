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

#include "ncsurf/surface.hpp"

namespace ncsurf {

std::string_view smoothness_name(smoothness s) {
  switch (s) {
    case smoothness::smooth: return "smooth";
    case smoothness::not_smooth: return "not-smooth";
    case smoothness::unknown: return "unknown";
  }
  return "";
}

hilbert_series line_series(const line_module_ref& L) {
  return hilbert_series::geometric(2).shifted(-L.shift);
}

line_module_ref line_dual(const line_module_ref& L) {
  long dir = L.side == module_side::right ? -1 : 1;
  module_side flipped =
      L.side == module_side::right ? module_side::left : module_side::right;
  return line_module_ref{tau_power(L.div_point, dir), flipped, -L.shift};
}

std::string line_subject(const algebra_descriptor& A,
                         const line_module_ref& L) {
  std::string out = "line";
  out += L.div_point.to_string();
  out += L.side == module_side::right ? "/right" : "/left";
  if (L.shift != 0) out += "[" + std::to_string(L.shift) + "]";
  out += " over " + A.tcr.twist.to_string();
  return out;
}

std::string algebra_subject(const algebra_descriptor& A) {
  return "algebra " + A.tcr.twist.to_string();
}

bool descriptor_equal(const algebra_descriptor& a, const algebra_descriptor& b) {
  return a.tcr == b.tcr && a.history == b.history && a.smooth == b.smooth &&
         same_assertions(a.facts, b.facts);
}

algebra_descriptor make_elliptic_algebra(
    std::shared_ptr<const genericity_context> ctx, divisor twist,
    smoothness smooth) {
  if (twist.degree() < 3)
    throw precondition_error(
        "an elliptic algebra needs twist degree >= 3; got degree " +
        std::to_string(twist.degree()));
  return algebra_descriptor{tcr_descriptor(std::move(ctx), std::move(twist)),
                            {},
                            smooth,
                            fact_base{}};
}

hilbert_series hilb_R(const algebra_descriptor& A) {
  // g-divisibility turns the quotient series into the series of R itself.
  return hilb_B(A.tcr) * hilbert_series::geometric(1);
}

hilbert_series line_ideal_series(const algebra_descriptor& A,
                                 const line_module_ref& L) {
  return hilb_R(A) - line_series(L);
}

hilbert_series hom_line_ideal_ring_series(const algebra_descriptor& A,
                                          const line_module_ref& L) {
  // hilb Ext^1(L, R) is the dual-line series shifted one step down.
  hilbert_series ext1 = line_series(line_dual(L)).shifted(1);
  return hilb_R(A) + ext1;
}

inference_result line_closure(const algebra_descriptor& A,
                              const line_module_ref& L) {
  fact_base seeded = A.facts;
  if (A.smooth != smoothness::unknown) {
    fact f;
    f.subject = algebra_subject(A);
    f.pred = predicate::qgr_smooth;
    f.value = A.smooth == smoothness::smooth;
    f.prov = provenance_kind::axiom;
    f.detail = "descriptor smoothness status";
    seeded.add(std::move(f));
  }
  rule_subjects subjects{line_subject(A, L), line_subject(A, L),
                         algebra_subject(A), "pair"};
  return run_rules(seeded, self_intersection_rules(), subjects);
}

pdim_state pdim_from_facts(const algebra_descriptor& A,
                           const line_module_ref& L) {
  auto closure = line_closure(A, L).closure;
  auto v = closure.value(line_subject(A, L),
                         predicate::pdim_line_localisation_finite);
  if (!v) return pdim_state::unknown;
  return *v ? pdim_state::finite : pdim_state::infinite;
}

smoothness smoothness_step_blowup(smoothness parent, pdim_state pdim) {
  if (parent == smoothness::not_smooth || pdim == pdim_state::infinite)
    return smoothness::not_smooth;
  if (parent == smoothness::smooth && pdim == pdim_state::finite)
    return smoothness::smooth;
  return smoothness::unknown;
}

smoothness smoothness_step_blowdown(smoothness parent,
                                    bool transfer_hypothesis) {
  return transfer_hypothesis ? parent : smoothness::unknown;
}

blowup_result blowup(const algebra_descriptor& A, const curve_point& p,
                     pdim_state pdim_hint,
                     const std::vector<fact>& exceptional_facts) {
  if (A.degree() < 4)
    throw precondition_error(
        "blowup requires degree >= 4 so the blown-up algebra keeps degree >= 3; "
        "got degree " +
        std::to_string(A.degree()));

  blowup_result out{
      algebra_descriptor{
          tcr_descriptor(A.tcr.ctx, A.tcr.twist - divisor::of_point(p)),
          A.history, smoothness::unknown, A.facts},
      line_module_ref{tau_power(p, 1), module_side::right, 0}};
  out.algebra.history.push_back(
      {blow_event::kind_t::up, p, A.degree()});

  const std::string subject = line_subject(out.algebra, out.exceptional);
  {
    fact f;
    f.subject = subject;
    f.pred = predicate::exceptional_line;
    f.value = true;
    f.prov = provenance_kind::axiom;
    f.detail = "blowup at " + p.to_string();
    out.algebra.facts.add(std::move(f));
  }
  {
    // End(J) is the neighbouring blowup, one translation step forward.
    fact f;
    f.subject = subject;
    f.pred = predicate::end_ring_identified;
    f.value = true;
    f.prov = provenance_kind::axiom;
    f.detail = "blowup of the parent at " + tau_power(p, 1).to_string() +
               ", twist " +
               (A.tcr.twist - divisor::of_point(tau_power(p, 1))).to_string();
    out.algebra.facts.add(std::move(f));
  }
  if (pdim_hint != pdim_state::unknown) {
    fact f;
    f.subject = subject;
    f.pred = predicate::pdim_line_localisation_finite;
    f.value = pdim_hint == pdim_state::finite;
    f.prov = provenance_kind::declared;
    out.algebra.facts.add(std::move(f));
  }
  for (fact f : exceptional_facts) {
    f.subject = subject;
    out.algebra.facts.add(std::move(f));
  }

  pdim_state pdim = pdim_hint != pdim_state::unknown
                        ? pdim_hint
                        : pdim_from_facts(out.algebra, out.exceptional);
  out.algebra.smooth = smoothness_step_blowup(A.smooth, pdim);
  return out;
}

algebra_descriptor blowdown(const algebra_descriptor& A,
                            const line_module_ref& L) {
  if (L.side != module_side::right || L.shift != 0)
    throw precondition_error(
        "blowdown contracts a right line module with shift 0; dualize or "
        "normalize first");

  auto closure = line_closure(A, L);
  auto end_match = closure.closure.value(line_subject(A, L),
                                         predicate::end_series_matches_ring);
  if (!end_match || !*end_match)
    throw precondition_error(
        "blowdown of " + line_subject(A, L) +
        " needs the contractibility identity hilb End(J) = hilb R; it follows "
        "from exceptional-line provenance, from self-intersection -1, or from "
        "vanishing self-extensions, or declare end-series-matches-ring");

  algebra_descriptor out{
      tcr_descriptor(A.tcr.ctx,
                     A.tcr.twist + divisor::of_point(tau_power(L.div_point, -1))),
      A.history, smoothness::unknown,
      A.facts.without_subject(line_subject(A, L))};

  if (!out.history.empty() && out.history.back().kind == blow_event::kind_t::up &&
      tau_power(out.history.back().point, 1) == L.div_point) {
    out.history.pop_back();
  } else {
    out.history.push_back({blow_event::kind_t::down,
                           tau_power(L.div_point, -1), A.degree()});
  }

  // The extension the contraction adds is a tail of shifted lines; check the
  // series bookkeeping agrees before committing.
  hilbert_series delta = hilb_R(out) - hilb_R(A);
  hilbert_series expected =
      hilbert_series::monomial(1) * hilbert_series::geometric(3);
  if (!(delta == expected))
    throw inconsistency_error("blowdown series delta is not s/(1-s)^3: got " +
                              delta.to_string());

  bool transfer =
      closure.closure.has(line_subject(A, L),
                          predicate::self_intersection_minus_one, true) &&
      closure.closure.has(line_subject(A, L),
                          predicate::pdim_line_localisation_finite, true);
  out.smooth = smoothness_step_blowdown(A.smooth, transfer);
  return out;
}

tilde_report tilde_extension_series(const hilbert_series& K_series,
                                    const hilbert_series& p_s) {
  if (!p_s.nonneg())
    throw std::invalid_argument(
        "the multiplicity series of a tilde extension must be nonnegative");
  tilde_report out;
  out.base = K_series;
  out.multiplicity = p_s;
  out.extension = K_series + p_s * hilbert_series::geometric(2);
  out.ext1 = p_s * hilbert_series::geometric(1);
  return out;
}

}  // namespace ncsurf
