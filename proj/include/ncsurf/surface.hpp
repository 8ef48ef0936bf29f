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

#include "ncsurf/facts.hpp"
#include "ncsurf/tcr.hpp"

// Elliptic-algebra descriptors and the blowup/blowdown state machine.  A
// descriptor tracks the shadow of the algebra: the twist divisor of its
// degree-one quotient, the blowup history, a smoothness status and a fact
// base.  Blowing up removes a point from the twist and creates an
// exceptional line one translation step forward; blowing down a line with
// the contractibility property adds the point one step back.

namespace ncsurf {

class precondition_error : public std::runtime_error {
 public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

class inconsistency_error : public std::runtime_error {
 public:
  explicit inconsistency_error(const std::string& what)
      : std::runtime_error(what) {}
};

enum class smoothness { smooth, not_smooth, unknown };
std::string_view smoothness_name(smoothness s);

enum class pdim_state { finite, infinite, unknown };

struct line_module_ref {
  curve_point div_point;
  module_side side = module_side::right;
  long shift = 0;
  bool operator==(const line_module_ref&) const = default;
};

// hilb of the line module the ref stands for: s^-shift/(1-s)^2.
hilbert_series line_series(const line_module_ref& L);
// Dual line module: the side flips, the divisor point steps back along the
// translation on the right and forward on the left, the shift negates.
line_module_ref line_dual(const line_module_ref& L);

struct blow_event {
  enum class kind_t { up, down };
  kind_t kind = kind_t::up;
  curve_point point;
  long parent_degree = 0;
  bool operator==(const blow_event&) const = default;
};

struct algebra_descriptor {
  tcr_descriptor tcr;
  std::vector<blow_event> history;
  smoothness smooth = smoothness::unknown;
  fact_base facts;

  long degree() const { return tcr.degree(); }
};

std::string algebra_subject(const algebra_descriptor& A);
// Fact subjects are scoped to their algebra: homological statements about a
// line module do not transport across a blowup even when the divisor point
// does.
std::string line_subject(const algebra_descriptor& A, const line_module_ref& L);

// Twist divisor, history, smoothness and asserted facts all agree.
bool descriptor_equal(const algebra_descriptor& a, const algebra_descriptor& b);

// Degree >= 3 is enforced here and maintained by every operation.
algebra_descriptor make_elliptic_algebra(
    std::shared_ptr<const genericity_context> ctx, divisor twist,
    smoothness smooth = smoothness::unknown);

hilbert_series hilb_R(const algebra_descriptor& A);

// hilb J = hilb R - hilb L for the line ideal of L.
hilbert_series line_ideal_series(const algebra_descriptor& A,
                                 const line_module_ref& L);
// hilb Hom(J, R) = hilb R + hilb Ext^1(L, R), with the Ext series read off
// the dual-line bookkeeping.
hilbert_series hom_line_ideal_ring_series(const algebra_descriptor& A,
                                          const line_module_ref& L);

struct blowup_result {
  algebra_descriptor algebra;
  line_module_ref exceptional;
};

// Requires degree >= 4 so the result is again an elliptic algebra of degree
// >= 3.  The optional hint declares the projective dimension of the
// localised exceptional line, feeding the smoothness propagation.  Facts in
// exceptional_facts are recorded about the new exceptional line (their
// subject field is overwritten) before the propagation runs.
blowup_result blowup(const algebra_descriptor& A, const curve_point& p,
                     pdim_state pdim_hint = pdim_state::unknown,
                     const std::vector<fact>& exceptional_facts = {});

// Contraction along L.  Refuses unless the fact closure establishes the
// End-series match for L; lists the sufficient conditions in the error.
algebra_descriptor blowdown(const algebra_descriptor& A,
                            const line_module_ref& L);

// Closure of the descriptor's facts under the single-line rules, with the
// descriptor's smoothness status seeded as a fact about the algebra.
inference_result line_closure(const algebra_descriptor& A,
                              const line_module_ref& L);

// Projective dimension of the localised line module as the facts know it.
pdim_state pdim_from_facts(const algebra_descriptor& A,
                           const line_module_ref& L);

smoothness smoothness_step_blowup(smoothness parent, pdim_state pdim);
// Transfers the parent status only when the finite-pdim and (-1) hypotheses
// are available; otherwise the status is unknown.
smoothness smoothness_step_blowdown(smoothness parent, bool transfer_hypothesis);

struct tilde_report {
  hilbert_series base;          // hilb K
  hilbert_series multiplicity;  // p(s), the shifted-line multiplicities
  hilbert_series extension;     // hilb K~ = base + p(s)/(1-s)^2
  hilbert_series ext1;          // hilb Ext^1(L, K) = p(s)/(1-s)
};

// The maximal extension of K by shifted copies of a line module, at series
// level.  p_s must have nonnegative coefficients.
tilde_report tilde_extension_series(const hilbert_series& K_series,
                                    const hilbert_series& p_s);

}  // namespace ncsurf
