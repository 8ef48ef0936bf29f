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

#include <optional>
#include <vector>

#include "ncsurf/surface.hpp"

// Intersection numbers of line modules.  The Hom/Ext ledger between the two
// point-module quotients pins H and E exactly; the connecting image C is a
// genuine dichotomy, so operations enumerate the admissible candidates and
// never pick one silently.  The truncated intersection number is the
// coefficient sum of C - H and always lands in {-1, 0, 1}.

namespace ncsurf {

enum class pair_kind { same_line, on_orbit, off_orbit };

struct pair_relation {
  pair_kind kind = pair_kind::off_orbit;
  long j = 0;  // for on_orbit: Div L = tau^j(Div L')
  bool operator==(const pair_relation&) const = default;
};

pair_relation classify_pair(const genericity_context& ctx,
                            const line_module_ref& L,
                            const line_module_ref& Lp);

struct ledger_entry {
  hilbert_series C;
  hilbert_series X;  // (C - H)/(1-s)
  long dot = 0;
};

struct ledger_candidates {
  hilbert_series H;
  hilbert_series E;
  std::vector<hilbert_series> C_options;
  std::vector<ledger_entry> entries(const pair_relation& rel) const;
};

ledger_candidates ledger(const pair_relation& rel);

hilbert_series x_series(const pair_relation& rel, const hilbert_series& C);

// Coefficient sum of C - H; equals the rank at one of the X series.
long dot(const pair_relation& rel, const hilbert_series& C);

// Hom series between two line modules: exact for the same line and for
// disjoint orbits, a dichotomy (zero or the stated series) along an orbit.
struct line_hom_result {
  hilbert_series series;
  bool conditional;  // true when the nonzero branch is only a candidate
};
line_hom_result line_hom_candidates(const pair_relation& rel);

// Ranks of the Ext tower in the localised category, given as a prefix plus
// an eventually repeating block (an empty block means eventual zero).
struct ext_rank_profile {
  std::vector<long> prefix;
  std::vector<long> tail;

  long rank_at(long n) const;
  bool eventually_zero() const;
};

// Alternating sum over the Ext tower; undefined when the ranks do not
// eventually vanish.
std::optional<long> ms_dot(const ext_rank_profile& profile);
long ms_dot_partial(const ext_rank_profile& profile, long upto);

struct homjj_result {
  hilbert_series series;
  bool consistent;  // false when a negative coefficient flags bad inputs
};

// hilb Hom(J,J') = hilb R + (eps - 1)/(1-s) - im_alpha/(1-s), with eps = 1
// exactly when the two divisor points coincide.
homjj_result hom_JJ_series(const pair_relation& rel,
                           const hilbert_series& im_alpha,
                           const hilbert_series& hilb_R);

// Closure of a fact set under the rule families the relation admits.  The
// zero-intersection family needs distinct divisors; distinct lines sharing
// a divisor fall outside its coverage and the result says so.
inference_result infer(const fact_base& facts, const pair_relation& rel,
                       const rule_subjects& subjects);

// The twice-blown-up-point pathology: starting from a degree-9 algebra
// declared smooth, blow the same point up twice, assemble the stated facts
// about the second exceptional line, and read off the ledger.
struct twice_blown_up_data {
  std::vector<long> degrees;           // 9, 8, 7 along the chain
  long dim_J1 = 0;                     // first graded piece of the line ideal
  hilbert_series y_mod_r;              // two shifted copies of the line
  bool lines_isomorphic = false;       // both exceptional lines share a divisor
  smoothness base = smoothness::unknown;
  smoothness once = smoothness::unknown;
  smoothness twice = smoothness::unknown;
  bool contractibility_holds = false;  // End-series match in the closure
  bool minus_one_excluded = false;     // closure rules out (L.L) = -1
  bool contradiction = false;
  ext_rank_profile profile;            // stated Ext tower of the line
  bool ms_undefined = false;
  long final_degree = 0;               // after contracting the line anyway
  std::optional<algebra_descriptor> final_algebra;
  inference_result closure;
};

twice_blown_up_data twice_blown_up_report(const algebra_descriptor& base,
                              const curve_point& p);

}  // namespace ncsurf
