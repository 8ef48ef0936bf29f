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

#include <memory>
#include <utility>
#include <vector>

#include "ncsurf/curve.hpp"
#include "ncsurf/hilbert_series.hpp"

// The twisted homogeneous coordinate ring layer: section counts of divisors
// on the curve, the Hilbert series of B(E, M, tau) and of its saturated
// submodules, Hom series between those, and the Hom/Ext tables for point
// modules.

namespace ncsurf {

// h^0 of a divisor on an elliptic curve: the degree when it is positive,
// nothing when it is negative, and in degree zero exactly the principal
// divisors contribute one section.
long h0(const genericity_context& ctx, const divisor& D);

struct tcr_descriptor {
  std::shared_ptr<const genericity_context> ctx;
  divisor twist;  // M

  tcr_descriptor(std::shared_ptr<const genericity_context> c, divisor M);
  long degree() const { return twist.degree(); }
  bool operator==(const tcr_descriptor& rhs) const {
    return ctx == rhs.ctx && twist == rhs.twist;
  }
};

// Divisor of the degree-n piece of Hom between the saturated modules twisted
// by F and G: pull (-F) back along tau^n, then add G and the chain of M.
divisor saturated_degree_divisor(const tcr_descriptor& B, const divisor& F,
                                 const divisor& G, long n);

struct degree_row {
  long n;
  divisor div;
  long sections;
};

struct saturated_hom {
  hilbert_series series;
  std::vector<degree_row> rows;  // audit rows through the stabilisation degree
};

// Hom series between the saturated submodules with twists F and G, in closed
// form.  The per-degree section count is linear in n as soon as the degree
// of the n-th divisor passes zero, which happens at a single computable n;
// everything below is a finite correction.
saturated_hom hom_saturated(const tcr_descriptor& B, const divisor& F,
                            const divisor& G);

// hilb B = hom_saturated(0, 0); hilb of the twist-F module = hom_saturated(0, F).
hilbert_series hilb_B(const tcr_descriptor& B);
hilbert_series hilb_saturated(const tcr_descriptor& B, const divisor& F);

// Windowed per-degree section counts for the same Hom family.  Each degree
// is independent, so the parallel variant fans the window out with OpenMP;
// the serial variant is the reference implementation kept for testing, and
// also serves as the independent cross-check of the closed forms above.
std::vector<long> h0_window_serial(const tcr_descriptor& B, const divisor& F,
                                   const divisor& G, long lo, long hi);
std::vector<long> h0_window(const tcr_descriptor& B, const divisor& F,
                            const divisor& G, long lo, long hi);

enum class module_side { left, right };

struct point_module_ref {
  curve_point point;
  module_side side = module_side::right;
  long shift = 0;  // the ref stands for M_p[shift]; its series is s^-shift/(1-s)
  bool operator==(const point_module_ref&) const = default;
};

// Truncated shift rule: shifting by n >= 0 and truncating to nonnegative
// degrees moves the point n steps along the orbit (forwards on the right,
// backwards on the left) and resets the shift to zero.
point_module_ref normalize_truncation(const point_module_ref& ref);

// Hom and Ext^1 between graded point modules (both on the same side).
// Requires twist degree >= 3.
hilbert_series point_hom(const tcr_descriptor& B, const point_module_ref& p,
                         const point_module_ref& q);
hilbert_series point_ext1(const tcr_descriptor& B, const point_module_ref& p,
                          const point_module_ref& q);

// Hom and Ext^1 in the quotient category; degree >= 2 suffices here, and the
// orbit offset may have either sign.  Ext vanishes from degree 2 on.
std::pair<hilbert_series, hilbert_series> point_qgr_homext(
    const tcr_descriptor& B, const point_module_ref& p,
    const point_module_ref& q);

// Dual point module Ext^1(M_p, B): side flips, the point moves two steps
// against the translation, and the grading drops by one.  Inputs must have
// shift zero; normalize through the truncation rule first.
point_module_ref point_dual(const tcr_descriptor& B, const point_module_ref& p);

}  // namespace ncsurf
