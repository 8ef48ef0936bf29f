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

#include "ncsurf/tcr.hpp"

#include <exception>
#include <stdexcept>

namespace ncsurf {

long h0(const genericity_context& ctx, const divisor& D) {
  long deg = D.degree();
  if (deg >= 1) return deg;
  if (deg <= -1) return 0;
  return ctx.is_principal(D) ? 1 : 0;
}

tcr_descriptor::tcr_descriptor(std::shared_ptr<const genericity_context> c,
                               divisor M)
    : ctx(std::move(c)), twist(std::move(M)) {
  if (!ctx) throw std::invalid_argument("tcr descriptor needs a curve context");
  if (twist.degree() < 1)
    throw std::invalid_argument("tcr twist must have degree >= 1");
}

divisor saturated_degree_divisor(const tcr_descriptor& B, const divisor& F,
                                 const divisor& G, long n) {
  return pullback(-F, n) + G + chain_divisor(B.twist, n);
}

namespace {

// ceil(a/b) for b > 0; integer division truncates toward zero
long ceil_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && a > 0) ? q + 1 : q;
}

}  // namespace

saturated_hom hom_saturated(const tcr_descriptor& B, const divisor& F,
                            const divisor& G) {
  const long mu = B.degree();
  const long d0 = G.degree() - F.degree();
  // degree of the n-th divisor is d0 + n*mu
  const long n_linear = ceil_div(1 - d0, mu);  // first n with degree >= 1
  hilbert_series series;
  {
    // sum_{n >= n_linear} (d0 + n*mu) s^n
    //   = s^n_linear * (A(1-s) + mu*s) / (1-s)^2,  A = d0 + n_linear*mu
    const long A = d0 + n_linear * mu;
    laurent num = laurent::constant(A).times_one_minus_s() +
                  laurent(1, mpz_class(mu));
    series = hilbert_series(num, 2).shifted(n_linear);
  }
  saturated_hom out;
  if (d0 % mu == 0) {
    // a single degree-zero spot, where principality decides the count
    const long n_flat = -d0 / mu;
    divisor D = saturated_degree_divisor(B, F, G, n_flat);
    if (B.ctx->is_principal(D)) series = series + hilbert_series::monomial(n_flat);
  }
  out.series = series;
  for (long n = n_linear - 2; n <= n_linear + 2; ++n) {
    divisor D = saturated_degree_divisor(B, F, G, n);
    out.rows.push_back({n, D, h0(*B.ctx, D)});
  }
  return out;
}

hilbert_series hilb_B(const tcr_descriptor& B) {
  return hom_saturated(B, divisor{}, divisor{}).series;
}

hilbert_series hilb_saturated(const tcr_descriptor& B, const divisor& F) {
  return hom_saturated(B, divisor{}, F).series;
}

std::vector<long> h0_window_serial(const tcr_descriptor& B, const divisor& F,
                                   const divisor& G, long lo, long hi) {
  if (hi < lo) return {};
  std::vector<long> out(static_cast<size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n)
    out[static_cast<size_t>(n - lo)] =
        h0(*B.ctx, saturated_degree_divisor(B, F, G, n));
  return out;
}

std::vector<long> h0_window(const tcr_descriptor& B, const divisor& F,
                            const divisor& G, long lo, long hi) {
  if (hi < lo) return {};
  std::vector<long> out(static_cast<size_t>(hi - lo + 1));
  const long count = hi - lo + 1;
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) {
    // exceptions must not unwind out of the parallel region
    try {
      out[static_cast<size_t>(i)] =
          h0(*B.ctx, saturated_degree_divisor(B, F, G, lo + i));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

point_module_ref normalize_truncation(const point_module_ref& ref) {
  if (ref.shift < 0)
    throw std::invalid_argument(
        "truncation rule only normalizes nonnegative shifts");
  long dir = ref.side == module_side::right ? 1 : -1;
  return point_module_ref{tau_power(ref.point, dir * ref.shift), ref.side, 0};
}

namespace {

void require_degree(const tcr_descriptor& B, long min_degree) {
  if (B.degree() < min_degree)
    throw std::invalid_argument("twist degree >= " +
                                std::to_string(min_degree) + " required");
}

void require_same_side(const point_module_ref& p, const point_module_ref& q) {
  if (p.side != q.side)
    throw std::invalid_argument("point module tables need a common side");
}

// j with p = tau^j(q) for right modules; the left-side tables run against
// the translation, so there the roles of p and q swap.
std::optional<long> table_offset(const tcr_descriptor& B,
                                 const point_module_ref& p,
                                 const point_module_ref& q) {
  auto j = B.ctx->orbit_offset(p.point, q.point);
  if (!j) return std::nullopt;
  return p.side == module_side::right ? *j : -*j;
}

}  // namespace

hilbert_series point_hom(const tcr_descriptor& B, const point_module_ref& p,
                         const point_module_ref& q) {
  require_degree(B, 3);
  require_same_side(p, q);
  auto j = table_offset(B, p, q);
  hilbert_series table;
  if (j && *j >= 0) table = hilbert_series::monomial(*j);
  return table.shifted(p.shift - q.shift);
}

hilbert_series point_ext1(const tcr_descriptor& B, const point_module_ref& p,
                          const point_module_ref& q) {
  require_degree(B, 3);
  require_same_side(p, q);
  auto j = table_offset(B, p, q);
  hilbert_series table = hilbert_series::monomial(-1);
  if (j && *j >= 0) table = table + hilbert_series::monomial(*j);
  return table.shifted(p.shift - q.shift);
}

std::pair<hilbert_series, hilbert_series> point_qgr_homext(
    const tcr_descriptor& B, const point_module_ref& p,
    const point_module_ref& q) {
  require_degree(B, 2);
  require_same_side(p, q);
  auto j = table_offset(B, p, q);
  hilbert_series table;
  if (j) table = hilbert_series::monomial(*j);
  table = table.shifted(p.shift - q.shift);
  return {table, table};
}

point_module_ref point_dual(const tcr_descriptor& B, const point_module_ref& p) {
  require_degree(B, 3);
  if (p.shift != 0)
    throw std::invalid_argument(
        "dual of a shifted point module: normalize the shift away first");
  long dir = p.side == module_side::right ? -1 : 1;
  module_side flipped =
      p.side == module_side::right ? module_side::left : module_side::right;
  return point_module_ref{tau_power(p.point, 2 * dir), flipped, -1};
}

}  // namespace ncsurf
