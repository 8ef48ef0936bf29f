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

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

// Exact chord-tangent arithmetic on y^2 = x^3 + a*x + b, over Q or over a
// prime field F_p (p > 3).  This is the concrete ground truth behind the
// symbolic principality test: a degree-zero divisor is principal exactly
// when its group-law sum is the identity.

namespace ncsurf {

struct rational_field {
  using element = mpq_class;
  element add(const element& x, const element& y) const { return x + y; }
  element sub(const element& x, const element& y) const { return x - y; }
  element mul(const element& x, const element& y) const { return x * y; }
  element div(const element& x, const element& y) const { return x / y; }
  element neg(const element& x) const { return -x; }
  element from_long(long v) const { return element(v); }
  bool is_zero(const element& x) const { return x == 0; }
  bool equal(const element& x, const element& y) const { return x == y; }
  std::string to_string(const element& x) const { return x.get_str(); }
};

struct prime_field {
  explicit prime_field(mpz_class modulus);
  using element = mpz_class;  // reduced representative in [0, p)
  mpz_class p;
  element reduce(const mpz_class& v) const;
  element add(const element& x, const element& y) const { return reduce(x + y); }
  element sub(const element& x, const element& y) const { return reduce(x - y); }
  element mul(const element& x, const element& y) const { return reduce(x * y); }
  element div(const element& x, const element& y) const;
  element neg(const element& x) const { return reduce(-x); }
  element from_long(long v) const { return reduce(mpz_class(v)); }
  bool is_zero(const element& x) const { return x == 0; }
  bool equal(const element& x, const element& y) const { return x == y; }
  std::string to_string(const element& x) const { return x.get_str(); }
};

template <class F>
struct ec_point {
  bool infinity = true;
  typename F::element x{};
  typename F::element y{};
};

template <class F>
class weierstrass_curve {
 public:
  weierstrass_curve(F field, typename F::element a, typename F::element b)
      : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
    // disc = -16(4a^3 + 27b^2) must not vanish
    auto four_a3 = field_.mul(field_.from_long(4),
                              field_.mul(a_, field_.mul(a_, a_)));
    auto twentyseven_b2 =
        field_.mul(field_.from_long(27), field_.mul(b_, b_));
    if (field_.is_zero(field_.add(four_a3, twentyseven_b2)))
      throw std::invalid_argument("singular curve: discriminant vanishes");
  }

  const F& field() const { return field_; }
  const typename F::element& a() const { return a_; }
  const typename F::element& b() const { return b_; }

  ec_point<F> infinity_point() const { return ec_point<F>{}; }

  bool on_curve(const ec_point<F>& P) const {
    if (P.infinity) return true;
    auto lhs = field_.mul(P.y, P.y);
    auto rhs = field_.add(field_.mul(P.x, field_.mul(P.x, P.x)),
                          field_.add(field_.mul(a_, P.x), b_));
    return field_.equal(lhs, rhs);
  }

  ec_point<F> make_point(typename F::element x, typename F::element y) const {
    ec_point<F> P{false, std::move(x), std::move(y)};
    if (!on_curve(P)) throw std::invalid_argument("point is not on the curve");
    return P;
  }

  bool equal(const ec_point<F>& P, const ec_point<F>& Q) const {
    if (P.infinity || Q.infinity) return P.infinity == Q.infinity;
    return field_.equal(P.x, Q.x) && field_.equal(P.y, Q.y);
  }

  ec_point<F> negate(const ec_point<F>& P) const {
    if (P.infinity) return P;
    return ec_point<F>{false, P.x, field_.neg(P.y)};
  }

  ec_point<F> add(const ec_point<F>& P, const ec_point<F>& Q) const {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (field_.equal(P.x, Q.x)) {
      if (field_.equal(P.y, field_.neg(Q.y))) return infinity_point();
      // doubling; y != 0 here since P = -P was excluded above
      auto num = field_.add(
          field_.mul(field_.from_long(3), field_.mul(P.x, P.x)), a_);
      auto den = field_.mul(field_.from_long(2), P.y);
      return chord(P, Q, field_.div(num, den));
    }
    auto lambda = field_.div(field_.sub(Q.y, P.y), field_.sub(Q.x, P.x));
    return chord(P, Q, lambda);
  }

  ec_point<F> scalar_mul(const mpz_class& n, const ec_point<F>& P) const {
    mpz_class k = n;
    ec_point<F> base = P;
    if (k < 0) {
      k = -k;
      base = negate(base);
    }
    ec_point<F> acc = infinity_point();
    while (k > 0) {
      if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base);
      k >>= 1;
      if (k > 0) base = add(base, base);
    }
    return acc;
  }

 private:
  ec_point<F> chord(const ec_point<F>& P, const ec_point<F>& Q,
                    const typename F::element& lambda) const {
    auto x3 = field_.sub(field_.sub(field_.mul(lambda, lambda), P.x), Q.x);
    auto y3 = field_.sub(field_.mul(lambda, field_.sub(P.x, x3)), P.y);
    return ec_point<F>{false, std::move(x3), std::move(y3)};
  }

  F field_;
  typename F::element a_;
  typename F::element b_;
};

template <class F>
struct weighted_point {
  ec_point<F> point;
  long multiplicity;
};

template <class F>
ec_point<F> divisor_sum(const weierstrass_curve<F>& curve,
                        const std::vector<weighted_point<F>>& terms) {
  ec_point<F> acc = curve.infinity_point();
  for (const auto& t : terms)
    acc = curve.add(acc, curve.scalar_mul(mpz_class(t.multiplicity), t.point));
  return acc;
}

struct guard_result {
  bool ok = true;
  long offending = 0;  // smallest n with n*t = O when !ok
};

// Checks that no multiple n*t with 1 <= n <= horizon vanishes.  Over Q the
// torsion order of a rational point is at most 12, so twelve multiples
// settle the question for every horizon.
guard_result order_guard(const weierstrass_curve<rational_field>& curve,
                         const ec_point<rational_field>& t, long horizon);
guard_result order_guard(const weierstrass_curve<prime_field>& curve,
                         const ec_point<prime_field>& t, long horizon);

}  // namespace ncsurf
