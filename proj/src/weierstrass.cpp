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

#include "ncsurf/weierstrass.hpp"

namespace ncsurf {

prime_field::prime_field(mpz_class modulus) : p(std::move(modulus)) {
  if (p <= 3 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw std::invalid_argument("prime field needs a prime modulus > 3");
}

prime_field::element prime_field::reduce(const mpz_class& v) const {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return r;
}

prime_field::element prime_field::div(const element& x, const element& y) const {
  if (y == 0) throw std::domain_error("division by zero in prime field");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible element in prime field");
  return reduce(x * inv);
}

namespace {

template <class F>
guard_result scan_multiples(const weierstrass_curve<F>& curve,
                            const ec_point<F>& t, long upto) {
  ec_point<F> acc = curve.infinity_point();
  for (long n = 1; n <= upto; ++n) {
    acc = curve.add(acc, t);
    if (acc.infinity) return {false, n};
  }
  return {true, 0};
}

}  // namespace

guard_result order_guard(const weierstrass_curve<rational_field>& curve,
                         const ec_point<rational_field>& t, long horizon) {
  if (t.infinity) return {false, 1};
  (void)horizon;  // a non-torsion rational point has no vanishing multiple
  return scan_multiples(curve, t, 12);
}

guard_result order_guard(const weierstrass_curve<prime_field>& curve,
                         const ec_point<prime_field>& t, long horizon) {
  if (t.infinity) return {false, 1};
  return scan_multiples(curve, t, horizon);
}

}  // namespace ncsurf
