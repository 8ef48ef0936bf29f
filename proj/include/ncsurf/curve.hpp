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

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncsurf/hilbert_series.hpp"
#include "ncsurf/weierstrass.hpp"

// Symbolic model of an elliptic curve with a translation automorphism tau of
// infinite order.  Points live on named tau-orbits; a point is a pair
// (orbit, k) standing for tau^k of the orbit's base point.  Divisors are
// finite formal Z-combinations.  Principality of a degree-zero divisor is
// decided by the genericity convention (independent base points, infinite
// order translation) unless the context carries declared orbit relations or
// a binding to a concrete Weierstrass model, in which case the concrete
// group law decides.

namespace ncsurf {

struct curve_point {
  std::string orbit;
  long shift = 0;
  auto operator<=>(const curve_point&) const = default;
  std::string to_string() const;
  static curve_point parse(std::string_view text);  // "[A:3]"
};

inline curve_point tau_power(curve_point p, long j) {
  p.shift += j;
  return p;
}

class divisor {
 public:
  divisor() = default;
  static divisor of_point(const curve_point& p, long multiplicity = 1);

  bool is_zero() const { return terms_.empty(); }
  long degree() const;
  long multiplicity(const curve_point& p) const;
  const std::map<curve_point, long>& terms() const { return terms_; }

  divisor operator-() const;
  divisor& operator+=(const divisor& rhs);
  divisor& operator-=(const divisor& rhs);
  friend divisor operator+(divisor lhs, const divisor& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend divisor operator-(divisor lhs, const divisor& rhs) {
    lhs -= rhs;
    return lhs;
  }
  divisor scaled(long c) const;
  divisor translated(long k) const;  // push every point forward by tau^k

  bool operator==(const divisor& rhs) const = default;

  std::string to_string() const;  // "3*[A:0] - [B:2]"
  static divisor parse(std::string_view text);

 private:
  void add_term(const curve_point& p, long mult);
  std::map<curve_point, long> terms_;  // no zero multiplicities stored
};

// Pullback along tau^j sends [x] to [tau^-j x]; degrees are preserved.
inline divisor pullback(const divisor& D, long j) { return D.translated(-j); }

// Divisor of the twist chain M_n = M (x) M^tau (x) ... (x) M^{tau^(n-1)},
// extended to negative n through the inverse chain.
divisor chain_divisor(const divisor& M, long n);

// base(from) = tau^shift(base(to))
struct orbit_relation {
  std::string from;
  std::string to;
  long shift = 0;
};

template <class F>
struct bound_model {
  weierstrass_curve<F> curve;
  ec_point<F> translation;                      // the point realising tau
  std::map<std::string, ec_point<F>> orbit_base;  // concrete base points
};

class oracle_binding {
 public:
  explicit oracle_binding(bound_model<rational_field> m) : model_(std::move(m)) {}
  explicit oracle_binding(bound_model<prime_field> m) : model_(std::move(m)) {}

  // Group-law sum of the bound divisor; true iff it is the identity.
  bool divisor_sum_is_identity(const divisor& D) const;

  template <class Fn>
  auto visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), model_);
  }

 private:
  std::variant<bound_model<rational_field>, bound_model<prime_field>> model_;
};

class genericity_context {
 public:
  genericity_context() = default;

  // Declared coincidences between orbits; rejected if they force the base
  // point of an orbit to be a tau-translate of itself by a nonzero amount.
  void declare_relation(const orbit_relation& rel);
  void bind(oracle_binding binding) { binding_ = std::move(binding); }
  bool has_binding() const { return binding_.has_value(); }
  const oracle_binding& binding() const;

  curve_point canonical(const curve_point& p) const;
  divisor canonical(const divisor& D) const;
  bool same_orbit(const curve_point& p, const curve_point& q) const;
  // j with p = tau^j(q), when p and q share an orbit
  std::optional<long> orbit_offset(const curve_point& p,
                                   const curve_point& q) const;

  bool is_principal(const divisor& D) const;

 private:
  bool generically_principal(const divisor& D) const;
  // orbit -> (root orbit, offset): base(orbit) = tau^offset(base(root))
  std::map<std::string, std::pair<std::string, long>> rewrite_;
  std::optional<oracle_binding> binding_;
};

// Batch principality kernel over one context: the per-divisor decisions are
// independent, so the parallel variant splits them across threads.  The
// serial variant is the reference the tests compare against.
std::vector<char> principal_batch_serial(const genericity_context& ctx,
                                         const std::vector<divisor>& divisors);
std::vector<char> principal_batch(const genericity_context& ctx,
                                  const std::vector<divisor>& divisors);

}  // namespace ncsurf
