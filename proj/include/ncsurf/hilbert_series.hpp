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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Exact arithmetic on rational generating functions of the shape
// q(s) / (1-s)^k, where q is a Laurent polynomial over Z.  Every graded
// dimension count in this project is a series of this shape, so equality,
// ordering and coefficient extraction are all decidable exactly.

namespace ncsurf {

class parse_error : public std::runtime_error {
 public:
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Laurent polynomial over Z with finite support.  Dense storage from the
// lowest exponent; the coefficient vector never has zero entries at either
// end (the zero polynomial has an empty vector).
class laurent {
 public:
  laurent() = default;
  laurent(long exponent, mpz_class coefficient);
  static laurent constant(long value) { return laurent(0, value); }
  static laurent monomial(long exponent) { return laurent(exponent, 1); }
  static laurent from_terms(
      const std::vector<std::pair<long, mpz_class>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const;  // requires a nonzero polynomial
  long max_exp() const;
  mpz_class coeff(long exponent) const;
  std::vector<std::pair<long, mpz_class>> terms() const;

  laurent operator-() const;
  laurent& operator+=(const laurent& rhs);
  laurent& operator-=(const laurent& rhs);
  friend laurent operator+(laurent lhs, const laurent& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend laurent operator-(laurent lhs, const laurent& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend laurent operator*(const laurent& lhs, const laurent& rhs);
  laurent shifted(long n) const;  // multiply by s^n
  laurent scaled(const mpz_class& c) const;

  mpz_class value_at_one() const;
  bool divisible_by_one_minus_s() const { return value_at_one() == 0; }
  laurent divide_one_minus_s() const;  // exact; requires divisibility
  laurent times_one_minus_s() const;

  bool operator==(const laurent& rhs) const;

  std::string to_string() const;

 private:
  void trim();
  long lo_ = 0;
  std::vector<mpz_class> coeffs_;  // coeffs_[i] is the coefficient of s^(lo_+i)
};

// q(s)/(1-s)^k in canonical form: q is not divisible by (1-s) unless k = 0,
// and the zero series is stored with k = 0.  Values are immutable once
// constructed, so they can be shared freely across threads.
class hilbert_series {
 public:
  hilbert_series() = default;  // zero
  hilbert_series(laurent numerator, unsigned pole_order);

  static hilbert_series zero() { return hilbert_series(); }
  static hilbert_series one() { return monomial(0); }
  static hilbert_series monomial(long exponent) {
    return hilbert_series(laurent::monomial(exponent), 0);
  }
  static hilbert_series constant(long value) {
    return hilbert_series(laurent::constant(value), 0);
  }
  // 1/(1-s)^k
  static hilbert_series geometric(unsigned pole_order) {
    return hilbert_series(laurent::constant(1), pole_order);
  }

  const laurent& numerator() const { return num_; }
  unsigned pole_order() const { return pole_; }
  bool is_zero() const { return num_.is_zero(); }

  hilbert_series operator-() const;
  friend hilbert_series operator+(const hilbert_series& a,
                                  const hilbert_series& b);
  friend hilbert_series operator-(const hilbert_series& a,
                                  const hilbert_series& b);
  friend hilbert_series operator*(const hilbert_series& a,
                                  const hilbert_series& b);
  hilbert_series shifted(long n) const;  // multiply by s^n
  hilbert_series scaled(const mpz_class& c) const;

  bool operator==(const hilbert_series& rhs) const {
    return pole_ == rhs.pole_ && num_ == rhs.num_;
  }

  // n-th coefficient of the Taylor-Laurent expansion around s = 0.
  mpz_class coeff(long n) const;
  std::vector<mpz_class> coeff_window(long lo, long hi) const;

  // True iff every expansion coefficient is >= 0.  Decided exactly: scan the
  // coefficients upward and stop once every backward difference up to order
  // pole-1 is nonnegative inside the polynomial tail (from there on the
  // coefficient function can only grow), or a negative coefficient appears.
  bool nonneg() const;

  // Torsion-free rank read off the series: the eventual coefficient for a
  // simple pole, 0 for a polynomial (finite-dimensional), and undefined for
  // pole order >= 2.
  std::optional<mpz_class> rank_at_one() const;

  std::string to_string() const;
  static hilbert_series parse(std::string_view text);

 private:
  void canonicalize();
  laurent num_;
  unsigned pole_ = 0;
};

inline bool leq(const hilbert_series& a, const hilbert_series& b) {
  return (b - a).nonneg();
}

// Default horizon for windowed cross-checks; callers may widen it.
inline constexpr long kDefaultWindow = 64;

}  // namespace ncsurf
