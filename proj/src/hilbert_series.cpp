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

#include "ncsurf/hilbert_series.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace ncsurf {

namespace {

mpz_class binom(long n, unsigned k) {
  if (n < 0) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
  return out;
}

}  // namespace

laurent::laurent(long exponent, mpz_class coefficient) {
  if (coefficient != 0) {
    lo_ = exponent;
    coeffs_.push_back(std::move(coefficient));
  }
}

laurent laurent::from_terms(
    const std::vector<std::pair<long, mpz_class>>& terms) {
  laurent out;
  for (const auto& [e, c] : terms) out += laurent(e, c);
  return out;
}

void laurent::trim() {
  size_t drop_front = 0;
  while (drop_front < coeffs_.size() && coeffs_[drop_front] == 0) ++drop_front;
  if (drop_front == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + drop_front);
  lo_ += static_cast<long>(drop_front);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

long laurent::min_exp() const {
  if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
  return lo_;
}

long laurent::max_exp() const {
  if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
  return lo_ + static_cast<long>(coeffs_.size()) - 1;
}

mpz_class laurent::coeff(long exponent) const {
  if (is_zero() || exponent < lo_ ||
      exponent >= lo_ + static_cast<long>(coeffs_.size()))
    return 0;
  return coeffs_[static_cast<size_t>(exponent - lo_)];
}

std::vector<std::pair<long, mpz_class>> laurent::terms() const {
  std::vector<std::pair<long, mpz_class>> out;
  for (size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(lo_ + static_cast<long>(i), coeffs_[i]);
  return out;
}

laurent laurent::operator-() const {
  laurent out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

laurent& laurent::operator+=(const laurent& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  long new_lo = std::min(lo_, rhs.lo_);
  long new_hi = std::max(max_exp(), rhs.max_exp());
  std::vector<mpz_class> merged(static_cast<size_t>(new_hi - new_lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    merged[static_cast<size_t>(lo_ - new_lo) + i] = coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i)
    merged[static_cast<size_t>(rhs.lo_ - new_lo) + i] += rhs.coeffs_[i];
  lo_ = new_lo;
  coeffs_ = std::move(merged);
  trim();
  return *this;
}

laurent& laurent::operator-=(const laurent& rhs) { return *this += -rhs; }

laurent operator*(const laurent& lhs, const laurent& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return laurent();
  laurent out;
  out.lo_ = lhs.lo_ + rhs.lo_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, mpz_class(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  out.trim();
  return out;
}

laurent laurent::shifted(long n) const {
  laurent out = *this;
  if (!out.is_zero()) out.lo_ += n;
  return out;
}

laurent laurent::scaled(const mpz_class& c) const {
  if (c == 0) return laurent();
  laurent out = *this;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

mpz_class laurent::value_at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

laurent laurent::divide_one_minus_s() const {
  if (is_zero()) return laurent();
  if (!divisible_by_one_minus_s())
    throw std::logic_error("polynomial is not divisible by (1-s)");
  // q = p/(1-s): q_i = p_i + q_{i-1}, accumulating from the low end.
  laurent out;
  out.lo_ = lo_;
  out.coeffs_.resize(coeffs_.size() - 1);
  mpz_class acc = 0;
  for (size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    acc += coeffs_[i];
    out.coeffs_[i] = acc;
  }
  out.trim();
  return out;
}

laurent laurent::times_one_minus_s() const {
  return *this - shifted(1);
}

bool laurent::operator==(const laurent& rhs) const {
  if (is_zero() || rhs.is_zero()) return is_zero() && rhs.is_zero();
  return lo_ == rhs.lo_ && coeffs_ == rhs.coeffs_;
}

std::string laurent::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1);
    if (e == 0) {
      out << a.get_str();
    } else {
      if (!unit) out << a.get_str() << "*";
      if (e == 1)
        out << "s";
      else
        out << "s^" << e;
    }
  }
  return out.str();
}

hilbert_series::hilbert_series(laurent numerator, unsigned pole_order)
    : num_(std::move(numerator)), pole_(pole_order) {
  canonicalize();
}

void hilbert_series::canonicalize() {
  if (num_.is_zero()) {
    pole_ = 0;
    return;
  }
  while (pole_ > 0 && num_.divisible_by_one_minus_s()) {
    num_ = num_.divide_one_minus_s();
    --pole_;
  }
}

hilbert_series hilbert_series::operator-() const {
  hilbert_series out;
  out.num_ = -num_;
  out.pole_ = pole_;
  return out;
}

hilbert_series operator+(const hilbert_series& a, const hilbert_series& b) {
  unsigned pole = std::max(a.pole_, b.pole_);
  laurent na = a.num_;
  for (unsigned i = a.pole_; i < pole; ++i) na = na.times_one_minus_s();
  laurent nb = b.num_;
  for (unsigned i = b.pole_; i < pole; ++i) nb = nb.times_one_minus_s();
  return hilbert_series(na + nb, pole);
}

hilbert_series operator-(const hilbert_series& a, const hilbert_series& b) {
  return a + (-b);
}

hilbert_series operator*(const hilbert_series& a, const hilbert_series& b) {
  return hilbert_series(a.num_ * b.num_, a.pole_ + b.pole_);
}

hilbert_series hilbert_series::shifted(long n) const {
  hilbert_series out;
  out.num_ = num_.shifted(n);
  out.pole_ = pole_;
  return out;
}

hilbert_series hilbert_series::scaled(const mpz_class& c) const {
  return hilbert_series(num_.scaled(c), pole_);
}

mpz_class hilbert_series::coeff(long n) const {
  if (num_.is_zero()) return 0;
  if (pole_ == 0) return num_.coeff(n);
  // [s^n] q(s)/(1-s)^k = sum_e q_e * C(n-e+k-1, k-1)
  mpz_class sum = 0;
  for (const auto& [e, c] : num_.terms()) {
    if (e > n) continue;
    sum += c * binom(n - e + static_cast<long>(pole_) - 1, pole_ - 1);
  }
  return sum;
}

std::vector<mpz_class> hilbert_series::coeff_window(long lo, long hi) const {
  std::vector<mpz_class> out;
  for (long n = lo; n <= hi; ++n) out.push_back(coeff(n));
  return out;
}

bool hilbert_series::nonneg() const {
  if (num_.is_zero()) return true;
  if (pole_ == 0) {
    for (const auto& [e, c] : num_.terms()) {
      (void)e;
      if (c < 0) return false;
    }
    return true;
  }
  // Inside the tail n >= max_exp the coefficient function is a polynomial of
  // degree pole-1; once it and all its backward differences are nonnegative
  // they stay so.  Canonical form guarantees the leading behaviour is
  // num(1) != 0, so the scan terminates either way.
  const long tail_start = num_.max_exp() + static_cast<long>(pole_) - 1;
  std::deque<mpz_class> window;
  constexpr long kGuard = 1 << 22;
  long n = num_.min_exp();
  for (long steps = 0; steps < kGuard; ++steps, ++n) {
    mpz_class c = coeff(n);
    if (c < 0) return false;
    window.push_back(c);
    if (window.size() > pole_) window.pop_front();
    if (n >= tail_start && window.size() == pole_) {
      std::vector<mpz_class> diffs(window.begin(), window.end());
      bool all_nonneg = true;
      while (diffs.size() > 1) {
        if (diffs.back() < 0) all_nonneg = false;
        for (size_t i = 0; i + 1 < diffs.size(); ++i)
          diffs[i] = diffs[i + 1] - diffs[i];
        diffs.pop_back();
      }
      if (diffs.back() < 0) all_nonneg = false;
      if (all_nonneg) return true;
    }
  }
  throw std::logic_error("nonneg(): scan did not settle");
}

std::optional<mpz_class> hilbert_series::rank_at_one() const {
  if (pole_ >= 2) return std::nullopt;
  if (pole_ == 0) return mpz_class(0);
  return num_.value_at_one();
}

std::string hilbert_series::to_string() const {
  if (num_.is_zero()) return "0";
  std::string poly = num_.to_string();
  if (pole_ == 0) return poly;
  std::string out;
  if (num_.terms().size() > 1)
    out = "(" + poly + ")";
  else
    out = poly;
  out += " / (1-s)";
  if (pole_ > 1) out += "^" + std::to_string(pole_);
  return out;
}

namespace {

struct token {
  enum kind_t { number, sym_s, plus, minus, star, caret, slash, lparen, rparen, end };
  kind_t kind;
  mpz_class value;
};

std::vector<token> tokenize(std::string_view text) {
  std::vector<token> out;
  size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({token::number, mpz_class(std::string(text.substr(i, j - i)), 10)});
      i = j;
      continue;
    }
    switch (ch) {
      case 's': out.push_back({token::sym_s, 0}); break;
      case '+': out.push_back({token::plus, 0}); break;
      case '-': out.push_back({token::minus, 0}); break;
      case '*': out.push_back({token::star, 0}); break;
      case '^': out.push_back({token::caret, 0}); break;
      case '/': out.push_back({token::slash, 0}); break;
      case '(': out.push_back({token::lparen, 0}); break;
      case ')': out.push_back({token::rparen, 0}); break;
      default:
        throw parse_error(std::string("unexpected character '") + ch + "' in series");
    }
    ++i;
  }
  out.push_back({token::end, 0});
  return out;
}

class series_parser {
 public:
  explicit series_parser(std::string_view text) : toks_(tokenize(text)) {}

  hilbert_series parse() {
    laurent num;
    if (peek().kind == token::lparen && closes_whole_numerator()) {
      next();
      num = parse_sum();
      expect(token::rparen, "')'");
    } else {
      num = parse_sum();
    }
    unsigned pole = 0;
    if (peek().kind == token::slash) {
      next();
      pole = parse_denominator();
    }
    expect(token::end, "end of series");
    return hilbert_series(num, pole);
  }

 private:
  const token& peek() const { return toks_[pos_]; }
  const token& next() { return toks_[pos_++]; }
  void expect(token::kind_t k, const char* what) {
    if (peek().kind != k) throw parse_error(std::string("expected ") + what);
    ++pos_;
  }

  // A leading '(' wraps the numerator iff its matching ')' is followed by
  // '/' or the end of input.
  bool closes_whole_numerator() const {
    int depth = 0;
    for (size_t i = pos_; i < toks_.size(); ++i) {
      if (toks_[i].kind == token::lparen) ++depth;
      if (toks_[i].kind == token::rparen) {
        --depth;
        if (depth == 0) {
          auto after = toks_[i + 1].kind;
          return after == token::slash || after == token::end;
        }
      }
    }
    return false;
  }

  long parse_integer() {
    bool neg = false;
    while (peek().kind == token::plus || peek().kind == token::minus) {
      if (next().kind == token::minus) neg = !neg;
    }
    if (peek().kind != token::number) throw parse_error("expected an integer");
    mpz_class v = next().value;
    if (!v.fits_slong_p()) throw parse_error("exponent out of range");
    long out = v.get_si();
    return neg ? -out : out;
  }

  laurent parse_term() {
    mpz_class coeff = 1;
    long exp = 0;
    bool saw_any = false;
    if (peek().kind == token::number) {
      coeff = next().value;
      saw_any = true;
      if (peek().kind == token::star) next();
    }
    if (peek().kind == token::sym_s) {
      next();
      saw_any = true;
      exp = 1;
      if (peek().kind == token::caret) {
        next();
        exp = parse_integer();
      }
    }
    if (!saw_any) throw parse_error("expected a term");
    return laurent(exp, coeff);
  }

  laurent parse_sum() {
    laurent out;
    bool neg = false;
    if (peek().kind == token::plus || peek().kind == token::minus)
      neg = (next().kind == token::minus);
    laurent t = parse_term();
    out += neg ? -t : t;
    while (peek().kind == token::plus || peek().kind == token::minus) {
      bool minus = (next().kind == token::minus);
      laurent u = parse_term();
      out += minus ? -u : u;
    }
    return out;
  }

  unsigned parse_denominator() {
    expect(token::lparen, "'('");
    if (peek().kind != token::number || peek().value != 1)
      throw parse_error("denominator must be a power of (1-s)");
    next();
    expect(token::minus, "'-'");
    expect(token::sym_s, "'s'");
    expect(token::rparen, "')'");
    long pole = 1;
    if (peek().kind == token::caret) {
      next();
      pole = parse_integer();
      if (pole < 0) throw parse_error("negative denominator exponent");
    }
    return static_cast<unsigned>(pole);
  }

  std::vector<token> toks_;
  size_t pos_ = 0;
};

}  // namespace

hilbert_series hilbert_series::parse(std::string_view text) {
  if (text.find_first_not_of(" \t") == std::string_view::npos)
    throw parse_error("empty series");
  // Accept a bare "0".
  size_t first = text.find_first_not_of(" \t");
  size_t last = text.find_last_not_of(" \t");
  if (text.substr(first, last - first + 1) == "0") return hilbert_series();
  return series_parser(text).parse();
}

}  // namespace ncsurf
