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

#include "ncsurf/curve.hpp"

#include <exception>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "ncsurf/hilbert_series.hpp"  // parse_error

namespace ncsurf {

namespace {

bool valid_orbit_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

}  // namespace

std::string curve_point::to_string() const {
  return "[" + orbit + ":" + std::to_string(shift) + "]";
}

curve_point curve_point::parse(std::string_view text) {
  size_t first = text.find_first_not_of(" \t");
  size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) throw parse_error("empty point literal");
  text = text.substr(first, last - first + 1);
  if (text.size() < 5 || text.front() != '[' || text.back() != ']')
    throw parse_error("point literal must look like [orbit:shift]");
  text = text.substr(1, text.size() - 2);
  size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw parse_error("point literal must look like [orbit:shift]");
  std::string orbit(text.substr(0, colon));
  if (!valid_orbit_name(orbit)) throw parse_error("bad orbit name: " + orbit);
  std::string shift_str(text.substr(colon + 1));
  try {
    size_t used = 0;
    long shift = std::stol(shift_str, &used);
    if (used != shift_str.size()) throw std::invalid_argument("");
    return curve_point{std::move(orbit), shift};
  } catch (const std::exception&) {
    throw parse_error("bad shift in point literal: " + shift_str);
  }
}

void divisor::add_term(const curve_point& p, long mult) {
  if (mult == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

divisor divisor::of_point(const curve_point& p, long multiplicity) {
  divisor out;
  out.add_term(p, multiplicity);
  return out;
}

long divisor::degree() const {
  long sum = 0;
  for (const auto& [p, m] : terms_) {
    (void)p;
    sum += m;
  }
  return sum;
}

long divisor::multiplicity(const curve_point& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0 : it->second;
}

divisor divisor::operator-() const {
  divisor out;
  for (const auto& [p, m] : terms_) out.terms_.emplace(p, -m);
  return out;
}

divisor& divisor::operator+=(const divisor& rhs) {
  for (const auto& [p, m] : rhs.terms_) add_term(p, m);
  return *this;
}

divisor& divisor::operator-=(const divisor& rhs) { return *this += -rhs; }

divisor divisor::scaled(long c) const {
  divisor out;
  if (c == 0) return out;
  for (const auto& [p, m] : terms_) out.terms_.emplace(p, m * c);
  return out;
}

divisor divisor::translated(long k) const {
  divisor out;
  for (const auto& [p, m] : terms_)
    out.terms_.emplace(curve_point{p.orbit, p.shift + k}, m);
  return out;
}

std::string divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, m] : terms_) {
    long a = m < 0 ? -m : m;
    if (first) {
      if (m < 0) out << "-";
      first = false;
    } else {
      out << (m < 0 ? " - " : " + ");
    }
    if (a != 1) out << a << "*";
    out << p.to_string();
  }
  return out.str();
}

divisor divisor::parse(std::string_view text) {
  divisor out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '0') {
    ++i;
    skip_ws();
    if (i == text.size()) return out;
    throw parse_error("unexpected content after zero divisor");
  }
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' between divisor terms");
    }
    long mult = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      mult = std::stol(std::string(text.substr(i, j - i)));
      i = j;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size() || text[i] != '[')
      throw parse_error("expected a point literal in divisor");
    size_t close = text.find(']', i);
    if (close == std::string_view::npos)
      throw parse_error("unterminated point literal in divisor");
    curve_point p = curve_point::parse(text.substr(i, close - i + 1));
    i = close + 1;
    out.add_term(p, sign * mult);
    first = false;
  }
  return out;
}

divisor chain_divisor(const divisor& M, long n) {
  divisor out;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) out += M.translated(-i);
  } else {
    for (long i = 1; i <= -n; ++i) out -= M.translated(i);
  }
  return out;
}

const oracle_binding& genericity_context::binding() const {
  if (!binding_) throw std::logic_error("context has no oracle binding");
  return *binding_;
}

void genericity_context::declare_relation(const orbit_relation& rel) {
  if (!valid_orbit_name(rel.from) || !valid_orbit_name(rel.to))
    throw std::invalid_argument("bad orbit name in relation");
  curve_point root_from = canonical(curve_point{rel.from, 0});
  curve_point root_to = canonical(curve_point{rel.to, 0});
  // After rewriting, the new identity reads root_from = tau^k(root_to).
  long k = rel.shift - root_from.shift + root_to.shift;
  if (root_from.orbit == root_to.orbit) {
    if (k != 0)
      throw std::invalid_argument(
          "relation forces a base point to be a nonzero tau-translate of itself");
    return;  // already implied
  }
  rewrite_[root_from.orbit] = {root_to.orbit, k};
}

curve_point genericity_context::canonical(const curve_point& p) const {
  curve_point out = p;
  auto it = rewrite_.find(out.orbit);
  while (it != rewrite_.end()) {
    out.orbit = it->second.first;
    out.shift += it->second.second;
    it = rewrite_.find(out.orbit);
  }
  return out;
}

divisor genericity_context::canonical(const divisor& D) const {
  divisor out;
  for (const auto& [p, m] : D.terms()) out += divisor::of_point(canonical(p), m);
  return out;
}

bool genericity_context::same_orbit(const curve_point& p,
                                    const curve_point& q) const {
  return canonical(p).orbit == canonical(q).orbit;
}

std::optional<long> genericity_context::orbit_offset(
    const curve_point& p, const curve_point& q) const {
  curve_point cp = canonical(p);
  curve_point cq = canonical(q);
  if (cp.orbit != cq.orbit) return std::nullopt;
  return cp.shift - cq.shift;
}

bool genericity_context::generically_principal(const divisor& D) const {
  if (D.degree() != 0) return false;
  divisor C = canonical(D);
  std::map<std::string, long> orbit_sums;
  long weighted = 0;
  for (const auto& [p, m] : C.terms()) {
    orbit_sums[p.orbit] += m;
    weighted += p.shift * m;
  }
  for (const auto& [orbit, sum] : orbit_sums) {
    (void)orbit;
    if (sum != 0) return false;
  }
  return weighted == 0;
}

bool genericity_context::is_principal(const divisor& D) const {
  if (D.degree() != 0) return false;
  if (binding_) return binding_->divisor_sum_is_identity(canonical(D));
  return generically_principal(D);
}

bool oracle_binding::divisor_sum_is_identity(const divisor& D) const {
  return visit([&](const auto& model) {
    using F = std::decay_t<decltype(model.curve.field())>;
    std::vector<weighted_point<F>> terms;
    terms.reserve(D.terms().size());
    for (const auto& [p, m] : D.terms()) {
      auto it = model.orbit_base.find(p.orbit);
      if (it == model.orbit_base.end())
        throw std::invalid_argument("orbit '" + p.orbit +
                                    "' has no bound base point");
      auto concrete = model.curve.add(
          it->second,
          model.curve.scalar_mul(mpz_class(p.shift), model.translation));
      terms.push_back({std::move(concrete), m});
    }
    return divisor_sum(model.curve, terms).infinity;
  });
}

std::vector<char> principal_batch_serial(const genericity_context& ctx,
                                         const std::vector<divisor>& divisors) {
  std::vector<char> out(divisors.size());
  for (size_t i = 0; i < divisors.size(); ++i)
    out[i] = ctx.is_principal(divisors[i]) ? 1 : 0;
  return out;
}

std::vector<char> principal_batch(const genericity_context& ctx,
                                  const std::vector<divisor>& divisors) {
  std::vector<char> out(divisors.size());
  const long n = static_cast<long>(divisors.size());
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    // exceptions must not unwind out of the parallel region
    try {
      out[i] = ctx.is_principal(divisors[static_cast<size_t>(i)]) ? 1 : 0;
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ncsurf
