// Copyright 2026 The tensorcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tensorcone/polynomial.hpp"

#include <numeric>

#include "tensorcone/errors.hpp"

namespace tcone {

Polynomial Polynomial::constant(int num_vars, const Rational& c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(num_vars, 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int i) {
  Polynomial p(num_vars);
  Monomial m(num_vars, 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

Polynomial Polynomial::linear(const Weight& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Monomial m(n, 0);
    m[i] = 1;
    p.add_term(m, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    const int e = std::accumulate(m.begin(), m.end(), 0);
    if (d >= 0 && e != d) return false;
    d = e;
  }
  return true;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(num_vars_, 0)); }

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (static_cast<int>(m.size()) != num_vars_) throw UsageError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.num_vars_ != num_vars_) throw UsageError("polynomial arity mismatch");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars_ != b.num_vars_) throw UsageError("polynomial arity mismatch");
  Polynomial out(a.num_vars_);
  Monomial m(a.num_vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (int i = 0; i < a.num_vars_; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::substitute(int i, const Polynomial& linear_form) const {
  std::vector<Polynomial> powers{Polynomial::constant(num_vars_, 1)};
  Polynomial out(num_vars_);
  for (const auto& [m, c] : terms_) {
    const int e = m[i];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * linear_form);
    Monomial rest = m;
    rest[i] = 0;
    Polynomial term(num_vars_);
    term.add_term(rest, c);
    out += term * powers[e];
  }
  return out;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& linear_form) const {
  int pivot = -1;
  Rational lead;
  for (const auto& [m, c] : linear_form.terms_) {
    if (std::accumulate(m.begin(), m.end(), 0) != 1) throw UsageError("divisor is not linear");
    for (int i = 0; i < num_vars_; ++i) {
      if (m[i] == 1 && (pivot < 0 || i > pivot)) {
        pivot = i;
        lead = c;
      }
    }
  }
  if (pivot < 0) throw UsageError("division by the zero linear form");

  Polynomial rem = *this;
  Polynomial quotient(num_vars_);
  while (true) {
    // Eliminate the term of highest degree in the pivot variable.
    const Monomial* best = nullptr;
    for (const auto& [m, c] : rem.terms_) {
      if (m[pivot] > 0 && (!best || m[pivot] > (*best)[pivot])) best = &m;
    }
    if (!best) break;
    Monomial qm = *best;
    qm[pivot] -= 1;
    Polynomial q(num_vars_);
    q.add_term(qm, rem.terms_.at(*best) / lead);
    rem -= q * linear_form;
    quotient += q;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quotient;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!out.empty()) out += " + ";
    out += tcone::to_string(c);
    for (int i = 0; i < num_vars_; ++i) {
      if (m[i] == 0) continue;
      out += "*x" + std::to_string(i + 1);
      if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
  }
  return out;
}

}  // namespace tcone
