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

#ifndef TENSORCONE_POLYNOMIAL_HPP_
#define TENSORCONE_POLYNOMIAL_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tensorcone/rational.hpp"

namespace tcone {

using Monomial = std::vector<int>;

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  explicit Polynomial(int num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(int num_vars, const Rational& c);
  static Polynomial variable(int num_vars, int i);
  // sum_i coeffs[i] * x_i
  static Polynomial linear(const Weight& coeffs);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& m, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
  }

  // Replace x_i by a linear form, keeping the other variables.
  Polynomial substitute(int i, const Polynomial& linear_form) const;

  // Exact quotient by a nonzero linear form, or nullopt if it does not divide.
  std::optional<Polynomial> divide_exact(const Polynomial& linear_form) const;

  std::string to_string() const;

 private:
  int num_vars_;
  std::map<Monomial, Rational> terms_;
};

}  // namespace tcone

#endif  // TENSORCONE_POLYNOMIAL_HPP_
