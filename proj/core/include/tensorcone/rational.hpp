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

#ifndef TENSORCONE_RATIONAL_HPP_
#define TENSORCONE_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcone {

using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws ConfigError on malformed input.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Converts an integral rational to int64. Throws ConsistencyError otherwise.
std::int64_t to_int64(const Rational& q);

/// A character of the maximal torus, stored by its coordinates in the
/// fundamental-weight basis. Coordinates are exact rationals.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t rank) : coords_(rank) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  static Weight from_ints(std::span<const int> coords);
  static Weight unit(std::size_t rank, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  std::span<const Rational> coords() const { return coords_; }

  bool is_zero() const;
  bool is_integral() const;
  // Throws UsageError if some coordinate is not an integer.
  std::vector<int> to_ints() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend bool operator==(const Weight& a, const Weight& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const Weight& a, const Weight& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

}  // namespace tcone

#endif  // TENSORCONE_RATIONAL_HPP_
