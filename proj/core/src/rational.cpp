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

#include "tensorcone/rational.hpp"

#include "tensorcone/errors.hpp"

namespace tcone {

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-') {
    throw ConfigError("malformed rational '" + std::string(text) + "'");
  }
  Integer d(strip_plus(den));
  if (d == 0) throw ConfigError("zero denominator in '" + std::string(text) + "'");
  Rational q(Integer(strip_plus(num)), d);
  q.canonicalize();
  return q;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p()) {
    throw ConsistencyError("expected a machine integer, got " + to_string(q));
  }
  return q.get_num().get_si();
}

Weight Weight::from_ints(std::span<const int> coords) {
  Weight w(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) w.coords_[i] = coords[i];
  return w;
}

Weight Weight::unit(std::size_t rank, std::size_t i) {
  Weight w(rank);
  w.coords_.at(i) = 1;
  return w;
}

bool Weight::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool Weight::is_integral() const {
  for (const auto& c : coords_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

std::vector<int> Weight::to_ints() const {
  std::vector<int> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) {
    if (!is_integer(c) || !c.get_num().fits_sint_p()) {
      throw UsageError("weight " + to_string() + " is not integral");
    }
    out.push_back(static_cast<int>(c.get_num().get_si()));
  }
  return out;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw UsageError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw UsageError("weight rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

std::string Weight::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += tcone::to_string(coords_[i]);
  }
  return out + ")";
}

}  // namespace tcone
