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

#ifndef TENSORCONE_ROOT_SYSTEM_HPP_
#define TENSORCONE_ROOT_SYSTEM_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorcone/rational.hpp"

namespace tcone {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', F = 'F', G = 'G' };

struct CartanFactor {
  Family family;
  int rank;

  friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

/// A semisimple Cartan type given as a product of simple factors, e.g. "A2",
/// "B3", "A1xA1". Simple roots are numbered consecutively across factors.
class CartanType {
 public:
  CartanType() = default;
  explicit CartanType(std::vector<CartanFactor> factors);

  // Case-insensitive, factors separated by 'x'. Throws ConfigError naming the
  // offending factor.
  static CartanType parse(std::string_view text);

  const std::vector<CartanFactor>& factors() const { return factors_; }
  int rank() const;
  std::string name() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;

 private:
  std::vector<CartanFactor> factors_;
};

inline constexpr int kDefaultMaxRank = 6;

struct Root {
  std::vector<int> simple_coords;
  Weight weight_coords;
  bool positive = true;
};

/// Cartan data, positive roots and the pairings built on them. Immutable after
/// construction.
///
/// Conventions: cartan(i, j) = <alpha_i^vee, alpha_j>, so the fundamental-weight
/// coordinates of alpha_j form column j of the Cartan matrix. Simple indices
/// are 0-based throughout the C++ API.
class RootSystem {
 public:
  // Throws ConfigError if the total rank exceeds max_rank.
  explicit RootSystem(CartanType type, int max_rank = kDefaultMaxRank);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return rank_; }
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  const Weight& rho() const { return rho_; }
  const Weight& simple_root(int i) const;
  Weight fundamental_weight(int i) const;

  // Half the squared length of alpha_i, normalised so the smallest is 1.
  const Rational& symmetrizer(int i) const { return sym_[i]; }

  Weight reflect(int i, const Weight& w) const;

  // <w, omega_k^vee>: the coefficient of alpha_k in w written in simple roots.
  Rational pair_coweight(const Weight& w, int k) const;
  std::vector<Rational> to_simple_coords(const Weight& w) const;
  Weight from_simple_coords(const std::vector<int>& c) const;

  Rational inner_product(const Weight& a, const Weight& b) const;
  // <w, beta^vee> for a root beta.
  Rational coroot_pairing(const Weight& w, const Root& beta) const;

  bool is_dominant(const Weight& w) const;
  bool is_strictly_dominant(const Weight& w) const;

  // Index into positive_roots(), matching either sign.
  std::optional<std::size_t> find_root(const Weight& w, bool* negative = nullptr) const;
  bool is_positive_root_vector(const Weight& w) const;

  std::size_t num_positive_roots() const { return positive_roots_.size(); }

 private:
  void check_index(int i) const;

  CartanType type_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Rational> sym_;
  std::vector<Weight> simple_roots_;
  std::vector<Root> positive_roots_;
  std::map<Weight, std::size_t> root_index_;
  Weight rho_;
};

}  // namespace tcone

#endif  // TENSORCONE_ROOT_SYSTEM_HPP_
