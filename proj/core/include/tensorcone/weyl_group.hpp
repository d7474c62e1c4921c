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

#ifndef TENSORCONE_WEYL_GROUP_HPP_
#define TENSORCONE_WEYL_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "tensorcone/rational.hpp"
#include "tensorcone/root_system.hpp"

namespace tcone {

// Canonical handle of a Weyl group element: its position in the enumeration
// order (length, then lexicographically smallest reduced word).
using WeylId = std::uint32_t;

struct WeylElement {
  WeylId id = 0;
  std::vector<int> word;  // lexicographically smallest reduced word, 0-based
  int length = 0;
  // Row-major integer matrix of the action on fundamental-weight coordinates.
  std::vector<int> matrix;
};

/// A standard parabolic subgroup P, identified by its Levi simple roots.
class ParabolicSubset {
 public:
  ParabolicSubset() = default;

  static ParabolicSubset from_levi(int rank, const std::vector<int>& levi_simples);
  static ParabolicSubset from_complement(int rank, const std::vector<int>& complement);
  static ParabolicSubset borel(int rank) { return from_levi(rank, {}); }
  static ParabolicSubset whole(int rank);

  int rank() const { return static_cast<int>(levi_.size()); }
  bool contains(int i) const { return levi_.at(i); }
  std::vector<int> levi_simples() const;
  std::vector<int> complement() const;
  // dim Z(P) for semisimple G.
  int center_dim() const { return static_cast<int>(complement().size()); }
  bool is_borel() const;
  bool is_whole() const;
  bool is_subset_of(const ParabolicSubset& other) const;

  // "{1,3}"-style listing of the complement, 1-based.
  std::string to_string() const;

  friend bool operator==(const ParabolicSubset&, const ParabolicSubset&) = default;
  friend bool operator<(const ParabolicSubset& a, const ParabolicSubset& b) {
    return a.levi_ < b.levi_;
  }

 private:
  std::vector<bool> levi_;
};

// All 2^rank standard parabolics, ordered by increasing Levi size.
std::vector<ParabolicSubset> all_parabolics(int rank);

inline constexpr std::size_t kDefaultMaxWeylOrder = 50'000;

// Classical order of W for the type.
std::uint64_t classical_weyl_order(const CartanType& type);

/// The Weyl group of a root system, fully enumerated. Group tables are built
/// once; queries are const and safe for concurrent readers.
class WeylGroup {
 public:
  // Throws ResourceError if |W| exceeds max_order.
  explicit WeylGroup(RootSystem rs, std::size_t max_order = kDefaultMaxWeylOrder);

  WeylGroup(const WeylGroup&) = delete;
  WeylGroup& operator=(const WeylGroup&) = delete;

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rs_.rank(); }
  std::size_t size() const { return elements_.size(); }

  const WeylElement& element(WeylId id) const { return elements_.at(id); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  int length(WeylId id) const { return elements_.at(id).length; }
  WeylId identity() const { return 0; }
  WeylId longest() const { return static_cast<WeylId>(elements_.size() - 1); }
  WeylId simple_reflection(int i) const { return left_simple_.at(0).at(i); }

  // Element with the given (not necessarily reduced) word, 0-based letters.
  WeylId from_word(const std::vector<int>& word) const;

  WeylId compose(WeylId a, WeylId b) const;
  WeylId inverse(WeylId a) const { return inverse_.at(a); }
  WeylId times_simple(WeylId w, int i) const { return right_simple_.at(w).at(i); }
  WeylId simple_times(int i, WeylId w) const { return left_simple_.at(w).at(i); }
  Weight act(WeylId w, const Weight& weight) const;
  // Element mapping rho to the given regular integral weight.
  WeylId from_rho_image(const std::vector<int>& image) const;

  // Positive roots beta with w(beta) negative, as indices into positive_roots().
  std::vector<std::size_t> inversion_set(WeylId w) const;
  bool sends_to_positive(WeylId w, const Weight& root) const;

  std::vector<WeylId> parabolic_subgroup(const ParabolicSubset& p) const;
  bool is_min_coset_rep(WeylId w, const ParabolicSubset& p) const;
  // W^P in id order.
  std::vector<WeylId> min_coset_reps(const ParabolicSubset& p) const;
  // Minimal-length representative of w W_P, by exhaustive scan of the coset.
  WeylId project_to_coset(WeylId w, const ParabolicSubset& p) const;
  WeylId longest_in_parabolic(const ParabolicSubset& p) const;

  // Indices of the roots of the unipotent radical of P.
  std::vector<std::size_t> unipotent_roots(const ParabolicSubset& p) const;
  // dim G/P.
  int flag_dimension(const ParabolicSubset& p) const;

  // Sum of the roots alpha of P^u with w^{-1}(alpha) positive, i.e. the roots
  // in w(Phi^+) cap Phi(P^u). theta(P, e) is the sum of all roots of P^u.
  Weight theta(const ParabolicSubset& p, WeylId w) const;
  // Half the sum of the positive roots of the Levi factor of P.
  Weight rho_levi(const ParabolicSubset& p) const;

 private:
  const std::vector<WeylId>& cached_subgroup(const ParabolicSubset& p) const;

  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, WeylId> by_rho_image_;
  std::vector<std::vector<int>> rho_images_;
  std::vector<std::vector<WeylId>> right_simple_;
  std::vector<std::vector<WeylId>> left_simple_;
  std::vector<WeylId> inverse_;

  mutable std::mutex cache_mutex_;
  mutable std::map<ParabolicSubset, std::vector<WeylId>> subgroup_cache_;
};

}  // namespace tcone

#endif  // TENSORCONE_WEYL_GROUP_HPP_
