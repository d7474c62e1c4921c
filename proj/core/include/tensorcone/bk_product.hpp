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

#ifndef TENSORCONE_BK_PRODUCT_HPP_
#define TENSORCONE_BK_PRODUCT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "tensorcone/schubert.hpp"

namespace tcone {

// Which Weyl element enters the theta-character of a Schubert class sigma_u in
// the Levi-movability test: theta(P, u^{-1}) (kInverse) or theta(P, u)
// (kDirect). kInverse is the one that reproduces the tensor cone; kDirect is
// kept so the test suite can demonstrate that it does not.
enum class ThetaConvention { kInverse, kDirect };

inline constexpr std::uint64_t kDefaultTupleBudget = 10'000'000;

/// A tuple of Schubert classes of G/P whose product has a point component.
struct BkTuple {
  ParabolicSubset parabolic;
  std::vector<WeylId> reps;
  std::int64_t cup_coeff = 0;
  bool retained = false;  // survives the Levi-movability filter
};

/// The Belkale-Kumar product on H^*(G/P): a cup-product structure constant
/// is kept iff the tuple is Levi-movable, otherwise it is replaced by zero.
///
/// For sigma_{u_0}, ..., sigma_{u_s} with degrees summing to dim G/P, the
/// tuple is Levi-movable iff the cup coefficient is nonzero and, for every
/// simple root alpha_k outside the Levi,
///
///   < sum_i theta(P, u_i^{-1}) - s * theta(P, e), omega_k^vee > = 0.
class BkProduct {
 public:
  explicit BkProduct(const SchubertCalculus& schubert,
                     ThetaConvention convention = ThetaConvention::kInverse);

  const SchubertCalculus& schubert() const { return schubert_; }
  const WeylGroup& weyl() const { return schubert_.weyl(); }
  ThetaConvention convention() const { return convention_; }

  // Character test only. Throws UsageError unless the degrees add up to
  // dim G/P and the cup coefficient is nonzero.
  bool levi_movable(const ParabolicSubset& p, std::span<const WeylId> reps) const;

  // The point coefficient of the degenerate product: the cup coefficient for
  // Levi-movable tuples, zero otherwise.
  std::int64_t bk_point_coefficient(const ParabolicSubset& p, std::span<const WeylId> reps) const;

  // All (s+1)-tuples over W^P whose degenerate product is exactly the point
  // class, in lexicographic order of ids. Empty for P = G.
  std::vector<BkTuple> enumerate_theta(int s, const ParabolicSubset& p,
                                       std::uint64_t budget = kDefaultTupleBudget) const;

  // Every degree-valid (s+1)-tuple over W^P with its cup coefficient and
  // filter verdict (including cup coefficient zero, never retained).
  std::vector<BkTuple> degree_valid_tuples(int s, const ParabolicSubset& p,
                                           std::uint64_t budget = kDefaultTupleBudget) const;

  Weight class_character(const ParabolicSubset& p, WeylId u) const;

 private:
  bool character_condition(const ParabolicSubset& p, std::span<const WeylId> reps) const;

  const SchubertCalculus& schubert_;
  ThetaConvention convention_;
};

}  // namespace tcone

#endif  // TENSORCONE_BK_PRODUCT_HPP_
