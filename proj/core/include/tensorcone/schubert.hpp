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

#ifndef TENSORCONE_SCHUBERT_HPP_
#define TENSORCONE_SCHUBERT_HPP_

#include <cstdint>
#include <map>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "tensorcone/polynomial.hpp"
#include "tensorcone/weyl_group.hpp"

namespace tcone {

/// A cohomology class of G/P in the Schubert basis. The basis element indexed
/// by w in W^P has cohomological degree 2*length(w); the top-degree element is
/// the point class.
struct CohClass {
  ParabolicSubset parabolic;
  std::map<WeylId, Rational> coeffs;

  Rational coefficient(WeylId w) const;
  bool is_homogeneous(const WeylGroup& weyl) const;

  friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// Schubert calculus on G/B and G/P through Bernstein-Gelfand-Gelfand
/// polynomial representatives in the symmetric algebra of the weight lattice.
/// Variables x_1..x_r stand for the fundamental weights.
///
/// Representatives are built eagerly in the constructor. Products are
/// memoised behind a mutex, so a single instance may be shared by threads.
class SchubertCalculus {
 public:
  explicit SchubertCalculus(const WeylGroup& weyl);

  const WeylGroup& weyl() const { return weyl_; }

  // (f - s_i f) / alpha_i. Throws ConsistencyError if the division is inexact.
  Polynomial divided_difference(int i, const Polynomial& f) const;
  // d_{i1} ... d_{ik} f for the word (i1, ..., ik).
  Polynomial divided_difference(const std::vector<int>& word, const Polynomial& f) const;
  Polynomial reflect(int i, const Polynomial& f) const;

  // S_w = d_{w^{-1} w0}(prod of positive roots / |W|), homogeneous of degree l(w).
  const Polynomial& representative(WeylId w) const { return reps_.at(w); }

  // Structure constants of sigma_u * sigma_v, restricted to the W^P basis.
  CohClass cup_expand(const ParabolicSubset& p, WeylId u, WeylId v) const;
  // sigma_{s_i} * sigma_v on G/B by the Chevalley formula. Independent of the
  // polynomial model; used to cross-check cup_expand.
  CohClass chevalley_multiply(int i, WeylId v) const;

  // Coefficient of the point class in sigma_{u_0} * ... * sigma_{u_s}.
  std::int64_t multi_point_coefficient(const ParabolicSubset& p,
                                       std::span<const WeylId> tuple) const;

  // The longest element of W^P, indexing the point class.
  WeylId top_class(const ParabolicSubset& p) const;
  CohClass point_class(const ParabolicSubset& p) const;
  // The unique v in W^P pairing to one with u.
  WeylId dual(const ParabolicSubset& p, WeylId u) const;

  // Nonzero G/B structure constants c_{u,v}^w.
  const std::map<WeylId, std::int64_t>& gb_product(WeylId u, WeylId v) const;

 private:
  void require_min_rep(const ParabolicSubset& p, WeylId w) const;

  const WeylGroup& weyl_;
  std::vector<Polynomial> simple_root_forms_;
  std::vector<Polynomial> reflected_variable_;
  std::vector<Polynomial> reps_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<WeylId, WeylId>, std::map<WeylId, std::int64_t>> products_;
};

}  // namespace tcone

#endif  // TENSORCONE_SCHUBERT_HPP_
