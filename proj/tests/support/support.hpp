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

#ifndef TENSORCONE_TESTS_SUPPORT_HPP_
#define TENSORCONE_TESTS_SUPPORT_HPP_

#include <memory>
#include <string>
#include <vector>

#include "tensorcone/face_cone.hpp"

namespace tcone::testing {

inline Weight weight(std::vector<int> coords) { return Weight::from_ints(coords); }

inline std::vector<Weight> point(const std::vector<std::vector<int>>& coords) {
  std::vector<Weight> out;
  for (const auto& c : coords) out.push_back(weight(c));
  return out;
}

// The Schubert and Belkale-Kumar machinery for one Cartan type.
struct Bundle {
  explicit Bundle(const std::string& type, ThetaConvention convention = ThetaConvention::kInverse)
      : weyl(RootSystem(CartanType::parse(type))), schubert(weyl), bk(schubert, convention) {}

  const RootSystem& rs() const { return weyl.root_system(); }
  WeylId word(const std::vector<int>& one_based) const {
    std::vector<int> w;
    for (int i : one_based) w.push_back(i - 1);
    return weyl.from_word(w);
  }

  WeylGroup weyl;
  SchubertCalculus schubert;
  BkProduct bk;
};

// Visits every tuple of s+1 dominant weights with coordinates in [0, box].
template <typename F>
void for_each_box_tuple(int rank, int s, int box, F&& f) {
  const int dim = (s + 1) * rank;
  std::vector<int> c(dim, 0);
  while (true) {
    WeightTuple t(s + 1, LatticeWeight(rank));
    for (int i = 0; i < dim; ++i) t[i / rank][i % rank] = c[i];
    f(t);
    int i = dim - 1;
    while (i >= 0 && c[i] == box) c[i--] = 0;
    if (i < 0) return;
    ++c[i];
  }
}

inline std::vector<Weight> to_weights(const WeightTuple& t) {
  std::vector<Weight> out;
  for (const auto& w : t) out.push_back(Weight::from_ints(w));
  return out;
}

inline bool satisfies_all(const WeylGroup& weyl, const std::vector<ConeInequality>& ineqs,
                          const WeightTuple& t) {
  const auto pt = to_weights(t);
  for (const auto& q : ineqs) {
    if (q.evaluate(weyl, pt) < 0) return false;
  }
  return true;
}

}  // namespace tcone::testing

#endif  // TENSORCONE_TESTS_SUPPORT_HPP_
