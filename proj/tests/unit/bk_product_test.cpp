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

#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

using testing::Bundle;

// True iff the degenerate and cup point tables agree on every degree-valid
// triple of the parabolic.
bool bk_equals_cup(const Bundle& t, const ParabolicSubset& p) {
  for (const auto& tuple : t.bk.degree_valid_tuples(2, p)) {
    if (t.bk.bk_point_coefficient(p, tuple.reps) != tuple.cup_coeff) return false;
  }
  return true;
}

TEST(BkProductTest, SlTwoTheta) {
  Bundle a1("A1");
  const auto theta = a1.bk.enumerate_theta(2, ParabolicSubset::borel(1));
  ASSERT_EQ(theta.size(), 3u);
  std::vector<std::vector<WeylId>> reps;
  for (const auto& t : theta) {
    EXPECT_TRUE(t.retained);
    EXPECT_EQ(t.cup_coeff, 1);
    reps.push_back(t.reps);
  }
  const WeylId e = a1.word({}), s = a1.word({1});
  EXPECT_EQ(reps, (std::vector<std::vector<WeylId>>{{e, e, s}, {e, s, e}, {s, e, e}}));
  const WeylId t1[3] = {s, e, e};
  EXPECT_TRUE(a1.bk.levi_movable(ParabolicSubset::borel(1), t1));
  EXPECT_EQ(a1.bk.bk_point_coefficient(ParabolicSubset::borel(1), t1), 1);
}

TEST(BkProductTest, PreconditionViolationsAreUsageErrors) {
  Bundle a2("A2");
  const auto b = ParabolicSubset::borel(2);
  const WeylId short_tuple[3] = {a2.word({1}), 0, 0};
  EXPECT_THROW(a2.bk.levi_movable(b, short_tuple), UsageError);
  // Exactly one of the two length-two elements is Poincare dual to s1.
  WeylId zero_cup[3] = {a2.word({1}), a2.word({1, 2}), 0};
  if (a2.schubert.multi_point_coefficient(b, zero_cup) != 0) zero_cup[1] = a2.word({2, 1});
  ASSERT_EQ(a2.schubert.multi_point_coefficient(b, zero_cup), 0);
  EXPECT_THROW(a2.bk.levi_movable(b, zero_cup), UsageError);
  EXPECT_EQ(a2.bk.bk_point_coefficient(b, zero_cup), 0);
  EXPECT_THROW(a2.bk.enumerate_theta(0, b), UsageError);
}

TEST(BkProductTest, WholeGroupIsExcluded) {
  Bundle a2("A2");
  EXPECT_TRUE(a2.bk.enumerate_theta(2, ParabolicSubset::whole(2)).empty());
}

class BkTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(BkTypes, DichotomyAndPermutationSymmetry) {
  Bundle t(GetParam());
  for (const auto& p : all_parabolics(t.weyl.rank())) {
    for (const auto& tuple : t.bk.degree_valid_tuples(2, p)) {
      const auto bk = t.bk.bk_point_coefficient(p, tuple.reps);
      EXPECT_TRUE(bk == 0 || bk == tuple.cup_coeff);
      EXPECT_EQ(tuple.retained, bk != 0);
      auto perm = tuple.reps;
      std::sort(perm.begin(), perm.end());
      do {
        EXPECT_EQ(t.bk.bk_point_coefficient(p, perm), bk);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_P(BkTypes, DualPairsAreInThetaForPairs) {
  Bundle t(GetParam());
  const auto b = ParabolicSubset::borel(t.weyl.rank());
  const auto theta = t.bk.enumerate_theta(1, b);
  EXPECT_EQ(theta.size(), t.weyl.size());
  for (const auto& m : theta) EXPECT_EQ(t.schubert.dual(b, m.reps[0]), m.reps[1]);
}

TEST_P(BkTypes, DegenerateProductIsAssociative) {
  Bundle t(GetParam());
  for (const auto& p : all_parabolics(t.weyl.rank())) {
    if (p.is_whole()) continue;
    const auto reps = t.weyl.min_coset_reps(p);
    // c[u][v][w]: coefficient of sigma_w in sigma_u (.) sigma_v.
    std::map<std::pair<WeylId, WeylId>, std::map<WeylId, std::int64_t>> c;
    for (WeylId u : reps) {
      for (WeylId v : reps) {
        for (WeylId w : reps) {
          if (t.weyl.length(w) != t.weyl.length(u) + t.weyl.length(v)) continue;
          const WeylId tuple[3] = {u, v, t.schubert.dual(p, w)};
          if (auto x = t.bk.bk_point_coefficient(p, tuple)) c[{u, v}][w] = x;
        }
      }
    }
    for (WeylId u : reps) {
      for (WeylId v : reps) {
        for (WeylId x : reps) {
          std::map<WeylId, std::int64_t> left, right;
          for (const auto& [w, a] : c[{u, v}]) {
            for (const auto& [z, b] : c[{w, x}]) left[z] += a * b;
          }
          for (const auto& [w, a] : c[{v, x}]) {
            for (const auto& [z, b] : c[{u, w}]) right[z] += a * b;
          }
          EXPECT_EQ(left, right) << GetParam() << " P" << p.to_string();
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, BkTypes, ::testing::Values("A1", "A2", "B2", "A3", "G2"));

TEST(BkProductTest, CominusculeParabolicsKeepTheWholeCupProduct) {
  // Maximal parabolics of type A, the quadrics of B and D, the Lagrangian
  // Grassmannian of C, and the spinor varieties of D.
  const std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"A2", {0}}, {"A2", {1}}, {"A3", {0}}, {"A3", {1}}, {"A3", {2}}, {"A4", {1}},
      {"B2", {0}}, {"B3", {0}}, {"C2", {1}}, {"C3", {2}}, {"D4", {0}}, {"D4", {3}}};
  for (const auto& [type, complement] : cases) {
    Bundle t(type);
    const auto p = ParabolicSubset::from_complement(t.weyl.rank(), complement);
    EXPECT_TRUE(bk_equals_cup(t, p)) << type << " P" << p.to_string();
  }
}

TEST(BkProductTest, FullFlagVarietiesAreGenuinelyDegenerate) {
  Bundle a2("A2");
  EXPECT_FALSE(bk_equals_cup(a2, ParabolicSubset::borel(2)));
}

TEST(BkProductTest, DirectConventionBreaksCominusculeEquality) {
  Bundle t("A2", ThetaConvention::kDirect);
  EXPECT_FALSE(bk_equals_cup(t, ParabolicSubset::from_complement(2, {0})));
}

TEST(BkProductTest, BudgetIsEnforced) {
  Bundle a3("A3");
  EXPECT_THROW(a3.bk.enumerate_theta(3, ParabolicSubset::borel(3), 1000), ResourceError);
}

}  // namespace
}  // namespace tcone
