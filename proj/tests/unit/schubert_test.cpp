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

std::vector<Polynomial> low_degree_monomials(int n) {
  std::vector<Polynomial> out;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; a + b <= 3; ++b) {
      Monomial m(n, 0);
      m[0] = a;
      if (n > 1) m[1] = b;
      else if (b > 0) continue;
      Polynomial p(n);
      p.add_term(m, 1);
      out.push_back(p);
    }
  }
  return out;
}

TEST(SchubertTest, DividedDifferenceExamples) {
  Bundle a1("A1");
  const Polynomial x1 = Polynomial::variable(1, 0);
  EXPECT_EQ(a1.schubert.divided_difference(0, x1), Polynomial::constant(1, 1));
  EXPECT_TRUE(a1.schubert.divided_difference(0, Polynomial::constant(1, 5)).is_zero());
  Bundle a2("A2");
  // x2 is fixed by s1 in A2.
  EXPECT_TRUE(a2.schubert.divided_difference(0, Polynomial::variable(2, 1)).is_zero());
}

class SchubertTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(SchubertTypes, NilCoxeterRelations) {
  Bundle t(GetParam());
  const int n = t.weyl.rank();
  const auto& sc = t.schubert;
  for (const auto& f : low_degree_monomials(n)) {
    for (int i = 0; i < n; ++i) {
      EXPECT_TRUE(sc.divided_difference(i, sc.divided_difference(i, f)).is_zero());
      for (int j = i + 1; j < n; ++j) {
        const int a = t.rs().cartan(i, j) * t.rs().cartan(j, i);
        const int m = a == 0 ? 2 : a == 1 ? 3 : a == 2 ? 4 : 6;
        std::vector<int> left, right;
        for (int k = 0; k < m; ++k) {
          left.push_back(k % 2 == 0 ? i : j);
          right.push_back(k % 2 == 0 ? j : i);
        }
        EXPECT_EQ(sc.divided_difference(left, f), sc.divided_difference(right, f));
      }
    }
  }
}

TEST_P(SchubertTypes, RepresentativesAreHomogeneousOfLengthDegree) {
  Bundle t(GetParam());
  for (const auto& e : t.weyl.elements()) {
    const auto& p = t.schubert.representative(e.id);
    EXPECT_TRUE(p.is_homogeneous());
    EXPECT_EQ(p.degree(), e.length);
  }
  EXPECT_EQ(t.schubert.representative(t.weyl.identity()),
            Polynomial::constant(t.weyl.rank(), 1));
}

TEST_P(SchubertTypes, ChevalleyAgreesWithDividedDifferences) {
  Bundle t(GetParam());
  const auto borel = ParabolicSubset::borel(t.weyl.rank());
  for (int i = 0; i < t.weyl.rank(); ++i) {
    for (const auto& e : t.weyl.elements()) {
      EXPECT_EQ(t.schubert.cup_expand(borel, t.weyl.simple_reflection(i), e.id),
                t.schubert.chevalley_multiply(i, e.id));
    }
  }
}

TEST_P(SchubertTypes, DualityPairingIsAPermutation) {
  Bundle t(GetParam());
  for (const auto& p : all_parabolics(t.weyl.rank())) {
    const auto reps = t.weyl.min_coset_reps(p);
    for (WeylId u : reps) {
      int ones = 0;
      for (WeylId v : reps) {
        const WeylId pair[2] = {u, v};
        const auto c = t.schubert.multi_point_coefficient(p, pair);
        EXPECT_TRUE(c == 0 || c == 1);
        ones += c == 1;
      }
      EXPECT_EQ(ones, 1);
      EXPECT_EQ(t.schubert.dual(p, t.schubert.dual(p, u)), u);
    }
  }
}

TEST_P(SchubertTypes, PoincarePolynomialIsPalindromic) {
  Bundle t(GetParam());
  for (const auto& p : all_parabolics(t.weyl.rank())) {
    const int dim = t.weyl.flag_dimension(p);
    std::vector<int> counts(dim + 1, 0);
    for (WeylId u : t.weyl.min_coset_reps(p)) ++counts[t.weyl.length(u)];
    std::vector<int> reversed(counts.rbegin(), counts.rend());
    EXPECT_EQ(counts, reversed) << p.to_string();
  }
}

TEST_P(SchubertTypes, CupProductIsCommutativeAssociativeAndNonNegative) {
  Bundle t(GetParam());
  const auto& sc = t.schubert;
  for (const auto& p : all_parabolics(t.weyl.rank())) {
    const auto reps = t.weyl.min_coset_reps(p);
    for (WeylId u : reps) {
      for (WeylId v : reps) {
        const auto uv = sc.cup_expand(p, u, v);
        EXPECT_EQ(uv, sc.cup_expand(p, v, u));
        EXPECT_TRUE(uv.is_homogeneous(t.weyl));
        for (const auto& [w, c] : uv.coeffs) {
          EXPECT_TRUE(is_integer(c));
          EXPECT_GE(c, 0);
          EXPECT_EQ(t.weyl.length(w), t.weyl.length(u) + t.weyl.length(v));
        }
        for (WeylId x : reps) {
          std::map<WeylId, Rational> left, right;
          for (const auto& [w, c] : uv.coeffs) {
            for (const auto& [z, d] : sc.cup_expand(p, w, x).coeffs) left[z] += c * d;
          }
          for (const auto& [w, c] : sc.cup_expand(p, v, x).coeffs) {
            for (const auto& [z, d] : sc.cup_expand(p, u, w).coeffs) right[z] += c * d;
          }
          EXPECT_EQ(left, right);
        }
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, SchubertTypes, ::testing::Values("A1", "A2", "B2", "A3", "G2"));

TEST(SchubertTest, SpecExamples) {
  Bundle a1("A1");
  EXPECT_EQ(a1.schubert.representative(a1.word({1})), Polynomial::variable(1, 0));
  const auto b1 = ParabolicSubset::borel(1);
  EXPECT_TRUE(a1.schubert.cup_expand(b1, a1.word({1}), a1.word({1})).coeffs.empty());
  const WeylId t1[3] = {a1.word({1}), a1.word({}), a1.word({})};
  EXPECT_EQ(a1.schubert.multi_point_coefficient(b1, t1), 1);

  Bundle a2("A2");
  const auto b = ParabolicSubset::borel(2);
  const auto prod = a2.schubert.cup_expand(b, a2.word({1}), a2.word({2}));
  EXPECT_EQ(prod.coeffs.size(), 2u);
  EXPECT_EQ(prod.coefficient(a2.word({1, 2})), 1);
  EXPECT_EQ(prod.coefficient(a2.word({2, 1})), 1);
  EXPECT_EQ(a2.schubert.cup_expand(b, a2.word({}), a2.word({2, 1})).coefficient(a2.word({2, 1})), 1);
  EXPECT_EQ(a2.schubert.representative(a2.word({1, 2})).degree(), 2);
  EXPECT_EQ(a2.schubert.dual(b, a2.word({})), a2.weyl.longest());
  EXPECT_EQ(a2.weyl.length(a2.schubert.dual(b, a2.word({1}))), 2);

  const WeylId all_e[3] = {0, 0, 0};
  EXPECT_EQ(a2.schubert.multi_point_coefficient(b, all_e), 0);
  EXPECT_EQ(a2.schubert.point_class(b).coefficient(a2.weyl.longest()), 1);
}

TEST(SchubertTest, ChevalleyExample) {
  Bundle a2("A2");
  const auto c = a2.schubert.chevalley_multiply(0, a2.word({2}));
  EXPECT_EQ(c.coefficient(a2.word({2, 1})), 1);
  EXPECT_EQ(c.coefficient(a2.word({1, 2})), 1);
  EXPECT_EQ(a2.schubert.chevalley_multiply(0, a2.word({})).coefficient(a2.word({1})), 1);
}

TEST(SchubertTest, NonMinimalRepresentativeIsRejected) {
  Bundle a2("A2");
  const auto p = ParabolicSubset::from_levi(2, {0});
  EXPECT_THROW(a2.schubert.cup_expand(p, a2.word({1}), a2.word({})), UsageError);
}

TEST(SchubertTest, GrassmannianLittlewoodRichardson) {
  // H^*(Gr(2,4)): sigma_1^2 = sigma_2 + sigma_{1,1}.
  Bundle a3("A3");
  const auto p = ParabolicSubset::from_complement(3, {1});
  const WeylId s2 = a3.word({2});
  const auto sq = a3.schubert.cup_expand(p, s2, s2);
  EXPECT_EQ(sq.coeffs.size(), 2u);
  for (const auto& [w, c] : sq.coeffs) EXPECT_EQ(c, 1);
}

}  // namespace
}  // namespace tcone
