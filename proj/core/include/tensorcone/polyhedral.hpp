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

#ifndef TENSORCONE_POLYHEDRAL_HPP_
#define TENSORCONE_POLYHEDRAL_HPP_

#include <vector>

#include "tensorcone/rational.hpp"

namespace tcone {

using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

Rational dot(const RationalVector& a, const RationalVector& b);

// Rank of a list of row vectors, by exact Gaussian elimination.
int matrix_rank(std::vector<RationalVector> rows);

// The unique primitive integer vector on the same ray. Zero stays zero.
IntegerVector primitive(const RationalVector& v);
RationalVector to_rational(const IntegerVector& v);

/// A pointed polyhedral cone inside the nonnegative orthant of Q^d, given
/// by linear inequalities a.x >= 0 and equalities a.x = 0, converted to its
/// extreme rays by the double-description method in exact arithmetic.
class PolyhedralCone {
 public:
  explicit PolyhedralCone(int dim);

  int dim() const { return dim_; }
  void add_inequality(const RationalVector& a);
  void add_equality(const RationalVector& a);

  // Primitive integer generators, sorted.
  const std::vector<IntegerVector>& rays() const { return rays_; }
  // Dimension of the linear span of the cone.
  int span_dim() const;
  bool contains(const RationalVector& x) const;

 private:
  void cut(const RationalVector& a, bool equality);

  int dim_;
  std::vector<RationalVector> constraints_;
  std::vector<bool> is_equality_;
  std::vector<IntegerVector> rays_;
};

}  // namespace tcone

#endif  // TENSORCONE_POLYHEDRAL_HPP_
