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

#include "tensorcone/polyhedral.hpp"

#include <algorithm>
#include <set>

#include "tensorcone/errors.hpp"

namespace tcone {

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw UsageError("dot: dimension mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

int matrix_rank(std::vector<RationalVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

IntegerVector primitive(const RationalVector& v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out;
  Integer g = 0;
  for (const auto& x : v) {
    Rational scaled = x * den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

RationalVector to_rational(const IntegerVector& v) {
  return RationalVector(v.begin(), v.end());
}

PolyhedralCone::PolyhedralCone(int dim) : dim_(dim) {
  if (dim < 1) throw UsageError("cone dimension must be positive");
  for (int i = 0; i < dim; ++i) {
    IntegerVector e(dim, 0);
    e[i] = 1;
    rays_.push_back(std::move(e));
    RationalVector a(dim, 0);
    a[i] = 1;
    constraints_.push_back(std::move(a));
    is_equality_.push_back(false);
  }
}

void PolyhedralCone::add_inequality(const RationalVector& a) { cut(a, false); }

void PolyhedralCone::add_equality(const RationalVector& a) { cut(a, true); }

void PolyhedralCone::cut(const RationalVector& a, bool equality) {
  if (static_cast<int>(a.size()) != dim_) throw UsageError("constraint dimension mismatch");
  std::vector<RationalVector> rays;
  for (const auto& r : rays_) rays.push_back(to_rational(r));
  std::vector<Rational> value;
  for (const auto& r : rays) value.push_back(dot(a, r));

  // Zero sets of the current rays against the constraints seen so far.
  std::vector<std::vector<bool>> zeros(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) {
    for (const auto& c : constraints_) zeros[i].push_back(dot(c, rays[i]) == 0);
  }

  std::set<IntegerVector> next;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (value[i] == 0 || (!equality && value[i] > 0)) next.insert(rays_[i]);
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (value[i] <= 0) continue;
    for (std::size_t j = 0; j < rays.size(); ++j) {
      if (value[j] >= 0) continue;
      std::vector<bool> common(constraints_.size());
      int count = 0;
      for (std::size_t c = 0; c < constraints_.size(); ++c) {
        common[c] = zeros[i][c] && zeros[j][c];
        count += common[c];
      }
      if (count < dim_ - 2) continue;
      bool adjacent = true;
      for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
        if (k == i || k == j) continue;
        bool covers = true;
        for (std::size_t c = 0; c < constraints_.size() && covers; ++c) {
          if (common[c] && !zeros[k][c]) covers = false;
        }
        if (covers) adjacent = false;
      }
      if (!adjacent) continue;
      RationalVector combo(dim_);
      for (int k = 0; k < dim_; ++k) combo[k] = value[i] * rays[j][k] - value[j] * rays[i][k];
      next.insert(primitive(combo));
    }
  }
  rays_.assign(next.begin(), next.end());
  constraints_.push_back(a);
  is_equality_.push_back(equality);
}

int PolyhedralCone::span_dim() const {
  std::vector<RationalVector> rows;
  for (const auto& r : rays_) rows.push_back(to_rational(r));
  return matrix_rank(std::move(rows));
}

bool PolyhedralCone::contains(const RationalVector& x) const {
  for (std::size_t c = 0; c < constraints_.size(); ++c) {
    const Rational v = dot(constraints_[c], x);
    if (v < 0 || (is_equality_[c] && v != 0)) return false;
  }
  return true;
}

}  // namespace tcone
