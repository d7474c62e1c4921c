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

#include "tensorcone/bk_product.hpp"

#include <functional>

#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

void check_budget(std::size_t base, int factors, std::uint64_t budget) {
  long double count = 1;
  for (int i = 0; i < factors; ++i) count *= static_cast<long double>(base);
  if (count > static_cast<long double>(budget)) {
    throw ResourceError("enumerating " + std::to_string(base) + "^" + std::to_string(factors) +
                        " tuples exceeds the budget of " + std::to_string(budget));
  }
}

}  // namespace

BkProduct::BkProduct(const SchubertCalculus& schubert, ThetaConvention convention)
    : schubert_(schubert), convention_(convention) {}

Weight BkProduct::class_character(const ParabolicSubset& p, WeylId u) const {
  const WeylId w = convention_ == ThetaConvention::kInverse ? weyl().inverse(u) : u;
  return weyl().theta(p, w);
}

bool BkProduct::character_condition(const ParabolicSubset& p, std::span<const WeylId> reps) const {
  const auto& rs = weyl().root_system();
  const Weight theta_p = weyl().theta(p, weyl().identity());
  Weight total(rs.rank());
  for (WeylId u : reps) total += class_character(p, u);
  total -= Rational(static_cast<long>(reps.size()) - 1) * theta_p;
  for (int k : p.complement()) {
    if (rs.pair_coweight(total, k) != 0) return false;
  }
  return true;
}

bool BkProduct::levi_movable(const ParabolicSubset& p, std::span<const WeylId> reps) const {
  int degree = 0;
  for (WeylId u : reps) degree += weyl().length(u);
  if (degree != weyl().flag_dimension(p)) {
    throw UsageError("levi_movable: degrees do not add up to dim G/P");
  }
  if (schubert_.multi_point_coefficient(p, reps) == 0) {
    throw UsageError("levi_movable: cup product has no point component");
  }
  return character_condition(p, reps);
}

std::int64_t BkProduct::bk_point_coefficient(const ParabolicSubset& p,
                                             std::span<const WeylId> reps) const {
  const std::int64_t cup = schubert_.multi_point_coefficient(p, reps);
  if (cup == 0) return 0;
  return character_condition(p, reps) ? cup : 0;
}

std::vector<BkTuple> BkProduct::degree_valid_tuples(int s, const ParabolicSubset& p,
                                                    std::uint64_t budget) const {
  if (s < 1) throw UsageError("s must be at least 1");
  std::vector<BkTuple> out;
  if (p.is_whole()) return out;
  const auto reps = weyl().min_coset_reps(p);
  check_budget(reps.size(), s + 1, budget);
  const int dim = weyl().flag_dimension(p);

  // Depth-first over tuples with pruning on the partial degree.
  std::vector<WeylId> tuple(s + 1);
  std::function<void(int, int)> recurse = [&](int pos, int degree) {
    if (pos == s + 1) {
      if (degree != dim) return;
      BkTuple t{p, tuple, schubert_.multi_point_coefficient(p, tuple), false};
      t.retained = t.cup_coeff != 0 && character_condition(p, tuple);
      out.push_back(std::move(t));
      return;
    }
    for (WeylId u : reps) {
      const int d = degree + weyl().length(u);
      if (d > dim) continue;
      tuple[pos] = u;
      recurse(pos + 1, d);
    }
  };
  recurse(0, 0);
  return out;
}

std::vector<BkTuple> BkProduct::enumerate_theta(int s, const ParabolicSubset& p,
                                                std::uint64_t budget) const {
  std::vector<BkTuple> out;
  for (auto& t : degree_valid_tuples(s, p, budget)) {
    if (t.retained && t.cup_coeff == 1) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace tcone
