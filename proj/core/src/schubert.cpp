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

#include "tensorcone/schubert.hpp"

#include "tensorcone/errors.hpp"

namespace tcone {

Rational CohClass::coefficient(WeylId w) const {
  auto it = coeffs.find(w);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool CohClass::is_homogeneous(const WeylGroup& weyl) const {
  int degree = -1;
  for (const auto& [w, c] : coeffs) {
    if (c == 0) continue;
    if (degree >= 0 && weyl.length(w) != degree) return false;
    degree = weyl.length(w);
  }
  return true;
}

SchubertCalculus::SchubertCalculus(const WeylGroup& weyl) : weyl_(weyl) {
  const auto& rs = weyl_.root_system();
  const int r = rs.rank();
  for (int i = 0; i < r; ++i) {
    simple_root_forms_.push_back(Polynomial::linear(rs.simple_root(i)));
    // s_i(omega_i) = omega_i - alpha_i; the other fundamental weights are fixed.
    reflected_variable_.push_back(Polynomial::variable(r, i) - simple_root_forms_.back());
  }

  Polynomial top = Polynomial::constant(r, Rational(1, static_cast<long>(weyl_.size())));
  for (const auto& root : rs.positive_roots()) top = top * Polynomial::linear(root.weight_coords);

  reps_.assign(weyl_.size(), Polynomial(r));
  reps_[weyl_.longest()] = std::move(top);
  for (WeylId w = weyl_.longest(); w-- > 0;) {
    for (int i = 0; i < r; ++i) {
      const WeylId up = weyl_.times_simple(w, i);
      if (weyl_.length(up) > weyl_.length(w)) {
        reps_[w] = divided_difference(i, reps_[up]);
        break;
      }
    }
  }
}

Polynomial SchubertCalculus::reflect(int i, const Polynomial& f) const {
  return f.substitute(i, reflected_variable_.at(i));
}

Polynomial SchubertCalculus::divided_difference(int i, const Polynomial& f) const {
  auto q = (f - reflect(i, f)).divide_exact(simple_root_forms_.at(i));
  if (!q) throw ConsistencyError("divided difference left a remainder");
  return *q;
}

Polynomial SchubertCalculus::divided_difference(const std::vector<int>& word,
                                                const Polynomial& f) const {
  Polynomial g = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) g = divided_difference(*it, g);
  return g;
}

const std::map<WeylId, std::int64_t>& SchubertCalculus::gb_product(WeylId u, WeylId v) const {
  const auto key = std::minmax(u, v);
  {
    std::lock_guard lock(mutex_);
    if (auto it = products_.find(key); it != products_.end()) return it->second;
  }
  std::map<WeylId, std::int64_t> result;
  const int degree = weyl_.length(u) + weyl_.length(v);
  if (degree <= weyl_.length(weyl_.longest())) {
    // c_{u,v}^w is the constant d_w(S_u S_v) for l(w) = degree. Walk W by
    // length, obtaining d_w from d_{s_i w} with i the first letter of w.
    std::vector<Polynomial> partial(weyl_.size());
    std::vector<bool> have(weyl_.size(), false);
    partial[weyl_.identity()] = representative(u) * representative(v);
    have[weyl_.identity()] = true;
    if (degree == 0) result.emplace(weyl_.identity(), to_int64(partial[weyl_.identity()].constant_term()));
    for (const auto& e : weyl_.elements()) {
      if (e.length == 0) continue;
      if (e.length > degree) break;
      const WeylId rest = weyl_.simple_times(e.word.front(), e.id);
      if (!have[rest] || partial[rest].is_zero()) continue;
      partial[e.id] = divided_difference(e.word.front(), partial[rest]);
      have[e.id] = true;
      if (e.length == degree && !partial[e.id].is_zero()) {
        if (partial[e.id].degree() != 0) {
          throw ConsistencyError("structure constant extraction left a non-constant");
        }
        const Rational c = partial[e.id].constant_term();
        if (!is_integer(c) || c < 0) {
          throw ConsistencyError("structure constant " + to_string(c) +
                                 " is not a non-negative integer");
        }
        result.emplace(e.id, to_int64(c));
      }
    }
  }
  std::lock_guard lock(mutex_);
  return products_.emplace(key, std::move(result)).first->second;
}

void SchubertCalculus::require_min_rep(const ParabolicSubset& p, WeylId w) const {
  if (!weyl_.is_min_coset_rep(w, p)) {
    throw UsageError("element " + std::to_string(w) + " is not a minimal coset representative for P" +
                     p.to_string());
  }
}

CohClass SchubertCalculus::cup_expand(const ParabolicSubset& p, WeylId u, WeylId v) const {
  require_min_rep(p, u);
  require_min_rep(p, v);
  CohClass out{p, {}};
  for (const auto& [w, c] : gb_product(u, v)) {
    if (!weyl_.is_min_coset_rep(w, p)) {
      throw ConsistencyError("product of pulled-back classes left the W^P span");
    }
    out.coeffs.emplace(w, c);
  }
  return out;
}

CohClass SchubertCalculus::chevalley_multiply(int i, WeylId v) const {
  const auto& rs = weyl_.root_system();
  const Weight omega = rs.fundamental_weight(i);
  CohClass out{ParabolicSubset::borel(rs.rank()), {}};
  for (const auto& beta : rs.positive_roots()) {
    // s_beta(rho) = rho - <rho, beta^vee> beta
    const Weight image = rs.rho() - rs.coroot_pairing(rs.rho(), beta) * beta.weight_coords;
    const WeylId reflection = weyl_.from_rho_image(image.to_ints());
    const WeylId x = weyl_.compose(v, reflection);
    if (weyl_.length(x) != weyl_.length(v) + 1) continue;
    const Rational c = rs.coroot_pairing(omega, beta);
    if (c != 0) out.coeffs[x] += c;
  }
  return out;
}

WeylId SchubertCalculus::top_class(const ParabolicSubset& p) const {
  return weyl_.project_to_coset(weyl_.longest(), p);
}

CohClass SchubertCalculus::point_class(const ParabolicSubset& p) const {
  return CohClass{p, {{top_class(p), Rational(1)}}};
}

std::int64_t SchubertCalculus::multi_point_coefficient(const ParabolicSubset& p,
                                                       std::span<const WeylId> tuple) const {
  if (tuple.empty()) return 0;
  int degree = 0;
  for (WeylId w : tuple) {
    require_min_rep(p, w);
    degree += weyl_.length(w);
  }
  if (degree != weyl_.flag_dimension(p)) return 0;
  std::map<WeylId, std::int64_t> current{{tuple[0], 1}};
  for (std::size_t k = 1; k < tuple.size(); ++k) {
    std::map<WeylId, std::int64_t> next;
    for (const auto& [x, cx] : current) {
      for (const auto& [w, c] : gb_product(x, tuple[k])) next[w] += cx * c;
    }
    current = std::move(next);
  }
  auto it = current.find(top_class(p));
  return it == current.end() ? 0 : it->second;
}

WeylId SchubertCalculus::dual(const ParabolicSubset& p, WeylId u) const {
  require_min_rep(p, u);
  const int target = weyl_.flag_dimension(p) - weyl_.length(u);
  std::optional<WeylId> found;
  for (WeylId v : weyl_.min_coset_reps(p)) {
    if (weyl_.length(v) != target) continue;
    const WeylId pair[2] = {u, v};
    const std::int64_t c = multi_point_coefficient(p, pair);
    if (c == 0) continue;
    if (c != 1 || found) throw ConsistencyError("Poincare duality pairing is not a permutation");
    found = v;
  }
  if (!found) throw ConsistencyError("no Poincare dual found");
  return *found;
}

}  // namespace tcone
