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

#include "tensorcone/weyl_group.hpp"

#include <algorithm>
#include <deque>

#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int k = 2; k <= n; ++k) out *= static_cast<std::uint64_t>(k);
  return out;
}

}  // namespace

ParabolicSubset ParabolicSubset::from_levi(int rank, const std::vector<int>& levi_simples) {
  ParabolicSubset p;
  p.levi_.assign(rank, false);
  for (int i : levi_simples) {
    if (i < 0 || i >= rank) throw ConfigError("simple index out of range in parabolic");
    p.levi_[i] = true;
  }
  return p;
}

ParabolicSubset ParabolicSubset::from_complement(int rank, const std::vector<int>& complement) {
  ParabolicSubset p;
  p.levi_.assign(rank, true);
  for (int i : complement) {
    if (i < 0 || i >= rank) throw ConfigError("simple index out of range in parabolic");
    p.levi_[i] = false;
  }
  return p;
}

ParabolicSubset ParabolicSubset::whole(int rank) { return from_complement(rank, {}); }

std::vector<int> ParabolicSubset::levi_simples() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    if (levi_[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> ParabolicSubset::complement() const {
  std::vector<int> out;
  for (int i = 0; i < rank(); ++i) {
    if (!levi_[i]) out.push_back(i);
  }
  return out;
}

bool ParabolicSubset::is_borel() const {
  return std::none_of(levi_.begin(), levi_.end(), [](bool b) { return b; });
}

bool ParabolicSubset::is_whole() const {
  return std::all_of(levi_.begin(), levi_.end(), [](bool b) { return b; });
}

bool ParabolicSubset::is_subset_of(const ParabolicSubset& other) const {
  if (other.rank() != rank()) throw UsageError("parabolic rank mismatch");
  for (int i = 0; i < rank(); ++i) {
    if (levi_[i] && !other.levi_[i]) return false;
  }
  return true;
}

std::string ParabolicSubset::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int k : complement()) {
    if (!first) out += ",";
    out += std::to_string(k + 1);
    first = false;
  }
  return out + "}";
}

std::vector<ParabolicSubset> all_parabolics(int rank) {
  std::vector<ParabolicSubset> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> levi;
    for (int i = 0; i < rank; ++i) {
      if (mask & (1u << i)) levi.push_back(i);
    }
    out.push_back(ParabolicSubset::from_levi(rank, levi));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.levi_simples().size() < b.levi_simples().size();
  });
  return out;
}

std::uint64_t classical_weyl_order(const CartanType& type) {
  std::uint64_t order = 1;
  for (const auto& f : type.factors()) {
    const int n = f.rank;
    switch (f.family) {
      case Family::A: order *= factorial(n + 1); break;
      case Family::B:
      case Family::C: order *= (std::uint64_t{1} << n) * factorial(n); break;
      case Family::D: order *= (std::uint64_t{1} << (n - 1)) * factorial(n); break;
      case Family::F: order *= 1152; break;
      case Family::G: order *= 12; break;
    }
  }
  return order;
}

WeylGroup::WeylGroup(RootSystem rs, std::size_t max_order) : rs_(std::move(rs)) {
  const std::uint64_t expected = classical_weyl_order(rs_.cartan_type());
  if (expected > max_order) {
    throw ResourceError("Weyl group of " + rs_.cartan_type().name() + " has order " +
                        std::to_string(expected) + ", above the enumeration bound " +
                        std::to_string(max_order));
  }
  const int r = rank();
  const auto& a = rs_.cartan_matrix();
  auto reflect = [&](std::vector<int> v, int i) {
    const int p = v[i];
    for (int j = 0; j < r; ++j) v[j] -= p * a[j][i];
    return v;
  };

  // The W-orbit of rho is regular, so w <-> w(rho) is a bijection.
  const std::vector<int> rho(r, 1);
  std::vector<std::vector<int>> orbit{rho};
  std::map<std::vector<int>, bool> seen{{rho, true}};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      auto next = reflect(orbit[head], i);
      if (seen.emplace(next, true).second) orbit.push_back(std::move(next));
    }
  }
  if (orbit.size() != expected) {
    throw ConsistencyError("Weyl group enumeration found " + std::to_string(orbit.size()) +
                           " elements, expected " + std::to_string(expected));
  }

  // Lexicographically smallest reduced word: peel off the smallest left descent,
  // which is the smallest i with <w(rho), alpha_i^vee> < 0.
  std::vector<WeylElement> elems;
  elems.reserve(orbit.size());
  for (const auto& image : orbit) {
    WeylElement e;
    auto v = image;
    while (v != rho) {
      int i = 0;
      while (v[i] >= 0) ++i;
      e.word.push_back(i);
      v = reflect(v, i);
    }
    e.length = static_cast<int>(e.word.size());
    elems.push_back(std::move(e));
  }
  std::vector<std::size_t> order(orbit.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (elems[x].length != elems[y].length) return elems[x].length < elems[y].length;
    return elems[x].word < elems[y].word;
  });

  elements_.reserve(orbit.size());
  rho_images_.reserve(orbit.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    WeylElement e = std::move(elems[order[pos]]);
    e.id = static_cast<WeylId>(pos);
    // Matrix of s_{i1} ... s_{ik}: apply the word right-to-left to each basis vector.
    e.matrix.assign(r * r, 0);
    for (int col = 0; col < r; ++col) {
      std::vector<int> v(r, 0);
      v[col] = 1;
      for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) v = reflect(v, *it);
      for (int row = 0; row < r; ++row) e.matrix[row * r + col] = v[row];
    }
    by_rho_image_.emplace(orbit[order[pos]], e.id);
    rho_images_.push_back(orbit[order[pos]]);
    elements_.push_back(std::move(e));
  }

  const std::size_t n = elements_.size();
  right_simple_.assign(n, std::vector<WeylId>(r));
  left_simple_.assign(n, std::vector<WeylId>(r));
  inverse_.assign(n, 0);
  for (std::size_t w = 0; w < n; ++w) {
    const auto& m = elements_[w].matrix;
    for (int i = 0; i < r; ++i) {
      left_simple_[w][i] = by_rho_image_.at(reflect(rho_images_[w], i));
      // (w s_i)(rho) = w(rho - alpha_i)
      std::vector<int> shifted(r);
      for (int j = 0; j < r; ++j) shifted[j] = 1 - a[j][i];
      std::vector<int> image(r, 0);
      for (int row = 0; row < r; ++row) {
        for (int col = 0; col < r; ++col) image[row] += m[row * r + col] * shifted[col];
      }
      right_simple_[w][i] = by_rho_image_.at(image);
    }
  }
  for (std::size_t w = 0; w < n; ++w) {
    std::vector<int> rev(elements_[w].word.rbegin(), elements_[w].word.rend());
    inverse_[w] = from_word(rev);
  }
}

WeylId WeylGroup::from_word(const std::vector<int>& word) const {
  WeylId w = identity();
  for (int i : word) {
    if (i < 0 || i >= rank()) throw UsageError("simple index out of range in word");
    w = times_simple(w, i);
  }
  return w;
}

WeylId WeylGroup::compose(WeylId a, WeylId b) const {
  const int r = rank();
  const auto& m = elements_.at(a).matrix;
  const auto& v = rho_images_.at(b);
  std::vector<int> image(r, 0);
  for (int row = 0; row < r; ++row) {
    for (int col = 0; col < r; ++col) image[row] += m[row * r + col] * v[col];
  }
  return by_rho_image_.at(image);
}

Weight WeylGroup::act(WeylId w, const Weight& weight) const {
  const int r = rank();
  if (static_cast<int>(weight.size()) != r) throw UsageError("weight rank mismatch");
  const auto& m = elements_.at(w).matrix;
  Weight out(r);
  for (int row = 0; row < r; ++row) {
    Rational v = 0;
    for (int col = 0; col < r; ++col) {
      if (m[row * r + col] != 0) v += m[row * r + col] * weight[col];
    }
    out[row] = v;
  }
  return out;
}

WeylId WeylGroup::from_rho_image(const std::vector<int>& image) const {
  auto it = by_rho_image_.find(image);
  if (it == by_rho_image_.end()) throw UsageError("weight is not in the W-orbit of rho");
  return it->second;
}

bool WeylGroup::sends_to_positive(WeylId w, const Weight& root) const {
  bool negative = false;
  if (!rs_.find_root(act(w, root), &negative)) throw UsageError("not a root");
  return !negative;
}

std::vector<std::size_t> WeylGroup::inversion_set(WeylId w) const {
  std::vector<std::size_t> out;
  const auto& roots = rs_.positive_roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!sends_to_positive(w, roots[k].weight_coords)) out.push_back(k);
  }
  return out;
}

const std::vector<WeylId>& WeylGroup::cached_subgroup(const ParabolicSubset& p) const {
  std::lock_guard lock(cache_mutex_);
  auto it = subgroup_cache_.find(p);
  if (it != subgroup_cache_.end()) return it->second;
  std::vector<WeylId> out;
  for (const auto& e : elements_) {
    if (std::all_of(e.word.begin(), e.word.end(), [&](int i) { return p.contains(i); })) {
      out.push_back(e.id);
    }
  }
  return subgroup_cache_.emplace(p, std::move(out)).first->second;
}

std::vector<WeylId> WeylGroup::parabolic_subgroup(const ParabolicSubset& p) const {
  if (p.rank() != rank()) throw UsageError("parabolic rank mismatch");
  return cached_subgroup(p);
}

bool WeylGroup::is_min_coset_rep(WeylId w, const ParabolicSubset& p) const {
  for (int i : p.levi_simples()) {
    if (length(times_simple(w, i)) < length(w)) return false;
  }
  return true;
}

std::vector<WeylId> WeylGroup::min_coset_reps(const ParabolicSubset& p) const {
  if (p.rank() != rank()) throw UsageError("parabolic rank mismatch");
  std::vector<WeylId> out;
  for (const auto& e : elements_) {
    if (is_min_coset_rep(e.id, p)) out.push_back(e.id);
  }
  return out;
}

WeylId WeylGroup::project_to_coset(WeylId w, const ParabolicSubset& p) const {
  if (p.rank() != rank()) throw UsageError("parabolic rank mismatch");
  WeylId best = w;
  for (WeylId v : cached_subgroup(p)) {
    const WeylId candidate = compose(w, v);
    if (length(candidate) < length(best)) best = candidate;
  }
  return best;
}

WeylId WeylGroup::longest_in_parabolic(const ParabolicSubset& p) const {
  return cached_subgroup(p).back();
}

std::vector<std::size_t> WeylGroup::unipotent_roots(const ParabolicSubset& p) const {
  std::vector<std::size_t> out;
  const auto& roots = rs_.positive_roots();
  const auto comp = p.complement();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (std::any_of(comp.begin(), comp.end(),
                    [&](int i) { return roots[k].simple_coords[i] > 0; })) {
      out.push_back(k);
    }
  }
  return out;
}

int WeylGroup::flag_dimension(const ParabolicSubset& p) const {
  return static_cast<int>(unipotent_roots(p).size());
}

Weight WeylGroup::theta(const ParabolicSubset& p, WeylId w) const {
  const auto& roots = rs_.positive_roots();
  const WeylId w_inv = inverse(w);
  Weight out(rank());
  for (std::size_t k : unipotent_roots(p)) {
    if (sends_to_positive(w_inv, roots[k].weight_coords)) out += roots[k].weight_coords;
  }
  return out;
}

Weight WeylGroup::rho_levi(const ParabolicSubset& p) const {
  const auto unipotent = unipotent_roots(p);
  const auto& roots = rs_.positive_roots();
  Weight out(rank());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (!std::binary_search(unipotent.begin(), unipotent.end(), k)) out += roots[k].weight_coords;
  }
  out *= Rational(1, 2);
  return out;
}

}  // namespace tcone
