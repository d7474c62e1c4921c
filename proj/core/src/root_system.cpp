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

#include "tensorcone/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::F: return 4;
    case Family::G: return 2;
  }
  return 1;
}

std::optional<int> exact_rank(Family f) {
  if (f == Family::F) return 4;
  if (f == Family::G) return 2;
  return std::nullopt;
}

// Kac convention: a[i][j] = <alpha_i^vee, alpha_j>, Bourbaki numbering.
std::vector<std::vector<int>> factor_cartan(const CartanFactor& f) {
  const int n = f.rank;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (f.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case Family::F:
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a[2][1] = -2;
      break;
    case Family::G:
      link(0, 1);
      a[0][1] = -3;  // alpha_1 short
      break;
  }
  return a;
}

std::vector<std::vector<Rational>> invert(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw ConsistencyError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  }
  return inv;
}

}  // namespace

CartanType::CartanType(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ConfigError("empty Cartan type");
  for (const auto& f : factors_) {
    const std::string label = std::string(1, static_cast<char>(f.family)) + std::to_string(f.rank);
    if (f.rank < min_rank(f.family)) {
      throw ConfigError("invalid Cartan factor '" + label + "': rank too small for family");
    }
    if (auto r = exact_rank(f.family); r && *r != f.rank) {
      throw ConfigError("invalid Cartan factor '" + label + "': family requires rank " +
                        std::to_string(*r));
    }
  }
}

CartanType CartanType::parse(std::string_view text) {
  std::vector<CartanFactor> factors;
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::size_t pos = 0;
  while (pos <= upper.size()) {
    const std::size_t next = upper.find('X', pos);
    const std::string piece =
        upper.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    const std::string original(text.substr(pos, piece.size()));
    if (piece.size() < 2) throw ConfigError("invalid Cartan factor '" + original + "'");
    Family fam;
    switch (piece[0]) {
      case 'A': fam = Family::A; break;
      case 'B': fam = Family::B; break;
      case 'C': fam = Family::C; break;
      case 'D': fam = Family::D; break;
      case 'F': fam = Family::F; break;
      case 'G': fam = Family::G; break;
      default: throw ConfigError("invalid Cartan factor '" + original + "': unknown family");
    }
    const std::string digits = piece.substr(1);
    if (digits.size() > 3 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ConfigError("invalid Cartan factor '" + original + "': bad rank");
    }
    factors.push_back({fam, std::stoi(digits)});
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanType::name() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += "x";
    out += static_cast<char>(factors_[i].family);
    out += std::to_string(factors_[i].rank);
  }
  return out;
}

RootSystem::RootSystem(CartanType type, int max_rank) : type_(std::move(type)) {
  rank_ = type_.rank();
  if (rank_ > max_rank) {
    throw ConfigError("Cartan type " + type_.name() + " has rank " + std::to_string(rank_) +
                      ", above the configured cap of " + std::to_string(max_rank));
  }
  cartan_.assign(rank_, std::vector<int>(rank_, 0));
  sym_.assign(rank_, Rational(0));
  int offset = 0;
  for (const auto& f : type_.factors()) {
    const auto block = factor_cartan(f);
    for (int i = 0; i < f.rank; ++i) {
      for (int j = 0; j < f.rank; ++j) cartan_[offset + i][offset + j] = block[i][j];
    }
    // d_i a_ij = d_j a_ji along the (connected) Dynkin diagram of the factor.
    std::vector<Rational> d(f.rank, Rational(0));
    d[0] = 1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < f.rank; ++j) {
        if (j == i || block[i][j] == 0 || d[j] != 0) continue;
        d[j] = d[i] * block[i][j] / block[j][i];
        queue.push_back(j);
      }
    }
    const Rational smallest = *std::min_element(d.begin(), d.end());
    for (int i = 0; i < f.rank; ++i) sym_[offset + i] = d[i] / smallest;
    offset += f.rank;
  }
  cartan_inverse_ = invert(cartan_);

  simple_roots_.reserve(rank_);
  for (int j = 0; j < rank_; ++j) {
    Weight a(rank_);
    for (int i = 0; i < rank_; ++i) a[i] = cartan_[i][j];
    simple_roots_.push_back(std::move(a));
  }

  // Closure of the simple roots under simple reflections, in simple coordinates.
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  std::vector<std::vector<int>> found;
  while (!queue.empty()) {
    auto c = queue.front();
    queue.pop_front();
    found.push_back(c);
    for (int i = 0; i < rank_; ++i) {
      int pairing = 0;
      for (int j = 0; j < rank_; ++j) pairing += cartan_[i][j] * c[j];
      auto image = c;
      image[i] -= pairing;
      const bool nonneg = std::all_of(image.begin(), image.end(), [](int x) { return x >= 0; });
      const bool nonzero = std::any_of(image.begin(), image.end(), [](int x) { return x != 0; });
      if (nonneg && nonzero && seen.insert(image).second) queue.push_back(image);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a) ha += x;
    for (int x : b) hb += x;
    if (ha != hb) return ha < hb;
    return a > b;
  });
  rho_ = Weight(rank_);
  for (auto& c : found) {
    Root r{c, from_simple_coords(c), true};
    root_index_.emplace(r.weight_coords, positive_roots_.size());
    rho_ += r.weight_coords;
    positive_roots_.push_back(std::move(r));
  }
  rho_ *= Rational(1, 2);
}

void RootSystem::check_index(int i) const {
  if (i < 0 || i >= rank_) {
    throw UsageError("simple index " + std::to_string(i) + " out of range for rank " +
                     std::to_string(rank_));
  }
}

const Weight& RootSystem::simple_root(int i) const {
  check_index(i);
  return simple_roots_[i];
}

Weight RootSystem::fundamental_weight(int i) const {
  check_index(i);
  return Weight::unit(rank_, i);
}

Weight RootSystem::reflect(int i, const Weight& w) const {
  check_index(i);
  if (static_cast<int>(w.size()) != rank_) throw UsageError("weight rank mismatch");
  Weight out = w;
  const Rational p = w[i];
  if (p == 0) return out;
  for (int j = 0; j < rank_; ++j) out[j] -= p * cartan_[j][i];
  return out;
}

Rational RootSystem::pair_coweight(const Weight& w, int k) const {
  check_index(k);
  Rational out = 0;
  for (int j = 0; j < rank_; ++j) out += cartan_inverse_[k][j] * w[j];
  return out;
}

std::vector<Rational> RootSystem::to_simple_coords(const Weight& w) const {
  std::vector<Rational> out(rank_);
  for (int k = 0; k < rank_; ++k) out[k] = pair_coweight(w, k);
  return out;
}

Weight RootSystem::from_simple_coords(const std::vector<int>& c) const {
  Weight out(rank_);
  for (int i = 0; i < rank_; ++i) {
    Rational v = 0;
    for (int j = 0; j < rank_; ++j) v += cartan_[i][j] * c[j];
    out[i] = v;
  }
  return out;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  Rational out = 0;
  for (int j = 0; j < rank_; ++j) out += pair_coweight(a, j) * sym_[j] * b[j];
  return out;
}

Rational RootSystem::coroot_pairing(const Weight& w, const Root& beta) const {
  return 2 * inner_product(w, beta.weight_coords) /
         inner_product(beta.weight_coords, beta.weight_coords);
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.coords().begin(), w.coords().end(), [](const Rational& x) { return x >= 0; });
}

bool RootSystem::is_strictly_dominant(const Weight& w) const {
  return std::all_of(w.coords().begin(), w.coords().end(), [](const Rational& x) { return x > 0; });
}

std::optional<std::size_t> RootSystem::find_root(const Weight& w, bool* negative) const {
  if (auto it = root_index_.find(w); it != root_index_.end()) {
    if (negative) *negative = false;
    return it->second;
  }
  if (auto it = root_index_.find(-w); it != root_index_.end()) {
    if (negative) *negative = true;
    return it->second;
  }
  return std::nullopt;
}

bool RootSystem::is_positive_root_vector(const Weight& w) const {
  return root_index_.contains(w);
}

}  // namespace tcone
