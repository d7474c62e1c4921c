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

#include "tensorcone/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

std::string show(const LatticeWeight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + std::to_string(w[i]);
  return out + ")";
}

LatticeWeight add(LatticeWeight a, const LatticeWeight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace

std::int64_t WeightMultiplicityTable::total() const {
  std::int64_t n = 0;
  for (const auto& [w, m] : entries) n += m;
  return n;
}

std::int64_t DecompTable::multiplicity(const LatticeWeight& w) const {
  auto it = summands.find(w);
  return it == summands.end() ? 0 : it->second;
}

std::optional<int> ConeSample::witness(const WeightTuple& tuple) const {
  auto it = index_.find(tuple);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

RepresentationOracle::RepresentationOracle(const RootSystem& rs, OracleLimits limits)
    : rs_(rs), limits_(limits), rank_(rs.rank()), cartan_(rs.cartan_matrix()) {
  std::vector<Weight> omegas;
  for (int i = 0; i < rank_; ++i) omegas.push_back(rs_.fundamental_weight(i));
  for (const auto& beta : rs_.positive_roots()) {
    roots_.push_back(beta.weight_coords.to_ints());
    std::vector<int> co(rank_);
    for (int i = 0; i < rank_; ++i) co[i] = static_cast<int>(to_int64(rs_.coroot_pairing(omegas[i], beta)));
    coroots_.push_back(std::move(co));
    root_heights_.push_back(std::accumulate(beta.simple_coords.begin(), beta.simple_coords.end(), 0));
  }
  std::vector<std::vector<Rational>> gram(rank_, std::vector<Rational>(rank_));
  Integer scale = 1;
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) {
      gram[i][j] = rs_.inner_product(omegas[i], omegas[j]);
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), gram[i][j].get_den_mpz_t());
    }
  }
  gram_.assign(rank_, std::vector<std::int64_t>(rank_));
  for (int i = 0; i < rank_; ++i) {
    for (int j = 0; j < rank_; ++j) gram_[i][j] = to_int64(gram[i][j] * scale);
  }
  for (int i = 0; i < rank_; ++i) to_simple_.push_back(rs_.to_simple_coords(omegas[i]));
}

LatticeWeight RepresentationOracle::lattice(const Weight& w) const {
  if (static_cast<int>(w.size()) != rank_) throw UsageError("weight rank mismatch");
  return w.to_ints();
}

void RepresentationOracle::require_dominant(const LatticeWeight& w) const {
  if (static_cast<int>(w.size()) != rank_) throw UsageError("weight rank mismatch");
  if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) {
    throw UsageError("weight " + show(w) + " is not dominant");
  }
}

bool RepresentationOracle::in_root_lattice(const LatticeWeight& w) const {
  for (int k = 0; k < rank_; ++k) {
    Rational c = 0;
    for (int i = 0; i < rank_; ++i) c += to_simple_[i][k] * w[i];
    if (!is_integer(c)) return false;
  }
  return true;
}

bool RepresentationOracle::fold_regular(LatticeWeight& v, int& sign) const {
  while (true) {
    int i = 0;
    while (i < rank_ && v[i] >= 0) ++i;
    if (i == rank_) break;
    const int p = v[i];
    for (int j = 0; j < rank_; ++j) v[j] -= p * cartan_[j][i];
    sign = -sign;
  }
  return std::none_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

LatticeWeight RepresentationOracle::fold(LatticeWeight v) const {
  int sign = 1;
  fold_regular(v, sign);
  return v;
}

std::int64_t RepresentationOracle::inner(const LatticeWeight& a, const LatticeWeight& b) const {
  std::int64_t out = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) out += a[i] * gram_[i][j] * b[j];
  }
  return out;
}

Integer RepresentationOracle::weyl_dim(const Weight& lambda) const {
  return weyl_dim(lattice(lambda));
}

Integer RepresentationOracle::weyl_dim(const LatticeWeight& lambda) const {
  require_dominant(lambda);
  Integer num = 1, den = 1;
  for (const auto& co : coroots_) {
    long rho_pair = 0, lam_pair = 0;
    for (int i = 0; i < rank_; ++i) {
      rho_pair += co[i];
      lam_pair += static_cast<long>(co[i]) * lambda[i];
    }
    num *= lam_pair + rho_pair;
    den *= rho_pair;
  }
  if (num % den != 0) throw ConsistencyError("Weyl dimension formula is not integral");
  return num / den;
}

LatticeWeight RepresentationOracle::dual_weight(const LatticeWeight& lambda) const {
  LatticeWeight neg(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) neg[i] = -lambda[i];
  return fold(std::move(neg));
}

std::shared_ptr<const WeightMultiplicityTable> RepresentationOracle::freudenthal(
    const Weight& lambda) const {
  return freudenthal(lattice(lambda));
}

std::shared_ptr<const WeightMultiplicityTable> RepresentationOracle::freudenthal(
    const LatticeWeight& lambda) const {
  require_dominant(lambda);
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(lambda); it != tables_.end()) return it->second;
  }
  auto table = build_table(lambda);
  std::unique_lock lock(mutex_);
  return tables_.emplace(lambda, std::move(table)).first->second;
}

std::shared_ptr<const WeightMultiplicityTable> RepresentationOracle::build_table(
    const LatticeWeight& lambda) const {
  const Integer dim = weyl_dim(lambda);
  if (dim > limits_.dimension_cap) {
    throw ResourceError("module " + show(lambda) + " has dimension " + dim.get_str() +
                        ", above the cap of " + std::to_string(limits_.dimension_cap));
  }

  // Dominant weights below lambda, reached by subtracting positive roots.
  std::map<LatticeWeight, int> depth{{lambda, 0}};
  std::vector<LatticeWeight> queue{lambda};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const LatticeWeight mu = queue[head];
    const int d = depth.at(mu);
    for (std::size_t a = 0; a < roots_.size(); ++a) {
      LatticeWeight nu = mu;
      for (int i = 0; i < rank_; ++i) nu[i] -= roots_[a][i];
      if (std::any_of(nu.begin(), nu.end(), [](int x) { return x < 0; })) continue;
      if (depth.emplace(nu, d + root_heights_[a]).second) queue.push_back(nu);
    }
  }
  std::sort(queue.begin(), queue.end(),
            [&](const auto& x, const auto& y) { return depth.at(x) < depth.at(y); });

  auto table = std::make_shared<WeightMultiplicityTable>();
  table->highest_weight = lambda;
  const LatticeWeight rho(rank_, 1);
  const LatticeWeight top = add(lambda, rho);
  const std::int64_t top_norm = inner(top, top);
  for (const auto& mu : queue) {
    if (mu == lambda) {
      table->dominant[mu] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& alpha : roots_) {
      LatticeWeight nu = mu;
      while (true) {
        nu = add(std::move(nu), alpha);
        auto it = table->dominant.find(fold(nu));
        if (it == table->dominant.end()) break;
        sum += it->second * inner(nu, alpha);
      }
    }
    const LatticeWeight shifted = add(mu, rho);
    const std::int64_t gap = top_norm - inner(shifted, shifted);
    if (gap <= 0 || (2 * sum) % gap != 0) {
      throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity");
    }
    if (sum > 0) table->dominant[mu] = 2 * sum / gap;
  }

  for (const auto& [mu, m] : table->dominant) {
    std::vector<LatticeWeight> orbit{mu};
    std::set<LatticeWeight> seen{mu};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (int i = 0; i < rank_; ++i) {
        LatticeWeight v = orbit[head];
        const int p = v[i];
        if (p == 0) continue;
        for (int j = 0; j < rank_; ++j) v[j] -= p * cartan_[j][i];
        if (seen.insert(v).second) orbit.push_back(std::move(v));
      }
    }
    for (auto& v : orbit) table->entries.emplace(std::move(v), m);
  }
  return table;
}

std::int64_t RepresentationOracle::multiplicity(const WeightMultiplicityTable& t,
                                                const LatticeWeight& w) const {
  auto it = t.dominant.find(fold(w));
  return it == t.dominant.end() ? 0 : it->second;
}

DecompTable RepresentationOracle::tensor_decompose(const Weight& lambda, const Weight& mu) const {
  return tensor_decompose(lattice(lambda), lattice(mu));
}

DecompTable RepresentationOracle::tensor_decompose(const LatticeWeight& lambda,
                                                   const LatticeWeight& mu) const {
  require_dominant(lambda);
  require_dominant(mu);
  const Integer dl = weyl_dim(lambda), dm = weyl_dim(mu);
  if (dl * dm > limits_.dimension_cap) {
    throw ResourceError("tensor product " + show(lambda) + " x " + show(mu) + " has dimension " +
                        Integer(dl * dm).get_str() + ", above the cap of " +
                        std::to_string(limits_.dimension_cap));
  }
  // Brauer-Klimyk: shift the weights of the smaller factor by the larger
  // highest weight plus rho and fold back into the chamber with signs.
  const bool swap = dm > dl;
  const LatticeWeight& big = swap ? mu : lambda;
  const auto table = freudenthal(swap ? lambda : mu);
  const LatticeWeight shift = add(big, LatticeWeight(rank_, 1));
  std::map<LatticeWeight, std::int64_t> acc;
  for (const auto& [gamma, m] : table->entries) {
    LatticeWeight v = add(gamma, shift);
    int sign = 1;
    if (!fold_regular(v, sign)) continue;
    for (auto& x : v) x -= 1;
    acc[v] += sign * m;
  }
  DecompTable out;
  for (const auto& [w, m] : acc) {
    if (m < 0) throw ConsistencyError("negative multiplicity in tensor decomposition");
    if (m > 0) out.summands.emplace(w, m);
  }
  return out;
}

std::int64_t RepresentationOracle::tensor_coefficient(const LatticeWeight& lambda,
                                                      const LatticeWeight& mu,
                                                      const LatticeWeight& nu) const {
  require_dominant(lambda);
  require_dominant(mu);
  require_dominant(nu);
  const auto table = freudenthal(mu);
  // c = sum over w of sign(w) * m_mu(w(nu + rho) - lambda - rho), walking the
  // regular orbit of nu + rho with parities.
  const LatticeWeight start = add(nu, LatticeWeight(rank_, 1));
  const LatticeWeight shift = add(lambda, LatticeWeight(rank_, 1));
  std::map<LatticeWeight, int> parity{{start, 1}};
  std::vector<LatticeWeight> orbit{start};
  std::int64_t total = 0;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const LatticeWeight v = orbit[head];
    const int sign = parity.at(v);
    LatticeWeight gamma = v;
    for (int i = 0; i < rank_; ++i) gamma[i] -= shift[i];
    total += sign * multiplicity(*table, gamma);
    for (int i = 0; i < rank_; ++i) {
      LatticeWeight next = v;
      const int p = v[i];
      for (int j = 0; j < rank_; ++j) next[j] -= p * cartan_[j][i];
      if (parity.emplace(next, -sign).second) orbit.push_back(std::move(next));
    }
  }
  if (total < 0) throw ConsistencyError("negative tensor product multiplicity");
  return total;
}

std::int64_t RepresentationOracle::invariant_dim(std::span<const Weight> nus) const {
  std::vector<LatticeWeight> lattice_nus;
  for (const auto& w : nus) lattice_nus.push_back(lattice(w));
  return invariant_dim(std::span<const LatticeWeight>(lattice_nus));
}

std::int64_t RepresentationOracle::invariant_dim(std::span<const LatticeWeight> nus) const {
  std::vector<LatticeWeight> f(nus.begin(), nus.end());
  LatticeWeight sum(rank_, 0);
  for (const auto& w : f) {
    require_dominant(w);
    sum = add(std::move(sum), w);
  }
  const LatticeWeight zero(rank_, 0);
  const std::size_t n = f.size();
  if (n == 0) return 1;
  if (!in_root_lattice(sum)) return 0;
  if (n == 1) return f[0] == zero ? 1 : 0;
  if (n == 2) return f[0] == dual_weight(f[1]) ? 1 : 0;

  std::vector<std::pair<Integer, LatticeWeight>> sized;
  for (auto& w : f) sized.emplace_back(weyl_dim(w), std::move(w));
  std::sort(sized.begin(), sized.end());
  for (std::size_t i = 0; i < n; ++i) f[i] = std::move(sized[i].second);

  // D = f[n-2] (x) f[0] (x) ... (x) f[n-4]; answer = sum_k D[k] c(k, f[n-3]; f[n-1]^*).
  std::map<LatticeWeight, std::int64_t> current{{f[n - 2], 1}};
  for (std::size_t i = 0; i + 3 < n; ++i) {
    std::map<LatticeWeight, std::int64_t> next;
    for (const auto& [kappa, m] : current) {
      for (const auto& [w, c] : tensor_decompose(kappa, f[i]).summands) next[w] += m * c;
    }
    current = std::move(next);
  }
  const LatticeWeight target = dual_weight(f[n - 1]);
  std::int64_t total = 0;
  for (const auto& [kappa, m] : current) total += m * tensor_coefficient(kappa, f[n - 3], target);
  return total;
}

std::optional<int> RepresentationOracle::certify(const WeightTuple& tuple, int depth) const {
  for (int k = 1; k <= depth; ++k) {
    WeightTuple scaled = tuple;
    for (auto& w : scaled) {
      for (auto& x : w) x *= k;
    }
    if (invariant_dim(std::span<const LatticeWeight>(scaled)) > 0) return k;
  }
  return std::nullopt;
}

ConeSample RepresentationOracle::sample_cone(int s, int box, int depth, int jobs) const {
  if (s < 1 || box < 0 || depth < 1) throw UsageError("sample_cone: invalid bounds");
  const int coords = (s + 1) * rank_;
  long double count_ld = std::pow(static_cast<long double>(box + 1), coords);
  if (count_ld > static_cast<long double>(limits_.sample_budget)) {
    throw ResourceError("sampling box has " + std::to_string(static_cast<double>(count_ld)) +
                        " tuples, above the budget of " + std::to_string(limits_.sample_budget));
  }
  const std::uint64_t count = static_cast<std::uint64_t>(count_ld);
  auto decode = [&](std::uint64_t index) {
    WeightTuple t(s + 1, LatticeWeight(rank_));
    for (int c = coords - 1; c >= 0; --c) {
      t[c / rank_][c % rank_] = static_cast<int>(index % (box + 1));
      index /= (box + 1);
    }
    return t;
  };

  jobs = std::max(1, jobs);
  std::vector<std::vector<std::pair<std::uint64_t, int>>> found(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j) {
    workers.emplace_back([&, j] {
      try {
        for (std::uint64_t idx = j; idx < count; idx += jobs) {
          if (auto k = certify(decode(idx), depth)) found[j].emplace_back(idx, *k);
        }
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& w : workers) w.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<std::uint64_t, int>> merged;
  for (auto& part : found) merged.insert(merged.end(), part.begin(), part.end());
  std::sort(merged.begin(), merged.end());
  ConeSample sample;
  sample.s = s;
  sample.box = box;
  sample.depth = depth;
  for (const auto& [idx, k] : merged) {
    CertifiedPoint p{decode(idx), k};
    sample.index_.emplace(p.tuple, k);
    sample.certified.push_back(std::move(p));
  }
  return sample;
}

}  // namespace tcone
