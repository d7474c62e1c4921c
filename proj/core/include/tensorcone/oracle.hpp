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

#ifndef TENSORCONE_ORACLE_HPP_
#define TENSORCONE_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <vector>

#include "tensorcone/rational.hpp"
#include "tensorcone/root_system.hpp"

namespace tcone {

// An integral weight in fundamental-weight coordinates.
using LatticeWeight = std::vector<int>;
using WeightTuple = std::vector<LatticeWeight>;

struct WeightMultiplicityTable {
  LatticeWeight highest_weight;
  std::map<LatticeWeight, std::int64_t> dominant;  // dominant weights only
  std::map<LatticeWeight, std::int64_t> entries;   // every weight

  std::int64_t total() const;
};

struct DecompTable {
  std::map<LatticeWeight, std::int64_t> summands;

  std::int64_t multiplicity(const LatticeWeight& w) const;
};

struct CertifiedPoint {
  WeightTuple tuple;
  int witness = 1;  // smallest k <= depth with an invariant in the k-fold multiple
};

struct ConeSample {
  int s = 0;
  int box = 0;
  int depth = 0;
  std::vector<CertifiedPoint> certified;  // in box enumeration order

  std::optional<int> witness(const WeightTuple& tuple) const;
  bool contains(const WeightTuple& tuple) const { return witness(tuple).has_value(); }

 private:
  friend class RepresentationOracle;
  std::map<WeightTuple, int> index_;
};

struct OracleLimits {
  // Bound on dim(V) of any module whose weight table is built, and on
  // dim(V_lambda) * dim(V_mu) for a full decomposition.
  std::int64_t dimension_cap = 1'000'000;
  // Bound on the number of lattice tuples visited by sample_cone.
  std::uint64_t sample_budget = 10'000'000;
};

/// Brute-force representation theory of a semisimple Lie algebra: Weyl's
/// dimension formula, Freudenthal's multiplicity recursion, Brauer-Klimyk
/// tensor decomposition, invariant counting and saturation sampling of the
/// tensor cone. Shares nothing with the Schubert pipeline beyond the root
/// data, so it can serve as ground truth for it.
///
/// Weight tables are memoised in a reader/writer-locked store; all public
/// methods are safe to call concurrently.
class RepresentationOracle {
 public:
  explicit RepresentationOracle(const RootSystem& rs, OracleLimits limits = {});

  const RootSystem& root_system() const { return rs_; }
  const OracleLimits& limits() const { return limits_; }

  // Throws UsageError for non-dominant or non-integral input.
  Integer weyl_dim(const Weight& lambda) const;
  Integer weyl_dim(const LatticeWeight& lambda) const;

  std::shared_ptr<const WeightMultiplicityTable> freudenthal(const Weight& lambda) const;
  std::shared_ptr<const WeightMultiplicityTable> freudenthal(const LatticeWeight& lambda) const;

  DecompTable tensor_decompose(const Weight& lambda, const Weight& mu) const;
  DecompTable tensor_decompose(const LatticeWeight& lambda, const LatticeWeight& mu) const;

  // Multiplicity of V_nu in V_lambda (x) V_mu.
  std::int64_t tensor_coefficient(const LatticeWeight& lambda, const LatticeWeight& mu,
                                  const LatticeWeight& nu) const;

  // Dimension of the invariants in V_{nu_0} (x) ... (x) V_{nu_s}.
  std::int64_t invariant_dim(std::span<const Weight> nus) const;
  std::int64_t invariant_dim(std::span<const LatticeWeight> nus) const;

  // -w0(lambda), the highest weight of the dual module.
  LatticeWeight dual_weight(const LatticeWeight& lambda) const;

  // All dominant tuples (nu_0, ..., nu_s) with coordinates in [0, box] such
  // that k * tuple has an invariant for some 1 <= k <= depth.
  ConeSample sample_cone(int s, int box, int depth, int jobs = 1) const;

  // Smallest k in [1, depth] certifying the tuple, if any.
  std::optional<int> certify(const WeightTuple& tuple, int depth) const;

 private:
  LatticeWeight lattice(const Weight& w) const;
  void require_dominant(const LatticeWeight& w) const;
  bool in_root_lattice(const LatticeWeight& w) const;
  // Folds into the dominant chamber; returns false if v lies on a wall.
  bool fold_regular(LatticeWeight& v, int& sign) const;
  LatticeWeight fold(LatticeWeight v) const;
  std::int64_t inner(const LatticeWeight& a, const LatticeWeight& b) const;
  std::shared_ptr<const WeightMultiplicityTable> build_table(const LatticeWeight& lambda) const;
  std::int64_t multiplicity(const WeightMultiplicityTable& t, const LatticeWeight& w) const;

  const RootSystem& rs_;
  OracleLimits limits_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<LatticeWeight> roots_;          // positive roots, weight coordinates
  std::vector<std::vector<int>> coroots_;     // <omega_i, beta^vee>
  std::vector<int> root_heights_;
  std::vector<std::vector<std::int64_t>> gram_;  // scaled (omega_i, omega_j)
  std::vector<std::vector<Rational>> to_simple_;

  mutable std::shared_mutex mutex_;
  mutable std::map<LatticeWeight, std::shared_ptr<const WeightMultiplicityTable>> tables_;
};

}  // namespace tcone

#endif  // TENSORCONE_ORACLE_HPP_
