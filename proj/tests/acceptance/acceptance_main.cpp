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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. All comparisons are exact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"

namespace tcone {
namespace {

using testing::Bundle;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;
  std::function<Outcome()> run;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string tuple_text(const WeightTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < t[i].size(); ++j) os << (j ? "," : "") << t[i][j];
  }
  os << ")";
  return os.str();
}

struct Cone {
  Cone(const std::string& type, int s) : setup(type), faces(setup.bk, s), oracle(setup.rs()) {}
  Bundle setup;
  FaceCone faces;
  RepresentationOracle oracle;
};

// 1. SL2 tensor cone.
Outcome sl2_cone() {
  Cone c("A1", 2);
  const auto facets = c.faces.enumerate_faces(1);
  const auto ineqs = c.faces.facet_inequalities(facets, c.oracle.sample_cone(2, 2, 3));
  if (ineqs.size() != 3) return fail(std::to_string(ineqs.size()) + " facets, expected 3");
  std::set<IntegerVector> rows;
  for (const auto& q : ineqs) rows.insert(primitive(q.coefficients(c.setup.weyl)));
  const std::set<IntegerVector> expected{{-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
  if (rows != expected) return fail("facet normals differ from the triangle inequalities");
  const auto sample = c.oracle.sample_cone(2, 6, 2);
  int discrepancies = 0;
  std::string first;
  testing::for_each_box_tuple(1, 2, 6, [&](const WeightTuple& t) {
    if (testing::satisfies_all(c.setup.weyl, ineqs, t) != sample.contains(t)) {
      if (discrepancies++ == 0) first = tuple_text(t);
    }
  });
  if (discrepancies) return fail(std::to_string(discrepancies) + " discrepancies, e.g. " + first);
  return {true, "3 facets; 343 box tuples, 0 discrepancies against sample_cone(box 6, depth 2)"};
}

// 2. sl3 cone: validity, tightness and completeness on the box.
Outcome sl3_cone() {
  Cone c("A2", 2);
  const auto facets = c.faces.enumerate_faces(1);
  const auto ineqs = c.faces.facet_inequalities(facets, c.oracle.sample_cone(2, 2, 3, 4));
  const auto sample = c.oracle.sample_cone(2, 5, 3, 4);
  std::vector<bool> tight(ineqs.size(), false);
  for (const auto& p : sample.certified) {
    const auto pt = testing::to_weights(p.tuple);
    const bool nonzero = std::any_of(pt.begin(), pt.end(), [](const Weight& w) { return !w.is_zero(); });
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      const Rational v = ineqs[i].evaluate(c.setup.weyl, pt);
      if (v < 0) return fail("certified point " + tuple_text(p.tuple) + " violates facet " + std::to_string(i));
      if (v == 0 && nonzero) tight[i] = true;
    }
  }
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    if (!tight[i]) return fail("facet " + std::to_string(i) + " is not attained on the box");
  }
  std::uint64_t inside = 0;
  std::string missing;
  testing::for_each_box_tuple(2, 2, 5, [&](const WeightTuple& t) {
    if (!testing::satisfies_all(c.setup.weyl, ineqs, t)) return;
    ++inside;
    if (!sample.contains(t) && missing.empty()) missing = tuple_text(t);
  });
  if (!missing.empty()) return fail("tuple " + missing + " satisfies all facets but is not certified");
  if (inside != sample.certified.size()) return fail("facet system and sample differ in size");
  return {true, std::to_string(ineqs.size()) + " facets valid and tight; " + std::to_string(inside) +
                    " box tuples, equal to the certified set (box 5, depth 3)"};
}

// 3. Degenerate coefficients are 0 or the cup coefficient.
Outcome bk_dichotomy() {
  std::uint64_t checked = 0, retained = 0;
  for (const char* type : {"A2", "B2", "A3"}) {
    Bundle t(type);
    for (const auto& p : all_parabolics(t.weyl.rank())) {
      for (int s = 1; s <= 3; ++s) {
        for (const auto& tuple : t.bk.degree_valid_tuples(s, p)) {
          const auto bk = t.bk.bk_point_coefficient(p, tuple.reps);
          if (bk != 0 && bk != tuple.cup_coeff) {
            return fail(std::string(type) + " P" + p.to_string() + ": coefficient " +
                        std::to_string(bk) + " vs cup " + std::to_string(tuple.cup_coeff));
          }
          ++checked;
          retained += bk != 0;
        }
      }
    }
  }
  return {true, std::to_string(checked) + " degree-valid tuples, " + std::to_string(retained) +
                    " retained, all in {0, cup}"};
}

// 4. Maximal parabolics of A2 and A3.
Outcome cominuscule() {
  std::uint64_t checked = 0;
  for (const char* type : {"A2", "A3"}) {
    Bundle t(type);
    for (int k = 0; k < t.weyl.rank(); ++k) {
      const auto p = ParabolicSubset::from_complement(t.weyl.rank(), {k});
      for (const auto& tuple : t.bk.degree_valid_tuples(2, p)) {
        if (t.bk.bk_point_coefficient(p, tuple.reps) != tuple.cup_coeff) {
          return fail(std::string(type) + " P" + p.to_string() + " loses a cup coefficient");
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " entries equal"};
}

// 5. Codimension law.
Outcome codimension_law() {
  std::size_t total = 0;
  for (const char* type : {"A2", "B2"}) {
    Cone c(type, 2);
    const int rank = c.setup.weyl.rank();
    const auto faces = c.faces.enumerate_faces(rank);
    const auto ineqs = c.faces.facet_inequalities(faces, c.oracle.sample_cone(2, 2, 3, 4));
    const auto cone = c.faces.bounded_cone(ineqs);
    for (const auto& f : faces) {
      const int expected = rank - static_cast<int>(f.parabolic.levi_simples().size());
      if (f.codim != expected || static_cast<int>(f.equations.size()) != expected) {
        return fail(std::string(type) + " face P" + f.parabolic.to_string() + " has codim " +
                    std::to_string(f.codim));
      }
      const int dim = c.faces.face_geometry(cone, f).span_dim();
      if (dim != c.faces.ambient_dim() - expected) {
        return fail(std::string(type) + " face P" + f.parabolic.to_string() + " has dimension " +
                    std::to_string(dim));
      }
    }
    total += faces.size();
  }
  return {true, std::to_string(total) + " faces; combinatorial and geometric codimension agree"};
}

// 6. Inclusion criterion versus exact containment.
Outcome inclusion_agreement() {
  Cone c("A2", 2);
  const auto faces = c.faces.enumerate_faces(2);
  const auto ineqs = c.faces.facet_inequalities(faces, c.oracle.sample_cone(2, 2, 3, 4));
  const auto cone = c.faces.bounded_cone(ineqs);
  std::vector<PolyhedralCone> geometry;
  for (const auto& f : faces) geometry.push_back(c.faces.face_geometry(cone, f));
  std::size_t included = 0;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      const bool combinatorial = c.faces.face_inclusion(faces[i], faces[j]);
      bool geometric = true;
      for (const auto& r : geometry[i].rays()) geometric &= geometry[j].contains(to_rational(r));
      if (combinatorial != geometric) {
        return fail("faces " + std::to_string(i) + " and " + std::to_string(j) + " disagree");
      }
      included += combinatorial;
    }
  }
  return {true, std::to_string(faces.size() * faces.size()) + " ordered pairs, " +
                    std::to_string(included) + " inclusions, all agree"};
}

// 7. Distinct members of Theta give distinct faces.
Outcome injectivity() {
  std::ostringstream detail;
  for (const char* type : {"A2", "B2"}) {
    Cone c(type, 2);
    const auto faces = c.faces.enumerate_faces(c.setup.weyl.rank());
    const auto ineqs = c.faces.facet_inequalities(faces, c.oracle.sample_cone(2, 2, 3, 4));
    const auto cone = c.faces.bounded_cone(ineqs);
    std::set<std::vector<IntegerVector>> seen;
    for (const auto& f : faces) {
      if (!seen.insert(c.faces.face_geometry(cone, f).rays()).second) {
        return fail(std::string(type) + " face P" + f.parabolic.to_string() + " repeats");
      }
    }
    detail << type << ": " << faces.size() << " members, " << seen.size() << " faces; ";
  }
  return {true, detail.str() + "pairwise distinct"};
}

// 8. Schubert kernel cross-validation.
Outcome schubert_kernel() {
  std::uint64_t products = 0, pairings = 0;
  for (const char* type : {"A2", "B2", "A3"}) {
    Bundle t(type);
    const auto borel = ParabolicSubset::borel(t.weyl.rank());
    for (int i = 0; i < t.weyl.rank(); ++i) {
      for (const auto& e : t.weyl.elements()) {
        if (t.schubert.cup_expand(borel, t.weyl.simple_reflection(i), e.id) !=
            t.schubert.chevalley_multiply(i, e.id)) {
          return fail(std::string(type) + ": divisor product differs from Chevalley");
        }
        ++products;
      }
    }
    for (const auto& u : t.weyl.elements()) {
      for (const auto& v : t.weyl.elements()) {
        for (const auto& [w, c] : t.schubert.gb_product(u.id, v.id)) {
          if (c < 0) return fail(std::string(type) + ": negative structure constant");
        }
      }
    }
    for (const auto& p : all_parabolics(t.weyl.rank())) {
      if (p.is_whole()) continue;
      std::map<WeylId, int> ones;
      for (const auto& pair : t.bk.degree_valid_tuples(1, p)) {
        const auto c = pair.cup_coeff;
        if (c != 0 && c != 1) return fail(std::string(type) + ": pairing entry " + std::to_string(c));
        ones[pair.reps[0]] += c == 1;
      }
      for (WeylId u : t.weyl.min_coset_reps(p)) {
        if (ones[u] != 1) return fail(std::string(type) + " P" + p.to_string() + ": pairing row has " +
                                      std::to_string(ones[u]) + " ones");
        ++pairings;
      }
    }
  }
  return {true, std::to_string(products) + " divisor products agree; " + std::to_string(pairings) +
                    " pairing rows are permutation rows; all constants non-negative integers"};
}

// 9. Oracle self-consistency.
Outcome oracle_consistency() {
  std::mt19937 rng(20261019);
  const OracleLimits limits{10'000, 10'000'000};
  std::vector<std::unique_ptr<RootSystem>> systems;
  std::vector<std::unique_ptr<RepresentationOracle>> oracles;
  for (const char* type : {"A1", "A2", "B2"}) {
    systems.push_back(std::make_unique<RootSystem>(CartanType::parse(type)));
    oracles.push_back(std::make_unique<RepresentationOracle>(*systems.back(), limits));
  }
  auto random_weight = [&](int rank, int bound) {
    std::uniform_int_distribution<int> d(0, bound);
    LatticeWeight w(rank);
    for (auto& x : w) x = d(rng);
    return w;
  };
  std::uniform_int_distribution<int> pick(0, 2);
  int decompositions = 0;
  while (decompositions < 200) {
    const auto& o = *oracles[pick(rng)];
    const int rank = o.root_system().rank();
    const auto a = random_weight(rank, 6), b = random_weight(rank, 6);
    const Integer product = o.weyl_dim(a) * o.weyl_dim(b);
    if (product > limits.dimension_cap) continue;
    Integer total = 0;
    for (const auto& [w, m] : o.tensor_decompose(a, b).summands) total += m * o.weyl_dim(w);
    if (total != product) return fail("dimension bookkeeping fails");
    ++decompositions;
  }
  for (int i = 0; i < 50; ++i) {
    const auto& o = *oracles[pick(rng)];
    const auto w = random_weight(o.root_system().rank(), 8);
    if (o.freudenthal(w)->total() != o.weyl_dim(w)) return fail("Freudenthal total differs");
  }
  return {true, "200 decompositions balance; 50 Freudenthal totals equal weyl_dim"};
}

}  // namespace
}  // namespace tcone

int main() {
  using namespace tcone;
  const std::vector<Criterion> criteria{
      {1, "SL2 tensor cone", 1.0, sl2_cone},
      {2, "sl3 cone validity, tightness, completeness", 120.0, sl3_cone},
      {3, "BK dichotomy on A2, B2, A3 (s <= 3)", 300.0, bk_dichotomy},
      {4, "cominuscule equality on A2, A3", 60.0, cominuscule},
      {5, "codimension law on A2, B2", 60.0, codimension_law},
      {6, "inclusion criterion agreement on A2", 60.0, inclusion_agreement},
      {7, "injectivity on A2, B2", 60.0, injectivity},
      {8, "Schubert kernel cross-validation", 60.0, schubert_kernel},
      {9, "oracle self-consistency", 60.0, oracle_consistency},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.pass && seconds > c.time_limit_s) {
      outcome = fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.time_limit_s));
    }
    failures += !outcome.pass;
    std::printf("%s criterion %d: %s -- %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
