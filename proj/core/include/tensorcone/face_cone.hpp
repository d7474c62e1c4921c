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

#ifndef TENSORCONE_FACE_CONE_HPP_
#define TENSORCONE_FACE_CONE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tensorcone/bk_product.hpp"
#include "tensorcone/oracle.hpp"
#include "tensorcone/polyhedral.hpp"

namespace tcone {

/// The functional (nu_0, ..., nu_s) -> < sum_i words_i^{-1} nu_i, omega_k^vee >.
struct LinearFunctional {
  int k = 0;
  std::vector<WeylId> words;

  Rational evaluate(const WeylGroup& weyl, std::span<const Weight> point) const;
  // Coefficients on the concatenated fundamental-weight coordinates of the
  // point; length (s+1) * rank.
  RationalVector coefficients(const WeylGroup& weyl) const;

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;
};

/// The face of the tensor cone attached to a member (P, u_0, ..., u_s) of Theta:
/// the points of the cone where every equation vanishes.
struct FaceDescriptor {
  ParabolicSubset parabolic;
  std::vector<WeylId> reps;
  std::vector<LinearFunctional> equations;  // one per simple root outside the Levi
  int codim = 0;

  friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
};

/// direction * functional >= 0 on the cone.
struct ConeInequality {
  LinearFunctional functional;
  int direction = 1;

  Rational evaluate(const WeylGroup& weyl, std::span<const Weight> point) const;
  RationalVector coefficients(const WeylGroup& weyl) const;
};

enum class MembershipKind { kInterior, kBoundary, kOutside };

struct Membership {
  MembershipKind kind = MembershipKind::kOutside;
  std::vector<std::size_t> active_faces;         // indices of faces whose equations vanish
  std::vector<std::pair<int, int>> walls;        // (factor, simple index) with zero label
  std::vector<std::size_t> violated;             // indices of violated inequalities
  bool dominant = true;
};

struct HasseDiagram {
  // (i, j): face i is covered by face j, i.e. face i is a maximal proper face of j.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Faces of the tensor cone of (s+1)-tuples for the group of a BkProduct.
class FaceCone {
 public:
  FaceCone(const BkProduct& bk, int s);

  const BkProduct& bk() const { return bk_; }
  const WeylGroup& weyl() const { return bk_.weyl(); }
  int s() const { return s_; }
  // Number of coordinates of a point: (s+1) * rank.
  int ambient_dim() const;

  // Throws UsageError unless the tuple is retained with coefficient one.
  FaceDescriptor face_from_theta(const BkTuple& member) const;

  // All faces of codimension 1..max_codim, ordered by codimension, parabolic
  // and representatives. For s >= 2, where the cone is full-dimensional,
  // throws ConsistencyError if two of them share a span.
  std::vector<FaceDescriptor> enumerate_faces(int max_codim,
                                              std::uint64_t budget = kDefaultTupleBudget) const;

  // Orients each facet so that every certified point lies on its closed
  // nonnegative side; a functional vanishing on the whole sample (s = 1)
  // yields both orientations. Throws ConsistencyError if certified points lie
  // strictly on both sides, or if the sample is only the origin.
  std::vector<ConeInequality> facet_inequalities(const std::vector<FaceDescriptor>& faces,
                                                 const ConeSample& sample) const;

  // P1 in P2 and every representative of f1 projects to that of f2.
  bool face_inclusion(const FaceDescriptor& f1, const FaceDescriptor& f2) const;

  // Classifies a point against the dominance constraints and the facet system.
  Membership membership(std::span<const Weight> point, const std::vector<FaceDescriptor>& faces,
                        const std::vector<ConeInequality>& inequalities) const;

  // Transitive reduction of face_inclusion. Throws ConsistencyError on a cycle.
  HasseDiagram hasse_diagram(const std::vector<FaceDescriptor>& faces) const;

  // The cone cut out by dominance and the inequalities, and the subcone of it
  // where a face's equations vanish.
  PolyhedralCone bounded_cone(const std::vector<ConeInequality>& inequalities) const;
  PolyhedralCone face_geometry(const PolyhedralCone& cone, const FaceDescriptor& face) const;

 private:
  void check_point(std::span<const Weight> point) const;

  const BkProduct& bk_;
  int s_;
};

// Flattens a tuple of weights into cone coordinates.
RationalVector flatten(std::span<const Weight> point);

}  // namespace tcone

#endif  // TENSORCONE_FACE_CONE_HPP_
