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

#include "tensorcone/face_cone.hpp"

#include <algorithm>
#include <set>

#include "tensorcone/errors.hpp"

namespace tcone {
namespace {

// Reduced row echelon form with normalised pivots; equal spans give equal forms.
std::vector<RationalVector> echelon(std::vector<RationalVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Rational lead = rows[rank][c];
    for (auto& x : rows[rank]) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  rows.resize(rank);
  return rows;
}

}  // namespace

RationalVector flatten(std::span<const Weight> point) {
  RationalVector out;
  for (const auto& w : point) out.insert(out.end(), w.coords().begin(), w.coords().end());
  return out;
}

Rational LinearFunctional::evaluate(const WeylGroup& weyl, std::span<const Weight> point) const {
  if (point.size() != words.size()) throw UsageError("point has the wrong number of weights");
  Weight total(weyl.rank());
  for (std::size_t i = 0; i < words.size(); ++i) total += weyl.act(weyl.inverse(words[i]), point[i]);
  return weyl.root_system().pair_coweight(total, k);
}

RationalVector LinearFunctional::coefficients(const WeylGroup& weyl) const {
  const auto& rs = weyl.root_system();
  RationalVector out;
  for (WeylId w : words) {
    const WeylId inv = weyl.inverse(w);
    for (int j = 0; j < rs.rank(); ++j) {
      out.push_back(rs.pair_coweight(weyl.act(inv, rs.fundamental_weight(j)), k));
    }
  }
  return out;
}

Rational ConeInequality::evaluate(const WeylGroup& weyl, std::span<const Weight> point) const {
  return direction * functional.evaluate(weyl, point);
}

RationalVector ConeInequality::coefficients(const WeylGroup& weyl) const {
  RationalVector out = functional.coefficients(weyl);
  for (auto& x : out) x *= direction;
  return out;
}

FaceCone::FaceCone(const BkProduct& bk, int s) : bk_(bk), s_(s) {
  if (s < 1) throw UsageError("s must be at least 1");
}

int FaceCone::ambient_dim() const { return (s_ + 1) * weyl().rank(); }

FaceDescriptor FaceCone::face_from_theta(const BkTuple& member) const {
  if (static_cast<int>(member.reps.size()) != s_ + 1) {
    throw UsageError("tuple length does not match s + 1");
  }
  if (member.parabolic.rank() != weyl().rank() || member.parabolic.is_whole()) {
    throw UsageError("face_from_theta needs a proper parabolic of the right rank");
  }
  if (bk_.bk_point_coefficient(member.parabolic, member.reps) != 1) {
    throw UsageError("tuple is not a member of Theta");
  }
  FaceDescriptor face{member.parabolic, member.reps, {}, member.parabolic.center_dim()};
  for (int k : member.parabolic.complement()) face.equations.push_back({k, member.reps});
  return face;
}

std::vector<FaceDescriptor> FaceCone::enumerate_faces(int max_codim, std::uint64_t budget) const {
  std::vector<FaceDescriptor> faces;
  if (max_codim < 1) return faces;
  for (const auto& p : all_parabolics(weyl().rank())) {
    if (p.is_whole() || p.center_dim() > max_codim) continue;
    for (const auto& t : bk_.enumerate_theta(s_, p, budget)) faces.push_back(face_from_theta(t));
  }
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    if (!(a.parabolic == b.parabolic)) return a.parabolic < b.parabolic;
    return a.reps < b.reps;
  });
  std::set<std::vector<RationalVector>> spans;
  for (const auto& f : faces) {
    std::vector<RationalVector> rows;
    for (const auto& e : f.equations) rows.push_back(e.coefficients(weyl()));
    auto form = echelon(std::move(rows));
    if (static_cast<int>(form.size()) != f.codim) {
      throw ConsistencyError("face equations are linearly dependent");
    }
    if (s_ >= 2 && !spans.insert(std::move(form)).second) {
      throw ConsistencyError("two members of Theta define the same linear span");
    }
  }
  return faces;
}

std::vector<ConeInequality> FaceCone::facet_inequalities(const std::vector<FaceDescriptor>& faces,
                                                         const ConeSample& sample) const {
  if (sample.s != s_) throw UsageError("sample was taken for a different s");
  std::vector<std::vector<Weight>> points;
  for (const auto& c : sample.certified) {
    std::vector<Weight> pt;
    for (const auto& w : c.tuple) pt.push_back(Weight::from_ints(w));
    points.push_back(std::move(pt));
  }
  std::vector<ConeInequality> out;
  for (const auto& f : faces) {
    if (f.codim != 1) continue;
    const auto& fn = f.equations.front();
    bool positive = false, negative = false;
    for (const auto& pt : points) {
      const Rational v = fn.evaluate(weyl(), pt);
      positive |= v > 0;
      negative |= v < 0;
    }
    if (positive && negative) {
      throw ConsistencyError("certified points lie strictly on both sides of facet P" +
                             f.parabolic.to_string());
    }
    if (!positive && !negative) {
      if (points.size() <= 1) {
        throw ConsistencyError("no certified point orients facet P" + f.parabolic.to_string() +
                               "; enlarge the sample box");
      }
      // The sampled cone lies in the hyperplane: keep it as an equation.
      out.push_back({fn, 1});
      out.push_back({fn, -1});
      continue;
    }
    out.push_back({fn, positive ? 1 : -1});
  }
  return out;
}

bool FaceCone::face_inclusion(const FaceDescriptor& f1, const FaceDescriptor& f2) const {
  if (f1.reps.size() != f2.reps.size() || f1.parabolic.rank() != f2.parabolic.rank() ||
      f1.parabolic.rank() != weyl().rank()) {
    throw UsageError("face_inclusion: faces come from different contexts");
  }
  if (!f1.parabolic.is_subset_of(f2.parabolic)) return false;
  for (std::size_t i = 0; i < f1.reps.size(); ++i) {
    if (weyl().project_to_coset(f1.reps[i], f2.parabolic) != f2.reps[i]) return false;
  }
  return true;
}

void FaceCone::check_point(std::span<const Weight> point) const {
  if (static_cast<int>(point.size()) != s_ + 1) {
    throw UsageError("point must have s + 1 = " + std::to_string(s_ + 1) + " weights");
  }
  for (const auto& w : point) {
    if (static_cast<int>(w.size()) != weyl().rank()) throw UsageError("weight rank mismatch");
  }
}

Membership FaceCone::membership(std::span<const Weight> point,
                                const std::vector<FaceDescriptor>& faces,
                                const std::vector<ConeInequality>& inequalities) const {
  check_point(point);
  Membership m;
  for (std::size_t i = 0; i < point.size(); ++i) {
    for (int j = 0; j < weyl().rank(); ++j) {
      if (point[i][j] < 0) m.dominant = false;
      if (point[i][j] == 0) m.walls.emplace_back(static_cast<int>(i), j);
    }
  }
  if (!m.dominant) return m;
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (inequalities[i].evaluate(weyl(), point) < 0) m.violated.push_back(i);
  }
  if (!m.violated.empty()) return m;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const bool active = std::all_of(faces[i].equations.begin(), faces[i].equations.end(),
                                    [&](const auto& e) { return e.evaluate(weyl(), point) == 0; });
    if (active) m.active_faces.push_back(i);
  }
  m.kind = m.active_faces.empty() && m.walls.empty() ? MembershipKind::kInterior
                                                     : MembershipKind::kBoundary;
  return m;
}

HasseDiagram FaceCone::hasse_diagram(const std::vector<FaceDescriptor>& faces) const {
  const std::size_t n = faces.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) below[i][j] = face_inclusion(faces[i], faces[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (below[i][j] && below[j][i]) {
        throw ConsistencyError("face inclusion has a cycle between faces " + std::to_string(i) +
                               " and " + std::to_string(j));
      }
    }
  }
  HasseDiagram h;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k) {
        if (below[i][k] && below[k][j]) cover = false;
      }
      if (cover) h.edges.emplace_back(i, j);
    }
  }
  return h;
}

PolyhedralCone FaceCone::bounded_cone(const std::vector<ConeInequality>& inequalities) const {
  PolyhedralCone cone(ambient_dim());
  for (const auto& q : inequalities) cone.add_inequality(q.coefficients(weyl()));
  return cone;
}

PolyhedralCone FaceCone::face_geometry(const PolyhedralCone& cone,
                                       const FaceDescriptor& face) const {
  PolyhedralCone out = cone;
  for (const auto& e : face.equations) out.add_equality(e.coefficients(weyl()));
  return out;
}

}  // namespace tcone
