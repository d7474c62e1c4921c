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

#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "tensorcone/errors.hpp"
#include "tensorcone/face_cone.hpp"

namespace tcone::cli {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// The whole pipeline for one Cartan type, built in dependency order.
struct Context {
  explicit Context(const RunConfig& c)
      : weyl(RootSystem(CartanType::parse(c.cartan_type), c.max_rank)),
        schubert(weyl),
        bk(schubert),
        faces(bk, c.s),
        oracle(weyl.root_system()) {}

  const RootSystem& rs() const { return weyl.root_system(); }

  WeylGroup weyl;
  SchubertCalculus schubert;
  BkProduct bk;
  FaceCone faces;
  RepresentationOracle oracle;
};

int jobs_of(const RunConfig& c) {
  if (c.jobs > 0) return c.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

void validate(const RunConfig& c) {
  if (c.cartan_type.empty()) throw ConfigError("--type is required");
  if (c.s < 1) throw ConfigError("--s must be at least 1");
  if (c.max_codim < -1) throw ConfigError("--max-codim must be non-negative");
  if (c.box < -1) throw ConfigError("--box must be non-negative");
  if (c.depth < 1) throw ConfigError("--depth must be positive");
  if (c.orient_box < 1) throw ConfigError("--orient-box must be positive");
  if (c.jobs < 0) throw ConfigError("--jobs must be non-negative");
  if (c.budget == 0) throw ConfigError("--budget must be positive");
  if (c.max_rank < 1) throw ConfigError("--max-rank must be positive");
  if (c.format != "json" && c.format != "csv" && c.format != "text") {
    throw ConfigError("--format must be one of json, csv, text");
  }
}

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError("malformed " + what + " entry '" + item + "'");
    }
  }
  return out;
}

ParabolicSubset parse_parabolic(const std::string& text, int rank) {
  const auto indices = parse_int_list(text, "--parabolic");
  if (indices.empty()) {
    throw ConfigError("--parabolic: empty complement (P = G) has no proper faces");
  }
  std::vector<int> complement;
  for (int i : indices) {
    if (i < 1 || i > rank) {
      throw ConfigError("--parabolic: index " + std::to_string(i) + " outside 1.." +
                        std::to_string(rank));
    }
    complement.push_back(i - 1);
  }
  return ParabolicSubset::from_complement(rank, complement);
}

std::vector<Weight> parse_point(const std::string& text, int rank, int s) {
  std::vector<Weight> out;
  std::stringstream in(text);
  std::string block;
  while (std::getline(in, block, ';')) {
    std::vector<Rational> coords;
    std::stringstream bin(block);
    std::string item;
    while (std::getline(bin, item, ',')) {
      item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
      coords.push_back(parse_rational(item));
    }
    if (static_cast<int>(coords.size()) != rank) {
      throw ConfigError("--point: weight '" + block + "' needs " + std::to_string(rank) +
                        " coordinates");
    }
    out.emplace_back(std::move(coords));
  }
  if (static_cast<int>(out.size()) != s + 1) {
    throw ConfigError("--point: expected " + std::to_string(s + 1) + " weights separated by ';'");
  }
  return out;
}

std::string word_text(const WeylGroup& w, WeylId id) {
  const auto& word = w.element(id).word;
  if (word.empty()) return "e";
  std::string out;
  for (int i : word) out += "s" + std::to_string(i + 1);
  return out;
}

json word_json(const WeylGroup& w, WeylId id) {
  json out = json::array();
  for (int i : w.element(id).word) out.push_back(i + 1);
  return out;
}

json reps_json(const WeylGroup& w, const std::vector<WeylId>& reps) {
  json out = json::array();
  for (WeylId r : reps) out.push_back(word_json(w, r));
  return out;
}

std::string reps_text(const WeylGroup& w, const std::vector<WeylId>& reps) {
  std::string out = "(";
  for (std::size_t i = 0; i < reps.size(); ++i) out += (i ? ", " : "") + word_text(w, reps[i]);
  return out + ")";
}

json complement_json(const ParabolicSubset& p) {
  json out = json::array();
  for (int k : p.complement()) out.push_back(k + 1);
  return out;
}

json weight_json(const Weight& w) {
  json out = json::array();
  for (const auto& x : w.coords()) out.push_back(to_string(x));
  return out;
}

std::string coord_name(int factor, int j) {
  return "nu" + std::to_string(factor) + "_" + std::to_string(j + 1);
}

std::string form_text(const IntegerVector& coeffs, int rank) {
  std::string out;
  for (std::size_t c = 0; c < coeffs.size(); ++c) {
    const Integer& a = coeffs[c];
    if (a == 0) continue;
    const Integer mag = abs(a);
    if (out.empty()) {
      out += a < 0 ? "-" : "";
    } else {
      out += a < 0 ? " - " : " + ";
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += coord_name(static_cast<int>(c) / rank, static_cast<int>(c) % rank);
  }
  return out.empty() ? "0" : out;
}

json integer_row(const IntegerVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_int64(Rational(x)));
  return out;
}

json tuple_json(const WeightTuple& t) {
  json out = json::array();
  for (const auto& w : t) out.push_back(w);
  return out;
}

std::string tuple_text(const WeightTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < t[i].size(); ++j) out += (j ? "," : "") + std::to_string(t[i][j]);
  }
  return out + ")";
}

void emit(const RunConfig& c, const std::string& payload, std::ostream& out) {
  if (c.out.empty()) {
    out << payload;
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw ConfigError("cannot open --out file '" + c.out + "'");
  file << payload;
}

json header(const Context& ctx, const RunConfig& c) {
  return {{"schema_version", kSchemaVersion},
          {"cartan_type", ctx.rs().cartan_type().name()},
          {"s", c.s}};
}

struct FacetSystem {
  std::vector<FaceDescriptor> facets;
  std::vector<ConeInequality> inequalities;
  ConeSample sample;
};

FacetSystem build_facets(const Context& ctx, const RunConfig& c) {
  FacetSystem out;
  out.facets = ctx.faces.enumerate_faces(1, c.budget);
  out.sample = ctx.oracle.sample_cone(c.s, c.orient_box, c.depth, jobs_of(c));
  out.inequalities = ctx.faces.facet_inequalities(out.facets, out.sample);
  return out;
}

int cmd_facets(const Context& ctx, const RunConfig& c, std::ostream& out) {
  const auto sys = build_facets(ctx, c);
  const int rank = ctx.rs().rank();
  std::ostringstream os;
  if (c.format == "json") {
    json doc = header(ctx, c);
    doc["orientation_sample"] = {{"box", c.orient_box},
                                 {"depth", c.depth},
                                 {"certified", sys.sample.certified.size()}};
    json list = json::array();
    for (const auto& q : sys.inequalities) {
      list.push_back({{"parabolic_complement", json::array({q.functional.k + 1})},
                      {"reps", reps_json(ctx.weyl, q.functional.words)},
                      {"cup_coeff", 1},
                      {"k", q.functional.k + 1},
                      {"direction", q.direction},
                      {"coefficients", integer_row(primitive(q.coefficients(ctx.weyl)))}});
    }
    doc["facets"] = std::move(list);
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    for (int f = 0; f <= c.s; ++f) {
      for (int j = 0; j < rank; ++j) os << (f || j ? "," : "") << coord_name(f, j);
    }
    os << "\n";
    for (const auto& q : sys.inequalities) {
      const auto row = primitive(q.coefficients(ctx.weyl));
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i].get_str();
      os << "\n";
    }
  } else {
    os << ctx.rs().cartan_type().name() << ", s = " << c.s << ": " << sys.inequalities.size()
       << " facet inequalities (oriented on box " << c.orient_box << ", depth " << c.depth << ", "
       << sys.sample.certified.size() << " certified points)\n";
    for (const auto& q : sys.inequalities) {
      os << "  P{" << q.functional.k + 1 << "} " << reps_text(ctx.weyl, q.functional.words) << ": "
         << form_text(primitive(q.coefficients(ctx.weyl)), rank) << " >= 0\n";
    }
  }
  emit(c, os.str(), out);
  return kExitOk;
}

int max_codim_of(const Context& ctx, const RunConfig& c) {
  return c.max_codim < 0 ? ctx.rs().rank() : c.max_codim;
}

int cmd_faces(const Context& ctx, const RunConfig& c, std::ostream& out) {
  const auto faces = ctx.faces.enumerate_faces(max_codim_of(ctx, c), c.budget);
  const auto hasse = ctx.faces.hasse_diagram(faces);
  for (const auto& [lo, hi] : hasse.edges) {
    if (faces[lo].codim <= faces[hi].codim) {
      throw ConsistencyError("Hasse edge does not decrease the codimension");
    }
  }
  std::ostringstream os;
  if (c.format == "json") {
    json doc = header(ctx, c);
    doc["max_codim"] = max_codim_of(ctx, c);
    json list = json::array();
    for (const auto& f : faces) {
      json eqs = json::array();
      for (const auto& e : f.equations) {
        eqs.push_back({{"k", e.k + 1}, {"words", reps_json(ctx.weyl, e.words)}});
      }
      list.push_back({{"cartan_type", ctx.rs().cartan_type().name()},
                      {"s", c.s},
                      {"parabolic_complement", complement_json(f.parabolic)},
                      {"reps", reps_json(ctx.weyl, f.reps)},
                      {"codim", f.codim},
                      {"equations", std::move(eqs)}});
    }
    doc["faces"] = std::move(list);
    json edges = json::array();
    for (const auto& [lo, hi] : hasse.edges) edges.push_back({lo, hi});
    doc["hasse_edges"] = std::move(edges);
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "index,codim,parabolic_complement,reps\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& f = faces[i];
      std::string comp;
      for (int k : f.parabolic.complement()) comp += (comp.empty() ? "" : " ") + std::to_string(k + 1);
      std::string reps;
      for (WeylId r : f.reps) reps += (reps.empty() ? "" : " ") + word_text(ctx.weyl, r);
      os << i << "," << f.codim << "," << comp << "," << reps << "\n";
    }
  } else {
    os << ctx.rs().cartan_type().name() << ", s = " << c.s << ": " << faces.size()
       << " faces of codimension <= " << max_codim_of(ctx, c) << ", " << hasse.edges.size()
       << " covering relations\n";
    for (std::size_t i = 0; i < faces.size(); ++i) {
      const auto& f = faces[i];
      os << "  [" << i << "] codim " << f.codim << "  P" << f.parabolic.to_string() << " "
         << reps_text(ctx.weyl, f.reps) << "\n";
    }
    for (const auto& [lo, hi] : hasse.edges) os << "  " << lo << " < " << hi << "\n";
  }
  emit(c, os.str(), out);
  return kExitOk;
}

std::vector<RationalVector> load_inequalities(const std::string& path, int dim) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot read inequalities file '" + path + "'");
  json doc;
  try {
    doc = json::parse(file);
  } catch (const json::exception& e) {
    throw ConfigError("inequalities file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.contains("facets") || !doc["facets"].is_array()) {
    throw ConfigError("inequalities file has no 'facets' array");
  }
  std::vector<RationalVector> rows;
  for (const auto& f : doc["facets"]) {
    if (!f.contains("coefficients") || !f["coefficients"].is_array()) {
      throw ConfigError("facet entry without a 'coefficients' array");
    }
    RationalVector row;
    for (const auto& x : f["coefficients"]) {
      if (x.is_number_integer()) {
        row.emplace_back(x.get<long>());
      } else if (x.is_string()) {
        row.push_back(parse_rational(x.get<std::string>()));
      } else {
        throw ConfigError("facet coefficients must be integers or \"p/q\" strings");
      }
    }
    if (static_cast<int>(row.size()) != dim) {
      throw ConfigError("facet row has " + std::to_string(row.size()) + " coefficients, expected " +
                        std::to_string(dim));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
  bool skipped = false;
};

std::string verdict(const CheckResult& r) {
  if (r.skipped) return "SKIP";
  return r.pass ? "PASS" : "FAIL";
}

RationalVector flat(const WeightTuple& t) {
  RationalVector out;
  for (const auto& w : t) out.insert(out.end(), w.begin(), w.end());
  return out;
}

void check_faces(const Context& ctx, const RunConfig& c,
                 const std::vector<ConeInequality>& inequalities, std::vector<CheckResult>& checks) {
  const int dim = ctx.faces.ambient_dim();
  const auto faces = ctx.faces.enumerate_faces(max_codim_of(ctx, c), c.budget);
  const auto cone = ctx.faces.bounded_cone(inequalities);
  std::vector<PolyhedralCone> geometry;
  for (const auto& f : faces) geometry.push_back(ctx.faces.face_geometry(cone, f));

  CheckResult injectivity{"injectivity", true, ""};
  std::set<std::vector<IntegerVector>> seen;
  for (std::size_t i = 0; i < faces.size() && injectivity.pass; ++i) {
    if (geometry[i].span_dim() != dim - faces[i].codim) {
      injectivity.pass = false;
      injectivity.detail = "face " + std::to_string(i) + " has dimension " +
                           std::to_string(geometry[i].span_dim()) + ", expected " +
                           std::to_string(dim - faces[i].codim);
    } else if (!seen.insert(geometry[i].rays()).second) {
      injectivity.pass = false;
      injectivity.detail = "face " + std::to_string(i) + " P" + faces[i].parabolic.to_string() + " " +
                           reps_text(ctx.weyl, faces[i].reps) + " repeats an earlier face";
    }
  }
  if (injectivity.pass) injectivity.detail = std::to_string(faces.size()) + " distinct faces";
  checks.push_back(injectivity);

  CheckResult inclusion{"inclusion", true, ""};
  for (std::size_t i = 0; i < faces.size() && inclusion.pass; ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      const bool combinatorial = ctx.faces.face_inclusion(faces[i], faces[j]);
      const bool geometric = std::all_of(
          geometry[i].rays().begin(), geometry[i].rays().end(),
          [&](const auto& r) { return geometry[j].contains(to_rational(r)); });
      if (combinatorial != geometric) {
        inclusion.pass = false;
        inclusion.detail = "faces " + std::to_string(i) + " and " + std::to_string(j) +
                           ": criterion says " + (combinatorial ? "included" : "not included") +
                           ", geometry disagrees";
        break;
      }
    }
  }
  if (inclusion.pass) {
    inclusion.detail = std::to_string(faces.size() * faces.size()) + " ordered pairs agree";
  }
  checks.push_back(inclusion);

}

int cmd_verify(const Context& ctx, const RunConfig& c, std::ostream& out) {
  const int box = c.box < 0 ? 4 : c.box;
  const int rank = ctx.rs().rank();
  const int dim = ctx.faces.ambient_dim();
  const auto own = build_facets(ctx, c);
  std::vector<RationalVector> rows;
  if (c.inequalities.empty()) {
    for (const auto& q : own.inequalities) rows.push_back(q.coefficients(ctx.weyl));
  } else {
    rows = load_inequalities(c.inequalities, dim);
  }
  const ConeSample sample = ctx.oracle.sample_cone(c.s, box, c.depth, jobs_of(c));
  std::vector<CheckResult> checks;

  CheckResult validity{"validity", true, ""};
  for (const auto& p : sample.certified) {
    const auto x = flat(p.tuple);
    for (std::size_t r = 0; r < rows.size() && validity.pass; ++r) {
      if (dot(rows[r], x) < 0) {
        validity.pass = false;
        validity.detail = "certified point " + tuple_text(p.tuple) + " (k = " +
                          std::to_string(p.witness) + ") violates inequality " + std::to_string(r) +
                          ": " + form_text(primitive(rows[r]), rank) + " >= 0";
      }
    }
    if (!validity.pass) break;
  }
  if (validity.pass) validity.detail = std::to_string(sample.certified.size()) + " certified points";
  checks.push_back(validity);

  CheckResult tightness{"tightness", true, ""};
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool tight = false;
    for (const auto& p : sample.certified) {
      const auto x = flat(p.tuple);
      if (std::any_of(x.begin(), x.end(), [](const Rational& v) { return v != 0; }) &&
          dot(rows[r], x) == 0) {
        tight = true;
        break;
      }
    }
    if (!tight) {
      tightness.pass = false;
      tightness.detail = "inequality " + std::to_string(r) + ": " + form_text(primitive(rows[r]), rank) +
                         " >= 0 is not attained at any nonzero certified point";
      break;
    }
  }
  if (tightness.pass) tightness.detail = std::to_string(rows.size()) + " inequalities";
  checks.push_back(tightness);

  CheckResult completeness{"completeness", true, ""};
  std::uint64_t inside = 0;
  {
    std::uint64_t count = 1;
    for (int i = 0; i < dim; ++i) count *= static_cast<std::uint64_t>(box + 1);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t x = idx;
      WeightTuple t(c.s + 1, LatticeWeight(rank));
      for (int k = dim - 1; k >= 0; --k) {
        t[k / rank][k % rank] = static_cast<int>(x % (box + 1));
        x /= (box + 1);
      }
      const auto v = flat(t);
      const bool satisfied =
          std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return dot(r, v) >= 0; });
      if (!satisfied) continue;
      ++inside;
      if (!sample.contains(t)) {
        completeness.pass = false;
        completeness.detail = "tuple " + tuple_text(t) +
                              " satisfies every inequality but is not certified up to depth " +
                              std::to_string(c.depth);
        break;
      }
    }
  }
  if (completeness.pass) {
    completeness.detail = std::to_string(inside) + " box tuples satisfy the system, all certified";
  }
  checks.push_back(completeness);

  if (c.s == 1) {
    const std::string why = "the cone of pairs is not full-dimensional";
    checks.push_back({"injectivity", true, why, true});
    checks.push_back({"inclusion", true, why, true});
  } else {
    check_faces(ctx, c, own.inequalities, checks);
  }

  const bool all = std::all_of(checks.begin(), checks.end(), [](const auto& r) { return r.pass; });
  std::ostringstream os;
  if (c.format == "json") {
    json doc = header(ctx, c);
    doc["box"] = box;
    doc["depth"] = c.depth;
    json list = json::array();
    for (const auto& r : checks) {
      list.push_back({{"check", r.name}, {"result", verdict(r)}, {"detail", r.detail}});
    }
    doc["checks"] = std::move(list);
    doc["pass"] = all;
    if (c.with_sample) {
      json pts = json::array();
      for (const auto& p : sample.certified) pts.push_back({{"tuple", tuple_json(p.tuple)}, {"k", p.witness}});
      doc["certified"] = std::move(pts);
    }
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "check,result,detail\n";
    for (const auto& r : checks) os << r.name << "," << verdict(r) << ",\"" << r.detail << "\"\n";
  } else {
    for (const auto& r : checks) os << verdict(r) << " " << r.name << ": " << r.detail << "\n";
    os << (all ? "all checks passed" : "verification FAILED") << "\n";
  }
  emit(c, os.str(), out);
  return all ? kExitOk : kExitVerifyFailed;
}

struct TableEntry {
  WeylId u, v, w;
  std::int64_t coeff;
};

std::vector<TableEntry> cup_table(const Context& ctx, const ParabolicSubset& p) {
  std::vector<TableEntry> out;
  const auto reps = ctx.weyl.min_coset_reps(p);
  for (WeylId u : reps) {
    for (WeylId v : reps) {
      for (const auto& [w, c] : ctx.schubert.cup_expand(p, u, v).coeffs) {
        if (c != 0) out.push_back({u, v, w, to_int64(c)});
      }
    }
  }
  return out;
}

std::vector<TableEntry> bk_table(const Context& ctx, const ParabolicSubset& p) {
  std::vector<TableEntry> out;
  const auto reps = ctx.weyl.min_coset_reps(p);
  for (WeylId u : reps) {
    for (WeylId v : reps) {
      const auto cup = ctx.schubert.cup_expand(p, u, v);
      for (WeylId w : reps) {
        if (ctx.weyl.length(w) != ctx.weyl.length(u) + ctx.weyl.length(v)) continue;
        const WeylId tuple[3] = {u, v, ctx.schubert.dual(p, w)};
        const std::int64_t bk = ctx.bk.bk_point_coefficient(p, tuple);
        const std::int64_t c = to_int64(cup.coefficient(w));
        if (bk != 0 && bk != c) {
          throw ConsistencyError("degenerate product coefficient is neither 0 nor the cup value");
        }
        if (bk != 0) out.push_back({u, v, w, bk});
      }
    }
  }
  return out;
}

int cmd_table(const Context& ctx, const RunConfig& c, bool degenerate, std::ostream& out) {
  const auto p = parse_parabolic(c.parabolic, ctx.rs().rank());
  const auto table = degenerate ? bk_table(ctx, p) : cup_table(ctx, p);
  std::ostringstream os;
  if (c.format == "json") {
    json doc = header(ctx, c);
    doc.erase("s");
    doc["parabolic_complement"] = complement_json(p);
    json list = json::array();
    for (const auto& e : table) {
      list.push_back({{"u", word_json(ctx.weyl, e.u)},
                      {"v", word_json(ctx.weyl, e.v)},
                      {"w", word_json(ctx.weyl, e.w)},
                      {"coeff", e.coeff}});
    }
    doc["entries"] = std::move(list);
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "u,v,w,coeff\n";
    for (const auto& e : table) {
      os << word_text(ctx.weyl, e.u) << "," << word_text(ctx.weyl, e.v) << ","
         << word_text(ctx.weyl, e.w) << "," << e.coeff << "\n";
    }
  } else {
    os << ctx.rs().cartan_type().name() << ", P" << p.to_string() << ": " << table.size()
       << " nonzero structure constants\n";
    for (const auto& e : table) {
      os << "  sigma_" << word_text(ctx.weyl, e.u) << " * sigma_" << word_text(ctx.weyl, e.v)
         << " -> " << e.coeff << " sigma_" << word_text(ctx.weyl, e.w) << "\n";
    }
  }
  emit(c, os.str(), out);
  return kExitOk;
}

int cmd_membership(const Context& ctx, const RunConfig& c, std::ostream& out) {
  if (c.point.empty()) throw ConfigError("--point is required");
  const auto point = parse_point(c.point, ctx.rs().rank(), c.s);
  RunConfig oriented = c;
  if (c.box > 0) oriented.orient_box = c.box;
  const auto sys = build_facets(ctx, oriented);
  const auto faces = ctx.faces.enumerate_faces(max_codim_of(ctx, c), c.budget);
  const auto m = ctx.faces.membership(point, faces, sys.inequalities);
  const char* kind = m.kind == MembershipKind::kInterior   ? "interior"
                     : m.kind == MembershipKind::kBoundary ? "boundary"
                                                           : "outside";
  std::ostringstream os;
  if (c.format == "json") {
    json doc = header(ctx, c);
    json pt = json::array();
    for (const auto& w : point) pt.push_back(weight_json(w));
    doc["point"] = std::move(pt);
    doc["classification"] = kind;
    doc["dominant"] = m.dominant;
    json active = json::array();
    for (std::size_t i : m.active_faces) {
      active.push_back({{"parabolic_complement", complement_json(faces[i].parabolic)},
                        {"reps", reps_json(ctx.weyl, faces[i].reps)},
                        {"codim", faces[i].codim}});
    }
    doc["active_faces"] = std::move(active);
    json walls = json::array();
    for (const auto& [i, j] : m.walls) walls.push_back({i, j + 1});
    doc["walls"] = std::move(walls);
    json violated = json::array();
    for (std::size_t i : m.violated) {
      violated.push_back(integer_row(primitive(sys.inequalities[i].coefficients(ctx.weyl))));
    }
    doc["violated"] = std::move(violated);
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "classification,active_faces,walls,violated\n"
       << kind << "," << m.active_faces.size() << "," << m.walls.size() << "," << m.violated.size()
       << "\n";
  } else {
    os << kind;
    if (!m.dominant) os << " (not dominant)";
    os << "\n";
    for (std::size_t i : m.active_faces) {
      os << "  active face: codim " << faces[i].codim << " P" << faces[i].parabolic.to_string()
         << " " << reps_text(ctx.weyl, faces[i].reps) << "\n";
    }
    for (const auto& [i, j] : m.walls) os << "  chamber wall: " << coord_name(i, j) << " = 0\n";
    for (std::size_t i : m.violated) {
      os << "  violated: "
         << form_text(primitive(sys.inequalities[i].coefficients(ctx.weyl)), ctx.rs().rank())
         << " >= 0\n";
    }
  }
  emit(c, os.str(), out);
  return kExitOk;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  try {
    validate(config);
    const Context ctx(config);
    if (command == "facets") return cmd_facets(ctx, config, out);
    if (command == "faces") return cmd_faces(ctx, config, out);
    if (command == "verify") return cmd_verify(ctx, config, out);
    if (command == "cup-table") return cmd_table(ctx, config, false, out);
    if (command == "bk-table") return cmd_table(ctx, config, true, out);
    if (command == "membership") return cmd_membership(ctx, config, out);
    throw ConfigError("unknown command '" + command + "'");
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const UsageError& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ResourceError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ConsistencyError& e) {
    err << "internal consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace tcone::cli
