#include "posetfano/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace posetfano::io {

using json = nlohmann::ordered_json;

namespace {

json big_to_json(const Int& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() &&
      v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();  // beyond 64 bits: decimal string, still exact
}

json rat_to_json(const Rat& r) {
  json out;
  out["num"] = big_to_json(Int(numerator(r)));
  out["den"] = big_to_json(Int(denominator(r)));
  return out;
}

json parse_or_throw(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("invalid JSON");
  return j;
}

}  // namespace

Poset parse_poset(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("d") || !j["d"].is_number_integer())
    throw ParseError("poset: expected object with integer \"d\"");
  int d = j["d"].get<int>();
  if (d < 1 || d > 32) throw ParseError("poset: d out of range");
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw ParseError("poset: covers not an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() ||
          !c[1].is_number_integer())
        throw ParseError("poset: cover is not an index pair");
      int a = c[0].get<int>(), b = c[1].get<int>();
      if (a < 1 || a > d || b < 1 || b > d)
        throw ParseError("poset: cover index out of range");
      covers.push_back({a, b});
    }
  }
  return Poset::from_cover_relations(d, covers);
}

std::string serialize_poset(const Poset& p) {
  json j;
  j["d"] = p.size();
  j["covers"] = json::array();
  for (auto [a, b] : p.cover_relations()) j["covers"].push_back({a, b});
  return j.dump();
}

LatticePolytope parse_polytope(const std::string& text) {
  json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("ambient_dim") ||
      !j["ambient_dim"].is_number_integer() || !j.contains("vertices") ||
      !j["vertices"].is_array())
    throw ParseError("polytope: expected {\"ambient_dim\", \"vertices\"}");
  int m = j["ambient_dim"].get<int>();
  if (m < 1) throw ParseError("polytope: ambient_dim must be positive");
  std::vector<Vec> pts;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || (int)row.size() != m)
      throw ParseError("polytope: vertex of wrong length");
    Vec v;
    for (const auto& x : row) {
      if (!x.is_number_integer())
        throw ParseError("polytope: non-integer coordinate");
      v.push_back(x.get<Coord>());
    }
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw ParseError("polytope: empty vertex list");
  return LatticePolytope::hull(pts);
}

std::string serialize_polytope(const LatticePolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["vertices"] = json::array();
  for (const Vec& v : p.vertices()) j["vertices"].push_back(v);
  return j.dump();
}

std::string serialize_report(const AnalysisReport& rep) {
  json j;
  j["ambient_dim"] = rep.ambient_dim;
  j["dim"] = rep.dim;
  j["vertices"] = rep.vertex_count;
  j["facets"] = rep.facet_count;
  j["reflexive"] = rep.reflexive;
  json nrm;
  nrm["normal"] = rep.normality.normal;
  nrm["checked_levels"] = rep.normality.checked_levels;
  if (rep.normality.witness) {
    nrm["witness"] = *rep.normality.witness;
    nrm["witness_level"] = rep.normality.witness_level;
  }
  j["normal"] = nrm;
  j["f_vector"] = json::array();
  for (const Int& c : rep.f_vector.counts)
    j["f_vector"].push_back(big_to_json(c));
  j["ehrhart"] = json::array();
  for (const Rat& c : rep.ehrhart.coeffs) j["ehrhart"].push_back(rat_to_json(c));
  j["volume"] = rat_to_json(rep.volume);
  j["normalized_volume"] = big_to_json(rep.normalized_volume);
  return j.dump(2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
}

}  // namespace posetfano::io
