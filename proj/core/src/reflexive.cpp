#include "posetfano/reflexive.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace posetfano {

bool is_reflexive(const LatticePolytope& p) {
  if (!p.full_dimensional())
    throw NotFullDimensional("is_reflexive requires full dimension");
  for (const Facet& f : p.h_representation().facets)
    if (f.offset != 1) return false;
  std::vector<Vec> interior = p.interior_lattice_points(1);
  return interior.size() == 1 &&
         interior[0] == Vec(p.ambient_dim(), 0);
}

namespace {

std::vector<Vec> sumset(const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::set<Vec> out;
  for (const Vec& x : a) {
    for (const Vec& y : b) {
      Vec z(x.size());
      for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      out.insert(std::move(z));
    }
  }
  return std::vector<Vec>(out.begin(), out.end());
}

}  // namespace

NormalityCertificate is_normal(const LatticePolytope& p,
                               const NormalityOptions& opts) {
  if (!p.full_dimensional())
    throw NotFullDimensional("is_normal requires full dimension");
  const int m = p.ambient_dim();
  const int deepest = opts.max_level > 0 ? opts.max_level : std::max(2, m - 1);

  NormalityCertificate cert;
  std::vector<Vec> level1 = p.lattice_points(1);
  std::vector<Vec> sums = level1;  // k-fold sumset of the level-1 points
  for (int k = 2; k <= deepest; ++k) {
    Int count = p.lattice_point_count(k);
    if (count > opts.point_budget)
      throw BudgetExceeded("is_normal: level " + std::to_string(k) +
                           " has too many lattice points");
    std::vector<Vec> level = p.lattice_points(k);
    sums = sumset(sums, level1);
    cert.checked_levels.push_back(k);
    // Sums of k lattice points of P always lie in kP, so the check is set
    // equality against the full level set.
    if (sums != level) {
      std::set<Vec> have(sums.begin(), sums.end());
      for (const Vec& z : level)
        if (!have.count(z)) {
          cert.normal = false;
          cert.witness = z;
          cert.witness_level = k;
          return cert;
        }
      throw Error("is_normal: sumset escaped the dilation");
    }
  }
  cert.normal = true;
  return cert;
}

bool recheck_witness(const LatticePolytope& p, const NormalityCertificate& c) {
  if (!c.witness) return false;
  const int k = c.witness_level;
  std::vector<Vec> level = p.lattice_points(k);
  if (!std::binary_search(level.begin(), level.end(), *c.witness)) return false;
  std::vector<Vec> sums = p.lattice_points(1);
  std::vector<Vec> level1 = sums;
  for (int i = 2; i <= k; ++i) sums = sumset(sums, level1);
  return !std::binary_search(sums.begin(), sums.end(), *c.witness);
}

AnalysisReport reflexivity_report(const LatticePolytope& p,
                                  const NormalityOptions& opts) {
  AnalysisReport rep;
  rep.ambient_dim = p.ambient_dim();
  rep.dim = p.dim();
  rep.vertex_count = (long long)p.vertices().size();
  rep.facet_count = (long long)p.h_representation().facets.size();
  rep.reflexive = is_reflexive(p);
  rep.normality = is_normal(p, opts);
  rep.f_vector = p.f_vector();
  rep.ehrhart = ehrhart_polynomial(p);
  rep.volume = rep.ehrhart.leading();
  rep.normalized_volume = normalized_volume(p);
  return rep;
}

namespace {

using Pt = std::pair<Coord, Coord>;

Coord cross(Pt a, Pt b) { return a.first * b.second - a.second * b.first; }
Pt sub(Pt a, Pt b) { return {a.first - b.first, a.second - b.second}; }

// An edge u -> v can lie on a facet {x : <a,x> = 1} with integer a iff the
// linear system has an integer solution; origin must be strictly left.
bool edge_ok(Pt u, Pt v) {
  Coord d = cross(u, v);
  if (d <= 0) return false;
  Coord ax = v.second - u.second;
  Coord ay = u.first - v.first;
  return ax % d == 0 && ay % d == 0;
}

// Angular position relative to a base direction; smaller sorts first on the
// counterclockwise sweep starting at the base.  Same-direction points share
// position 0 with the base.
int angle_class(Pt base, Pt p) {
  Coord c = cross(base, p);
  Coord dot = base.first * p.first + base.second * p.second;
  if (c == 0) return dot > 0 ? 0 : 2;
  return c > 0 ? 1 : 3;
}

bool angle_less(Pt base, Pt a, Pt b) {
  int ca = angle_class(base, a), cb = angle_class(base, b);
  if (ca != cb) return ca < cb;
  if (ca == 0 || ca == 2) return false;  // same direction: equal
  return cross(a, b) > 0;
}

// Strictly-interior lattice points of the hull of a small point set.
std::vector<Pt> interior_points_2d(const std::vector<Pt>& pts) {
  // Monotone chain hull.
  std::vector<Pt> p = pts;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return {};
  auto build = [&](bool upper) {
    std::vector<Pt> h;
    for (Pt q : p) {
      while (h.size() >= 2) {
        Coord c = cross(sub(h.back(), h[h.size() - 2]), sub(q, h.back()));
        if (upper ? c >= 0 : c <= 0)
          h.pop_back();
        else
          break;
      }
      h.push_back(q);
    }
    return h;
  };
  std::vector<Pt> lower = build(false), upper = build(true);
  std::vector<Pt> hull(lower.begin(), lower.end() - 1);
  for (size_t i = upper.size(); i-- > 1;) hull.push_back(upper[i]);
  if (hull.size() < 3) return {};

  Coord xlo = p.front().first, xhi = p.back().first;
  Coord ylo = p[0].second, yhi = p[0].second;
  for (Pt q : p) {
    ylo = std::min(ylo, q.second);
    yhi = std::max(yhi, q.second);
  }
  std::vector<Pt> out;
  for (Coord x = xlo + 1; x < xhi; ++x)
    for (Coord y = ylo + 1; y < yhi; ++y) {
      bool inside = true;
      for (size_t i = 0; i < hull.size(); ++i) {
        Pt a = hull[i], b = hull[(i + 1) % hull.size()];
        if (cross(sub(b, a), sub({x, y}, a)) <= 0) {
          inside = false;
          break;
        }
      }
      if (inside) out.push_back({x, y});
    }
  return out;
}

bool interior_ok(const std::vector<Pt>& path) {
  for (Pt q : interior_points_2d(path))
    if (q != Pt{0, 0}) return false;
  return true;
}

struct CensusSearch {
  std::vector<Pt> points;
  std::set<std::vector<Pt>> found;  // canonical (sorted) vertex lists

  void run(int radius) {
    for (Coord x = -radius; x <= radius; ++x)
      for (Coord y = -radius; y <= radius; ++y)
        if (x || y) points.push_back({x, y});
    std::vector<Pt> path;
    for (Pt start : points) {
      path.assign(1, start);
      extend(path);
    }
  }

  void extend(std::vector<Pt>& path) {
    Pt start = path.front();
    Pt last = path.back();
    if (path.size() >= 3 && edge_ok(last, start)) {
      Pt a = path[path.size() - 2];
      if (cross(sub(last, a), sub(start, last)) > 0 &&
          cross(sub(start, last), sub(path[1], start)) > 0) {
        std::vector<Pt> key = path;
        std::sort(key.begin(), key.end());
        found.insert(std::move(key));
      }
    }
    for (Pt next : points) {
      if (next < start) continue;  // the start is the lex-min vertex
      if (!edge_ok(last, next)) continue;
      if (!angle_less(start, last, next) && path.size() > 1) continue;
      if (path.size() == 1 && angle_class(start, next) == 0) continue;
      if (path.size() >= 2 &&
          cross(sub(last, path[path.size() - 2]), sub(next, last)) <= 0)
        continue;
      path.push_back(next);
      if (interior_ok(path))
        extend(path);
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<ReflexiveClass> classify_reflexive_2d(int box_radius) {
  CensusSearch search;
  search.run(box_radius);

  std::vector<ReflexiveClass> classes;
  // Bucket candidate polygons by cheap invariants before the search for a
  // unimodular map.
  std::map<std::pair<int, long long>, std::vector<size_t>> buckets;
  for (const auto& key : search.found) {
    std::vector<Vec> pts;
    for (Pt q : key) pts.push_back({q.first, q.second});
    LatticePolytope poly = LatticePolytope::hull(pts);
    if (poly.vertices().size() != key.size()) continue;  // winding artifact
    if (!is_reflexive(poly)) continue;
    int b = (int)(poly.lattice_point_count(1) - 1).convert_to<long long>();
    auto bucket_key = std::make_pair(b, (long long)poly.vertices().size());
    bool fresh = true;
    for (size_t idx : buckets[bucket_key]) {
      if (unimodular_equivalent(classes[idx].representative, poly)) {
        fresh = false;
        break;
      }
    }
    if (!fresh) continue;
    ReflexiveClass cls;
    cls.boundary_points = b;
    cls.ehrhart = ehrhart_polynomial(poly);
    cls.normal = is_normal(poly).normal;
    cls.representative = std::move(poly);
    buckets[bucket_key].push_back(classes.size());
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const ReflexiveClass& a, const ReflexiveClass& b) {
              if (a.boundary_points != b.boundary_points)
                return a.boundary_points < b.boundary_points;
              if (a.representative.vertices().size() !=
                  b.representative.vertices().size())
                return a.representative.vertices().size() <
                       b.representative.vertices().size();
              return a.representative.vertices() < b.representative.vertices();
            });
  return classes;
}

}  // namespace posetfano
