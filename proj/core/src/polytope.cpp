#include "posetfano/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace posetfano {
namespace {

using IVec = std::vector<Int>;

Int idot(const IVec& a, const IVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IVec& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : v) x /= g;
}

// Rank of a list of rational row vectors, destructive Gauss.
int rank_of(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return (int)r;
}

std::vector<Rat> to_rat(const IVec& v) {
  std::vector<Rat> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

std::vector<Rat> to_rat(const Vec& v) {
  std::vector<Rat> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

// Solves the square system A x = b exactly; A must be invertible.
std::vector<Rat> solve_square(std::vector<std::vector<Rat>> a,
                              std::vector<Rat> b) {
  size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error("singular system");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  std::vector<Rat> x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

using Bits = std::vector<std::uint64_t>;

Bits bits_make(size_t n) { return Bits((n + 63) / 64, 0); }
void bits_set(Bits& b, size_t i) { b[i / 64] |= 1ull << (i % 64); }
Bits bits_and(const Bits& a, const Bits& b) {
  Bits out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
  return out;
}
bool bits_superset(const Bits& big, const Bits& small) {
  for (size_t i = 0; i < big.size(); ++i)
    if (small[i] & ~big[i]) return false;
  return true;
}

struct Ray {
  IVec v;
  Bits tight;
};

}  // namespace

std::vector<IVec> dual_cone_rays(const std::vector<IVec>& rows) {
  if (rows.empty()) throw Error("dual_cone_rays: no inequalities");
  const size_t n = rows[0].size();
  const size_t nrows = rows.size();

  // Pick n linearly independent rows as the starting simplicial cone.
  std::vector<size_t> basis;
  {
    std::vector<std::vector<Rat>> acc;
    for (size_t i = 0; i < nrows && basis.size() < n; ++i) {
      acc.push_back(to_rat(rows[i]));
      if (rank_of(acc) == (int)acc.size())
        basis.push_back(i);
      else
        acc.pop_back();
    }
  }
  if (basis.size() < n)
    throw Error("dual_cone_rays: cone is not pointed");

  std::vector<std::vector<Rat>> bmat;
  for (size_t i : basis) bmat.push_back(to_rat(rows[i]));

  std::vector<Ray> rays;
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rat> e(n, Rat(0));
    e[j] = Rat(-1);
    std::vector<Rat> x = solve_square(bmat, e);
    Int denlcm = 1;
    for (const Rat& q : x)
      denlcm = boost::multiprecision::lcm(denlcm, Int(denominator(q)));
    IVec iv(n);
    for (size_t k = 0; k < n; ++k)
      iv[k] = Int(numerator(x[k])) * (denlcm / Int(denominator(x[k])));
    make_primitive(iv);
    Ray r{std::move(iv), bits_make(nrows)};
    for (size_t i : basis)
      if (idot(rows[i], r.v) == 0) bits_set(r.tight, i);
    rays.push_back(std::move(r));
  }

  std::set<size_t> in_basis(basis.begin(), basis.end());
  for (size_t k = 0; k < nrows; ++k) {
    if (in_basis.count(k)) continue;
    const IVec& a = rows[k];
    std::vector<Int> s(rays.size());
    bool any_pos = false;
    for (size_t i = 0; i < rays.size(); ++i) {
      s[i] = idot(a, rays[i].v);
      if (s[i] > 0) any_pos = true;
    }
    if (!any_pos) {
      for (size_t i = 0; i < rays.size(); ++i)
        if (s[i] == 0) bits_set(rays[i].tight, k);
      continue;
    }
    std::vector<Ray> next;
    for (size_t i = 0; i < rays.size(); ++i) {
      if (s[i] > 0) continue;
      Ray r = rays[i];
      if (s[i] == 0) bits_set(r.tight, k);
      next.push_back(std::move(r));
    }
    for (size_t ip = 0; ip < rays.size(); ++ip) {
      if (s[ip] <= 0) continue;
      for (size_t im = 0; im < rays.size(); ++im) {
        if (s[im] >= 0) continue;
        Bits common = bits_and(rays[ip].tight, rays[im].tight);
        bool adjacent = true;
        for (size_t o = 0; o < rays.size(); ++o) {
          if (o == ip || o == im) continue;
          if (bits_superset(rays[o].tight, common)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IVec v(n);
        for (size_t c = 0; c < n; ++c)
          v[c] = s[ip] * rays[im].v[c] - s[im] * rays[ip].v[c];
        make_primitive(v);
        Ray r{std::move(v), common};
        bits_set(r.tight, k);
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  std::vector<std::vector<Rat>> diffs;
  for (size_t i = 1; i < points.size(); ++i) {
    std::vector<Rat> d(points[0].size());
    for (size_t j = 0; j < d.size(); ++j)
      d[j] = Rat(points[i][j] - points[0][j]);
    diffs.push_back(std::move(d));
  }
  return rank_of(std::move(diffs));
}

LatticePolytope LatticePolytope::hull(const std::vector<Vec>& points) {
  if (points.empty()) throw EmptyInput("hull of empty point set");
  const int m = (int)points[0].size();
  for (const Vec& p : points)
    if ((int)p.size() != m) throw DimensionMismatch("mixed ambient dimensions");

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope out;
  out.ambient_dim_ = m;
  const int r = affine_rank(pts);
  out.dim_ = r;

  if (r == 0) {
    out.vertices_ = {pts[0]};
    return out;
  }

  if (r < m) {
    // Map into exact coordinates on the affine span and recurse.
    std::vector<std::vector<Rat>> basis;
    std::vector<size_t> chosen;
    for (size_t i = 1; i < pts.size() && (int)basis.size() < r; ++i) {
      std::vector<Rat> d(m);
      for (int j = 0; j < m; ++j) d[j] = Rat(pts[i][j] - pts[0][j]);
      basis.push_back(d);
      if (rank_of(basis) != (int)basis.size()) basis.pop_back();
    }
    // Solve coordinates for every point w.r.t. the basis (consistent system).
    std::vector<std::vector<Rat>> coords;
    for (const Vec& p : pts) {
      // Least-structure exact solve: pick r independent ambient coordinates.
      // Build the full system [basis^T | p - p0] and eliminate.
      std::vector<std::vector<Rat>> sys(m, std::vector<Rat>(r + 1));
      for (int row = 0; row < m; ++row) {
        for (int c = 0; c < r; ++c) sys[row][c] = basis[c][row];
        sys[row][r] = Rat(p[row] - pts[0][row]);
      }
      // Gauss; system is consistent by construction.
      size_t lead = 0;
      std::vector<int> pivot_col(r, -1);
      for (int c = 0; c < r && lead < (size_t)m; ++c) {
        size_t piv = lead;
        while (piv < (size_t)m && sys[piv][c] == 0) ++piv;
        if (piv == (size_t)m) continue;
        std::swap(sys[piv], sys[lead]);
        for (size_t i = 0; i < (size_t)m; ++i) {
          if (i == lead || sys[i][c] == 0) continue;
          Rat f = sys[i][c] / sys[lead][c];
          for (int j = c; j <= r; ++j) sys[i][j] -= f * sys[lead][j];
        }
        pivot_col[c] = (int)lead;
        ++lead;
      }
      std::vector<Rat> x(r, Rat(0));
      for (int c = 0; c < r; ++c)
        if (pivot_col[c] >= 0) x[c] = sys[pivot_col[c]][r] / sys[pivot_col[c]][c];
      coords.push_back(std::move(x));
    }
    Int denlcm = 1;
    for (auto& x : coords)
      for (auto& q : x)
        denlcm = boost::multiprecision::lcm(denlcm, Int(denominator(q)));
    std::vector<Vec> proj;
    for (auto& x : coords) {
      Vec v(r);
      for (int c = 0; c < r; ++c) {
        Int scaled = Int(numerator(x[c])) * (denlcm / Int(denominator(x[c])));
        v[c] = (Coord)scaled.convert_to<long long>();
      }
      proj.push_back(std::move(v));
    }
    LatticePolytope sub = hull(proj);
    std::map<Vec, size_t> lookup;
    for (size_t i = 0; i < proj.size(); ++i) lookup[proj[i]] = i;
    for (const Vec& v : sub.vertices()) out.vertices_.push_back(pts[lookup.at(v)]);
    std::sort(out.vertices_.begin(), out.vertices_.end());
    return out;
  }

  // Full-dimensional: facets are the extreme rays of the polar of the
  // homogenization cone over the points.
  std::vector<IVec> rows;
  rows.reserve(pts.size());
  for (const Vec& p : pts) {
    IVec row(m + 1);
    for (int j = 0; j < m; ++j) row[j] = p[j];
    row[m] = 1;
    rows.push_back(std::move(row));
  }
  std::vector<IVec> rays = dual_cone_rays(rows);

  HRep h;
  for (const IVec& y : rays) {
    Facet f;
    f.normal.resize(m);
    for (int j = 0; j < m; ++j) f.normal[j] = (Coord)y[j].convert_to<long long>();
    f.offset = (Coord)(-y[m]).convert_to<long long>();
    h.facets.push_back(std::move(f));
  }
  std::sort(h.facets.begin(), h.facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });

  // A point of the hull is a vertex iff its tight facet normals span R^m.
  for (const Vec& p : pts) {
    std::vector<std::vector<Rat>> tight;
    for (const Facet& f : h.facets) {
      Coord dp = 0;
      for (int j = 0; j < m; ++j) dp += f.normal[j] * p[j];
      if (dp == f.offset) tight.push_back(to_rat(f.normal));
    }
    if ((int)tight.size() >= m && rank_of(std::move(tight)) == m)
      out.vertices_.push_back(p);
  }
  std::sort(out.vertices_.begin(), out.vertices_.end());
  out.hrep_ = std::move(h);
  return out;
}

const HRep& LatticePolytope::h_representation() const {
  if (!hrep_)
    throw NotFullDimensional("H-representation requires a full-dimensional polytope");
  return *hrep_;
}

namespace {

struct ScanContext {
  int m;
  long long n;
  const std::vector<Facet>* facets;
  std::vector<Coord> lo, hi;                 // per-coordinate box at dilation n
  std::vector<std::vector<Coord>> rest_min;  // [facet][coord]: min of suffix
  Coord slack;                               // 0 for closed, 1 for strict
};

ScanContext make_scan(const LatticePolytope& p, long long n, bool strict) {
  if (!p.full_dimensional())
    throw NotFullDimensional("lattice point scan requires full dimension");
  ScanContext cx;
  cx.m = p.ambient_dim();
  cx.n = n;
  cx.facets = &p.h_representation().facets;
  cx.slack = strict ? 1 : 0;
  cx.lo.assign(cx.m, 0);
  cx.hi.assign(cx.m, 0);
  for (int j = 0; j < cx.m; ++j) {
    Coord lo = p.vertices()[0][j], hi = lo;
    for (const Vec& v : p.vertices()) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    cx.lo[j] = lo * n;
    cx.hi[j] = hi * n;
    if (cx.lo[j] > cx.hi[j]) std::swap(cx.lo[j], cx.hi[j]);
  }
  cx.rest_min.assign(cx.facets->size(), std::vector<Coord>(cx.m + 1, 0));
  for (size_t f = 0; f < cx.facets->size(); ++f) {
    const Vec& a = (*cx.facets)[f].normal;
    for (int k = cx.m - 1; k >= 0; --k) {
      Coord contrib = std::min(a[k] * cx.lo[k], a[k] * cx.hi[k]);
      cx.rest_min[f][k] = cx.rest_min[f][k + 1] + contrib;
    }
  }
  return cx;
}

// Feasible interval for coordinate k given the partial sums; returns false if
// empty.  partial[f] carries sum over coordinates < k.
bool coord_interval(const ScanContext& cx, int k, const std::vector<Coord>& partial,
                    Coord& lo, Coord& hi) {
  lo = cx.lo[k];
  hi = cx.hi[k];
  for (size_t f = 0; f < cx.facets->size(); ++f) {
    const Facet& fac = (*cx.facets)[f];
    Coord a = fac.normal[k];
    Coord rhs = fac.offset * cx.n - cx.slack - partial[f] - cx.rest_min[f][k + 1];
    if (a > 0) {
      Coord bound = rhs >= 0 ? rhs / a : -((-rhs + a - 1) / a);
      hi = std::min(hi, bound);
    } else if (a < 0) {
      Coord na = -a, nrhs = -rhs;
      Coord bound = nrhs >= 0 ? (nrhs + na - 1) / na : -((-nrhs) / na);
      lo = std::max(lo, bound);
    } else if (rhs < 0) {
      return false;
    }
    if (lo > hi) return false;
  }
  return true;
}

void scan_collect(const ScanContext& cx, int k, std::vector<Coord>& partial,
                  Vec& point, std::vector<Vec>& out) {
  Coord lo, hi;
  if (!coord_interval(cx, k, partial, lo, hi)) return;
  for (Coord x = lo; x <= hi; ++x) {
    point[k] = x;
    if (k == cx.m - 1) {
      out.push_back(point);
    } else {
      std::vector<Coord> next = partial;
      for (size_t f = 0; f < cx.facets->size(); ++f)
        next[f] += (*cx.facets)[f].normal[k] * x;
      scan_collect(cx, k + 1, next, point, out);
    }
  }
}

Int scan_count(const ScanContext& cx, int k, const std::vector<Coord>& partial) {
  Coord lo, hi;
  if (!coord_interval(cx, k, partial, lo, hi)) return 0;
  if (k == cx.m - 1) return Int(hi - lo + 1);
  Int total = 0;
  std::vector<Coord> next(partial.size());
  for (Coord x = lo; x <= hi; ++x) {
    for (size_t f = 0; f < partial.size(); ++f)
      next[f] = partial[f] + (*cx.facets)[f].normal[k] * x;
    total += scan_count(cx, k + 1, next);
  }
  return total;
}

}  // namespace

std::vector<Vec> LatticePolytope::lattice_points(long long n) const {
  ScanContext cx = make_scan(*this, n, false);
  std::vector<Vec> out;
  std::vector<Coord> partial(cx.facets->size(), 0);
  Vec point(cx.m, 0);
  scan_collect(cx, 0, partial, point, out);
  return out;
}

Int LatticePolytope::lattice_point_count(long long n) const {
  ScanContext cx = make_scan(*this, n, false);
  std::vector<Coord> partial(cx.facets->size(), 0);
  return scan_count(cx, 0, partial);
}

std::vector<Vec> LatticePolytope::interior_lattice_points(long long n) const {
  ScanContext cx = make_scan(*this, n, true);
  std::vector<Vec> out;
  std::vector<Coord> partial(cx.facets->size(), 0);
  Vec point(cx.m, 0);
  scan_collect(cx, 0, partial, point, out);
  return out;
}

FVector LatticePolytope::f_vector() const {
  if (!full_dimensional())
    throw NotFullDimensional("f-vector requires a full-dimensional polytope");
  const int m = ambient_dim_;
  const auto& facets = h_representation().facets;
  const size_t nv = vertices_.size();

  std::vector<Bits> facet_verts;
  for (const Facet& f : facets) {
    Bits b = bits_make(nv);
    for (size_t i = 0; i < nv; ++i) {
      Coord dp = 0;
      for (int j = 0; j < m; ++j) dp += f.normal[j] * vertices_[i][j];
      if (dp == f.offset) bits_set(b, i);
    }
    facet_verts.push_back(std::move(b));
  }

  // Faces are the closed sets under intersection of facet vertex sets.
  struct BitsHash {
    size_t operator()(const Bits& b) const {
      size_t h = 1469598103934665603ull;
      for (auto w : b) h = (h ^ w) * 1099511628211ull;
      return h;
    }
  };
  Bits full = bits_make(nv);
  for (size_t i = 0; i < nv; ++i) bits_set(full, i);
  std::unordered_set<Bits, BitsHash> seen;
  std::vector<Bits> queue{full};
  seen.insert(full);
  while (!queue.empty()) {
    Bits cur = std::move(queue.back());
    queue.pop_back();
    for (const Bits& fv : facet_verts) {
      Bits next = bits_and(cur, fv);
      bool empty = true;
      for (auto w : next)
        if (w) {
          empty = false;
          break;
        }
      if (empty) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  FVector fv;
  fv.counts.assign(m, Int(0));
  for (const Bits& face : seen) {
    if (face == full) continue;  // the polytope itself is not counted
    std::vector<Vec> pts;
    for (size_t i = 0; i < nv; ++i)
      if ((face[i / 64] >> (i % 64)) & 1ull) pts.push_back(vertices_[i]);
    int d = affine_rank(pts);
    fv.counts[d] += 1;
  }
  return fv;
}

namespace {

// det of a rational matrix.
Rat det_of(std::vector<std::vector<Rat>> a) {
  size_t n = a.size();
  Rat det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

bool all_offsets_one(const LatticePolytope& p) {
  for (const Facet& f : p.h_representation().facets)
    if (f.offset != 1) return false;
  return true;
}

}  // namespace

bool unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                           long long budget) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("unimodular_equivalent: ambient dimensions differ");
  if (!p.full_dimensional() || !q.full_dimensional())
    throw NotFullDimensional("unimodular_equivalent requires full dimension");
  const int m = p.ambient_dim();

  if (p.vertices() == q.vertices()) return true;
  if (p.vertices().size() != q.vertices().size()) return false;
  if (p.h_representation().facets.size() != q.h_representation().facets.size())
    return false;
  // Counts at dilations 0..m pin down the Ehrhart polynomial (hence the
  // normalized volume); both are unimodular invariants.
  for (int n = 1; n <= m; ++n)
    if (p.lattice_point_count(n) != q.lattice_point_count(n)) return false;
  if (p.f_vector() != q.f_vector()) return false;

  const bool linear_only = all_offsets_one(p) && all_offsets_one(q);

  const auto& pv = p.vertices();
  const auto& qv = q.vertices();
  std::set<Vec> qset(qv.begin(), qv.end());

  // Fixed independent tuple from P.
  std::vector<size_t> base;
  {
    std::vector<std::vector<Rat>> acc;
    size_t anchor = 0;
    if (linear_only) {
      for (size_t i = 0; i < pv.size() && (int)base.size() < m; ++i) {
        acc.push_back(to_rat(pv[i]));
        if (rank_of(acc) == (int)acc.size())
          base.push_back(i);
        else
          acc.pop_back();
      }
    } else {
      base.push_back(anchor);
      for (size_t i = 1; i < pv.size() && (int)base.size() < m + 1; ++i) {
        std::vector<Rat> d(m);
        for (int j = 0; j < m; ++j) d[j] = Rat(pv[i][j] - pv[anchor][j]);
        acc.push_back(d);
        if (rank_of(acc) == (int)acc.size())
          base.push_back(i);
        else
          acc.pop_back();
      }
    }
  }
  const size_t tuple_len = base.size();

  // Columns of the source matrix: vertex coordinates (or differences).
  std::vector<std::vector<Rat>> vmat(m, std::vector<Rat>(m));
  for (int c = 0; c < m; ++c) {
    size_t src = linear_only ? base[c] : base[c + 1];
    size_t ref = linear_only ? src : base[0];
    for (int rrow = 0; rrow < m; ++rrow)
      vmat[rrow][c] = Rat(pv[src][rrow] - (linear_only ? 0 : pv[ref][rrow]));
  }
  Rat vdet = det_of(vmat);

  long long tried = 0;
  std::vector<size_t> pick(tuple_len, 0);
  std::vector<bool> used(qv.size(), false);

  // Recursive enumeration of ordered tuples of Q vertices.
  auto try_map = [&](const std::vector<size_t>& sel) -> bool {
    std::vector<std::vector<Rat>> wmat(m, std::vector<Rat>(m));
    size_t off = linear_only ? 0 : 1;
    for (int c = 0; c < m; ++c)
      for (int rrow = 0; rrow < m; ++rrow)
        wmat[rrow][c] = Rat(qv[sel[c + off]][rrow] -
                            (linear_only ? 0 : qv[sel[0]][rrow]));
    Rat wdet = det_of(wmat);
    if (wdet != vdet && wdet != -vdet) return false;
    if (wdet == 0) return false;
    // U = W * V^{-1}: solve column by column through V^T systems.
    // Compute U rows: U * v_c = w_c; equivalently V^T U^T = W^T.
    std::vector<std::vector<Rat>> u(m, std::vector<Rat>(m));
    for (int rrow = 0; rrow < m; ++rrow) {
      std::vector<std::vector<Rat>> vt(m, std::vector<Rat>(m));
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) vt[i][j] = vmat[j][i];
      std::vector<Rat> rhs(m);
      for (int c = 0; c < m; ++c) rhs[c] = wmat[rrow][c];
      std::vector<Rat> row = solve_square(std::move(vt), std::move(rhs));
      for (int j = 0; j < m; ++j) {
        if (denominator(row[j]) != 1) return false;
        u[rrow][j] = row[j];
      }
    }
    // Translation for the affine case.
    std::vector<Rat> t(m, Rat(0));
    if (!linear_only) {
      for (int rrow = 0; rrow < m; ++rrow) {
        Rat s = Rat(qv[sel[0]][rrow]);
        for (int j = 0; j < m; ++j) s -= u[rrow][j] * Rat(pv[base[0]][j]);
        t[rrow] = s;
      }
    }
    for (const Vec& v : pv) {
      Vec img(m);
      for (int rrow = 0; rrow < m; ++rrow) {
        Rat s = t[rrow];
        for (int j = 0; j < m; ++j) s += u[rrow][j] * Rat(v[j]);
        if (denominator(s) != 1) return false;
        img[rrow] = (Coord)Int(numerator(s)).convert_to<long long>();
      }
      if (!qset.count(img)) return false;
    }
    return true;
  };

  std::vector<size_t> sel;
  sel.reserve(tuple_len);
  bool found = false;
  auto rec = [&](auto&& self) -> void {
    if (found) return;
    if (sel.size() == tuple_len) {
      if (++tried > budget)
        throw SearchBudgetExceeded("unimodular_equivalent: candidate budget of " +
                                   std::to_string(budget) + " exceeded");
      if (try_map(sel)) found = true;
      return;
    }
    for (size_t i = 0; i < qv.size(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      sel.push_back(i);
      self(self);
      sel.pop_back();
      used[i] = false;
      if (found) return;
    }
  };
  rec(rec);
  return found;
}

}  // namespace posetfano
