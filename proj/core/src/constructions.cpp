#include "posetfano/constructions.hpp"

namespace posetfano {

Vec rho(IndexSet s, int d) {
  Vec v(d, 0);
  for (int i = 1; i <= d; ++i)
    if (s.contains(i)) v[i - 1] = 1;
  return v;
}

LatticePolytope order_polytope(const Poset& p) {
  std::vector<Vec> pts;
  for (IndexSet i : p.ideals()) pts.push_back(rho(i, p.size()));
  return LatticePolytope::hull(pts);
}

LatticePolytope chain_polytope(const Poset& p) {
  std::vector<Vec> pts;
  for (IndexSet a : p.antichains()) pts.push_back(rho(a, p.size()));
  return LatticePolytope::hull(pts);
}

LatticePolytope gamma(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("gamma: ambient dimensions differ");
  if (!p.full_dimensional() || !q.full_dimensional())
    throw NotFullDimensional("gamma requires full-dimensional inputs");
  std::vector<Vec> pts = p.vertices();
  for (Vec v : q.vertices()) {
    for (Coord& c : v) c = -c;
    pts.push_back(std::move(v));
  }
  return LatticePolytope::hull(pts);
}

LatticePolytope omega(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("omega: ambient dimensions differ");
  if (!p.full_dimensional() || !q.full_dimensional())
    throw NotFullDimensional("omega requires full-dimensional inputs");
  std::vector<Vec> pts;
  for (Vec v : p.vertices()) {
    v.push_back(1);
    pts.push_back(std::move(v));
  }
  for (Vec v : q.vertices()) {
    for (Coord& c : v) c = -c;
    v.push_back(-1);
    pts.push_back(std::move(v));
  }
  return LatticePolytope::hull(pts);
}

LatticePolytope build_pair(PairKind kind, const Poset& p, const Poset& q) {
  switch (kind) {
    case PairKind::GammaOO:
      return gamma(order_polytope(p), order_polytope(q));
    case PairKind::GammaOC:
      return gamma(order_polytope(p), chain_polytope(q));
    case PairKind::GammaCC:
      return gamma(chain_polytope(p), chain_polytope(q));
    case PairKind::OmegaOO:
      return omega(order_polytope(p), order_polytope(q));
    case PairKind::OmegaOC:
      return omega(order_polytope(p), chain_polytope(q));
    case PairKind::OmegaCC:
      return omega(chain_polytope(p), chain_polytope(q));
  }
  throw Error("unknown construction kind");
}

}  // namespace posetfano
