#pragma once

#include <optional>
#include <vector>

#include "posetfano/errors.hpp"
#include "posetfano/numbers.hpp"

namespace posetfano {

using Vec = std::vector<Coord>;

// One facet inequality  <normal, x> <= offset  with primitive integer normal.
struct Facet {
  Vec normal;
  Coord offset;
  friend bool operator==(const Facet&, const Facet&) = default;
};

// Irredundant facet list, deterministically sorted.
struct HRep {
  std::vector<Facet> facets;
  friend bool operator==(const HRep&, const HRep&) = default;
};

// Face counts f_0 .. f_{m-1}.
struct FVector {
  std::vector<Int> counts;
  friend bool operator==(const FVector&, const FVector&) = default;
};

// Integral convex polytope given by its (canonically sorted, irredundant)
// vertex list.  The H-representation is computed on construction when the
// polytope is full-dimensional in its ambient space.
class LatticePolytope {
 public:
  // Empty placeholder; every meaningful instance comes from hull().
  LatticePolytope() = default;

  static LatticePolytope hull(const std::vector<Vec>& points);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  bool full_dimensional() const { return dim_ == ambient_dim_; }

  const std::vector<Vec>& vertices() const { return vertices_; }

  // Throws NotFullDimensional for lower-dimensional polytopes.
  const HRep& h_representation() const;

  // nP cap Z^m (n = 0 yields the origin only), canonically sorted.
  std::vector<Vec> lattice_points(long long n) const;
  Int lattice_point_count(long long n) const;

  // Points of nP with every facet inequality strict.
  std::vector<Vec> interior_lattice_points(long long n) const;

  FVector f_vector() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  int ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<Vec> vertices_;
  std::optional<HRep> hrep_;
};

// Extreme rays of the cone { y : <a, y> <= 0 for all a in rows }, which must
// be pointed.  Rays are primitive and sorted.  Double description method.
std::vector<std::vector<Int>> dual_cone_rays(const std::vector<std::vector<Int>>& rows);

// Whether an integer unimodular-affine bijection maps P onto Q (vertex sets).
// When both polytopes have every facet at lattice distance one the map is
// linear and no translation is searched.  Candidate maps are enumerated from
// affinely independent vertex tuples; throws SearchBudgetExceeded once more
// than `budget` candidates have been tried.
bool unimodular_equivalent(const LatticePolytope& p, const LatticePolytope& q,
                           long long budget = 10'000'000);

// Rank of the affine span of a point set (exact).
int affine_rank(const std::vector<Vec>& points);

}  // namespace posetfano
