#pragma once

#include <optional>
#include <vector>

#include "posetfano/ehrhart.hpp"
#include "posetfano/polytope.hpp"

namespace posetfano {

struct NormalityCertificate {
  bool normal = false;
  std::vector<int> checked_levels;
  // When not normal: a point of (level)P cap Z^m that is not a sum of
  // `level` lattice points of P.
  std::optional<Vec> witness;
  int witness_level = 0;
};

struct NormalityOptions {
  // Deepest dilation level to check; 0 means the completeness bound
  // max(2, dim-1).
  int max_level = 0;
  // Abort once a level set exceeds this many points.
  long long point_budget = 50'000'000;
};

// Unique interior lattice point at the origin and every facet at lattice
// distance one (equivalently: integral dual polytope).
bool is_reflexive(const LatticePolytope& p);

// Integer decomposition property, checked by k-fold sumset containment for
// k = 2 .. max(2, dim-1).
NormalityCertificate is_normal(const LatticePolytope& p,
                               const NormalityOptions& opts = {});

// Re-derives the sumset at the witness level and confirms the witness lies
// in (level)P but not in the sumset.
bool recheck_witness(const LatticePolytope& p, const NormalityCertificate& c);

struct AnalysisReport {
  int ambient_dim = 0;
  int dim = 0;
  long long vertex_count = 0;
  long long facet_count = 0;
  bool reflexive = false;
  NormalityCertificate normality;
  FVector f_vector;
  EhrhartPolynomial ehrhart;
  Rat volume;
  Int normalized_volume;
};

AnalysisReport reflexivity_report(const LatticePolytope& p,
                                  const NormalityOptions& opts = {});

struct ReflexiveClass {
  LatticePolytope representative;
  int boundary_points = 0;
  EhrhartPolynomial ehrhart;
  bool normal = false;
};

// All reflexive polygons up to unimodular equivalence, found by exhaustive
// boundary-walk enumeration inside a centered box of the given radius.
std::vector<ReflexiveClass> classify_reflexive_2d(int box_radius = 4);

}  // namespace posetfano
