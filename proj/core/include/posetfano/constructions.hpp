#pragma once

#include "posetfano/polytope.hpp"
#include "posetfano/poset.hpp"

namespace posetfano {

// 0/1 indicator vector of a subset of {1..d}.
Vec rho(IndexSet s, int d);

// Vertices rho(I) over the poset ideals of P.
LatticePolytope order_polytope(const Poset& p);

// Vertices rho(A) over the antichains of P.
LatticePolytope chain_polytope(const Poset& p);

// conv(P cup -Q) in the shared ambient space.
LatticePolytope gamma(const LatticePolytope& p, const LatticePolytope& q);

// conv((P x {1}) cup (-Q x {-1})), one dimension up.
LatticePolytope omega(const LatticePolytope& p, const LatticePolytope& q);

enum class PairKind {
  GammaOO,
  GammaOC,
  GammaCC,
  OmegaOO,
  OmegaOC,
  OmegaCC,
};

// Poset-level sugar: builds the requested Gamma/Omega combination of order
// and chain polytopes of P and Q.
LatticePolytope build_pair(PairKind kind, const Poset& p, const Poset& q);

}  // namespace posetfano
