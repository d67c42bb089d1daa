#pragma once

#include <vector>

#include "posetfano/constructions.hpp"
#include "posetfano/polytope.hpp"
#include "posetfano/poset.hpp"

namespace posetfano::catalog {

// Six-element fixture: two-element antichains stacked in three levels,
// complete cover pattern between consecutive levels.
Poset six_element_poset();

// The three seven-element variants (k = 1, 2, 3): the extra element p7 is
// spliced below level k+1 of the six-element poset (k = 3 puts it on top).
Poset seven_element_poset(int k);

// 15-vertex normal 0/1-polytope in R^9 whose Omega self-pairing is
// reflexive but not normal.
LatticePolytope p9_polytope();

// Eleven 7-dimensional polytopes sharing one Ehrhart polynomial: the three
// Omega pairings of the six-element poset with itself, two Gamma pairings of
// its bottom extension, and six Gamma pairings of the seven-element variants.
std::vector<LatticePolytope> equi_ehrhart_family();

// conv{e_1, ..., e_d, -e_1-...-e_d}.
LatticePolytope standard_reflexive_simplex(int d);

// All naturally labeled posets on {1..d}: strict relations contained in the
// order of the labels.  Deterministic order.
std::vector<Poset> all_posets(int d);

// One naturally labeled representative per isomorphism class, the minimal
// relation matrix over all natural relabelings.
std::vector<Poset> unlabeled_posets(int d);

// Every strict partial order on d labeled elements, including ones that are
// not naturally labeled.  Exponential in d^2; intended for d <= 4.
std::vector<Poset> all_labeled_posets(int d);

}  // namespace posetfano::catalog
