#pragma once

#include <string>

#include "posetfano/ehrhart.hpp"
#include "posetfano/polytope.hpp"
#include "posetfano/poset.hpp"
#include "posetfano/reflexive.hpp"

namespace posetfano::io {

// {"d": int, "covers": [[i,j],...]}; throws ParseError / CycleDetected.
Poset parse_poset(const std::string& text);
std::string serialize_poset(const Poset& p);

// {"ambient_dim": m, "vertices": [[...],...]}; throws ParseError.
LatticePolytope parse_polytope(const std::string& text);
std::string serialize_polytope(const LatticePolytope& p);

// Stable key order: vertices, facets, reflexive, normal, f_vector, ehrhart,
// volume, normalized_volume.  Rationals appear as {"num": .., "den": ..}.
std::string serialize_report(const AnalysisReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace posetfano::io
