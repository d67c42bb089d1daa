#include "posetfano/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace posetfano::catalog {

Poset six_element_poset() {
  return Poset::from_cover_relations(6, {{1, 3},
                                         {1, 4},
                                         {2, 3},
                                         {2, 4},
                                         {3, 5},
                                         {3, 6},
                                         {4, 5},
                                         {4, 6}});
}

Poset seven_element_poset(int k) {
  switch (k) {
    case 1:
      return Poset::from_cover_relations(
          7, {{1, 7}, {2, 7}, {7, 3}, {7, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
    case 2:
      return Poset::from_cover_relations(
          7, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 7}, {4, 7}, {7, 5}, {7, 6}});
    case 3:
      return Poset::from_cover_relations(7, {{1, 3},
                                             {1, 4},
                                             {2, 3},
                                             {2, 4},
                                             {3, 5},
                                             {3, 6},
                                             {4, 5},
                                             {4, 6},
                                             {5, 7},
                                             {6, 7}});
    default:
      throw Error("seven_element_poset: k must be 1, 2 or 3");
  }
}

LatticePolytope p9_polytope() {
  auto e = [](std::initializer_list<int> idx) {
    Vec v(9, 0);
    for (int i : idx) v[i - 1] = 1;
    return v;
  };
  return LatticePolytope::hull({e({1, 2}),
                                e({2, 3}),
                                e({3, 4}),
                                e({4, 5}),
                                e({1, 5}),
                                e({1, 6}),
                                e({1, 7}),
                                e({2, 7}),
                                e({2, 8}),
                                e({3, 8}),
                                e({3, 9}),
                                e({4, 9}),
                                e({4}),
                                e({5}),
                                e({5, 6})});
}

std::vector<LatticePolytope> equi_ehrhart_family() {
  Poset p = six_element_poset();
  Poset pb = p.adjoin_bottom();
  std::vector<LatticePolytope> out;
  out.push_back(build_pair(PairKind::OmegaOO, p, p));
  out.push_back(build_pair(PairKind::OmegaOC, p, p));
  out.push_back(build_pair(PairKind::OmegaCC, p, p));
  out.push_back(build_pair(PairKind::GammaOC, pb, pb));
  out.push_back(build_pair(PairKind::GammaCC, pb, pb));
  for (int k = 1; k <= 3; ++k)
    out.push_back(build_pair(PairKind::GammaOO, seven_element_poset(k),
                             seven_element_poset(k)));
  for (int k = 1; k <= 3; ++k)
    out.push_back(build_pair(PairKind::GammaOC, seven_element_poset(k),
                             seven_element_poset(k)));
  return out;
}

LatticePolytope standard_reflexive_simplex(int d) {
  std::vector<Vec> pts;
  for (int i = 0; i < d; ++i) {
    Vec v(d, 0);
    v[i] = 1;
    pts.push_back(std::move(v));
  }
  pts.push_back(Vec(d, -1));
  return LatticePolytope::hull(pts);
}

namespace {

bool transitive(int d, const std::vector<std::uint8_t>& lt) {
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (!lt[i * d + j]) continue;
      for (int k = 0; k < d; ++k)
        if (lt[j * d + k] && !lt[i * d + k]) return false;
    }
  return true;
}

}  // namespace

std::vector<Poset> all_posets(int d) {
  std::vector<std::pair<int, int>> slots;  // upper-triangular positions
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) slots.push_back({i, j});
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::uint8_t> lt(d * d, 0);
    for (size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) lt[slots[s].first * d + slots[s].second] = 1;
    if (transitive(d, lt)) out.push_back(Poset::from_strict_matrix(d, lt));
  }
  return out;
}

std::vector<Poset> all_labeled_posets(int d) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) slots.push_back({i, j});
  std::vector<Poset> out;
  for (std::uint64_t mask = 0; mask < (1ull << slots.size()); ++mask) {
    std::vector<std::uint8_t> lt(d * d, 0);
    bool anti = true;
    for (size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1) lt[slots[s].first * d + slots[s].second] = 1;
    for (int i = 0; i < d && anti; ++i)
      for (int j = 0; j < d; ++j)
        if (lt[i * d + j] && lt[j * d + i]) {
          anti = false;
          break;
        }
    if (anti && transitive(d, lt))
      out.push_back(Poset::from_strict_matrix(d, lt));
  }
  return out;
}

std::vector<Poset> unlabeled_posets(int d) {
  std::set<std::vector<std::uint8_t>> canon;
  std::vector<int> perm(d);
  for (const Poset& p : all_posets(d)) {
    std::vector<std::uint8_t> lt(d * d, 0);
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        if (p.less(i, j)) lt[(i - 1) * d + (j - 1)] = 1;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best;
    do {
      // perm[i] = original element placed at position i; keep only natural
      // (upper-triangular) relabelings.
      std::vector<std::uint8_t> cand(d * d, 0);
      bool natural = true;
      for (int i = 0; i < d && natural; ++i)
        for (int j = 0; j < d; ++j)
          if (lt[perm[i] * d + perm[j]]) {
            if (j < i) {
              natural = false;
              break;
            }
            cand[i * d + j] = 1;
          }
      if (natural && (best.empty() || cand < best)) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(std::move(best));
  }
  std::vector<Poset> out;
  for (const auto& lt : canon) out.push_back(Poset::from_strict_matrix(d, lt));
  return out;
}

}  // namespace posetfano::catalog
