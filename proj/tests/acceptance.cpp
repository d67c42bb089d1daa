// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion quantifies over canonical naturally labeled
// representatives (one per isomorphism class) unless stated otherwise;
// claims that hold without a common linear extension additionally get an
// adversarially mislabeled pair.

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "posetfano/catalog.hpp"
#include "posetfano/constructions.hpp"
#include "posetfano/ehrhart.hpp"
#include "posetfano/reflexive.hpp"
#include "posetfano/toric.hpp"

using namespace posetfano;

namespace {

std::vector<std::pair<Poset, Poset>> representative_pairs(int d_max) {
  std::vector<std::pair<Poset, Poset>> out;
  for (int d = 1; d <= d_max; ++d) {
    auto reps = catalog::unlabeled_posets(d);
    for (const Poset& p : reps)
      for (const Poset& q : reps) out.push_back({p, q});
  }
  return out;
}

std::pair<Poset, Poset> mislabeled_pair() {
  return {Poset::from_cover_relations(2, {{1, 2}}),
          Poset::from_cover_relations(2, {{2, 1}})};
}

// 1. All three Omega pairings are reflexive and normal, d <= 4.
bool criterion1() {
  auto pairs = representative_pairs(4);
  pairs.push_back(mislabeled_pair());
  for (const auto& [p, q] : pairs) {
    bool common = p.has_common_linear_extension(q);
    for (PairKind kind :
         {PairKind::OmegaOO, PairKind::OmegaOC, PairKind::OmegaCC}) {
      if (kind == PairKind::OmegaOO && !common) continue;
      LatticePolytope om = build_pair(kind, p, q);
      if (!is_reflexive(om)) return false;
      if (!is_normal(om).normal) return false;
    }
  }
  return true;
}

// 2. The six Omega/Gamma polytopes share one Ehrhart polynomial, d <= 4.
bool criterion2() {
  for (const auto& [p, q] : representative_pairs(4)) {
    if (!p.has_common_linear_extension(q)) continue;
    Poset pb = p.adjoin_bottom(), qb = q.adjoin_bottom();
    std::vector<LatticePolytope> six = {
        build_pair(PairKind::OmegaOO, p, q),
        build_pair(PairKind::OmegaOC, p, q),
        build_pair(PairKind::OmegaCC, p, q),
        build_pair(PairKind::GammaOO, pb, qb),
        build_pair(PairKind::GammaOC, pb, qb),
        build_pair(PairKind::GammaCC, pb, qb)};
    if (!ehrhart_equal(six).equal) return false;
  }
  return true;
}

// 3. Linear-extension volume formula equals the Ehrhart leading
// coefficient of Omega(O_P, C_Q), d <= 4.
bool criterion3() {
  Poset a2 = Poset::from_cover_relations(2, {});
  if (volume_omega_formula(a2, a2) != 2) return false;
  for (const auto& [p, q] : representative_pairs(4)) {
    if (!p.has_common_linear_extension(q)) continue;
    if (volume_omega_formula(p, q) !=
        volume(build_pair(PairKind::OmegaOC, p, q)))
      return false;
  }
  return true;
}

std::vector<std::pair<Poset, Poset>> labeled_pairs(int d_max) {
  std::vector<std::pair<Poset, Poset>> out;
  for (int d = 1; d <= d_max; ++d) {
    auto all = catalog::all_labeled_posets(d);
    for (const Poset& p : all)
      for (const Poset& q : all) out.push_back({p, q});
  }
  return out;
}

// 4. Binomial bases verify: S-pairs, squarefree initial ideals, Hilbert
// match, injectivity (n <= 4) for all labeled pairs with d <= 3.
bool criterion4() {
  for (const auto& [p, q] : labeled_pairs(3)) {
    std::vector<Family> families = {Family::OC, Family::CC};
    if (p.has_common_linear_extension(q)) families.push_back(Family::OO);
    for (Family f : families) {
      BinomialSystem s(f, p, q);
      if (!s.spair_reduce_verify()) return false;
      if (!is_squarefree(s.initial_ideal())) return false;
      if (!s.hilbert_match(4)) return false;
      if (!s.injectivity_check(4)) return false;
    }
  }
  return true;
}

// 5. Degreewise standard-monomial counts of the three quotients agree
// (n <= 4); OC vs CC agree for every labeled pair with d <= 3.
bool criterion5() {
  for (const auto& [p, q] : labeled_pairs(3)) {
    RingIsomorphismReport rep = rings_isomorphism_check(p, q, 4);
    if (!rep.counts_agree) return false;
    if (!rep.oc_cc_initial_ideals_match) return false;
    if (rep.oo_available != p.has_common_linear_extension(q)) return false;
  }
  return true;
}

// 6. Census of reflexive polygons: 16 classes, histogram (1,3,2,4,2,3,1).
bool criterion6() {
  auto classes = classify_reflexive_2d();
  if (classes.size() != 16) return false;
  std::map<int, int> histogram;
  for (const auto& c : classes) {
    ++histogram[c.boundary_points];
    if (!is_reflexive(c.representative)) return false;
    if (!c.normal) return false;
  }
  if (histogram != std::map<int, int>{{3, 1}, {4, 3}, {5, 2}, {6, 4},
                                      {7, 2}, {8, 3}, {9, 1}})
    return false;
  for (size_t a = 0; a < classes.size(); ++a)
    for (size_t b = a + 1; b < classes.size(); ++b)
      if (unimodular_equivalent(classes[a].representative,
                                classes[b].representative))
        return false;
  return true;
}

// 7. Simplex Ehrhart formula for d = 2, 3, 4.
bool criterion7() {
  for (int d = 2; d <= 4; ++d) {
    EhrhartPolynomial e =
        ehrhart_polynomial(catalog::standard_reflexive_simplex(d));
    for (int n = 0; n <= d; ++n) {  // degree-d polynomials; d+1 nodes decide
      Int expect = 0;
      for (int i = 0; i <= d; ++i) expect += binomial(Int(n + d - i), d);
      if (e.evaluate(n) != Rat(expect)) return false;
    }
  }
  return true;
}

// 8. The 15-vertex fixture is normal; its Omega self-pairing is reflexive
// but not normal, with a re-checkable witness.
bool criterion8() {
  LatticePolytope p9 = catalog::p9_polytope();
  if (!is_normal(p9).normal) return false;
  LatticePolytope om = omega(p9, p9);
  if (!is_reflexive(om)) return false;
  NormalityOptions shallow;
  shallow.max_level = 3;
  NormalityCertificate cert = is_normal(om, shallow);
  if (cert.normal) {
    NormalityOptions deep;
    deep.max_level = 9;
    cert = is_normal(om, deep);
  }
  if (cert.normal) return false;
  if (!cert.witness) return false;
  std::printf("    witness level: %d\n", cert.witness_level);
  return recheck_witness(om, cert);
}

// 9. Eleven 7-dimensional polytopes share one Ehrhart polynomial; report
// pairwise invariant evidence of non-equivalence.
bool criterion9() {
  auto family = catalog::equi_ehrhart_family();
  if (family.size() != 11) return false;
  if (!ehrhart_equal(family).equal) return false;
  std::vector<FVector> fs;
  for (const auto& p : family) fs.push_back(p.f_vector());
  int separated = 0, unresolved = 0;
  for (size_t a = 0; a < family.size(); ++a)
    for (size_t b = a + 1; b < family.size(); ++b) {
      if (!(fs[a] == fs[b]))
        ++separated;
      else
        ++unresolved;
    }
  std::printf(
      "    pairs separated by f-vector: %d; not certified non-equivalent: "
      "%d\n",
      separated, unresolved);
  return true;
}

// 10. Poset-layer brute-force oracles, d <= 6.
bool criterion10() {
  for (int d = 1; d <= 6; ++d)
    for (const Poset& p : catalog::all_posets(d)) {
      if (p.linear_extension_count() != oracles::linear_extensions_brute(p))
        return false;
      auto ideals = p.ideals();
      auto brute_i = oracles::ideals_brute(p);
      std::sort(brute_i.begin(), brute_i.end(), canonical_set_less);
      if (ideals != brute_i) return false;
      auto anti = p.antichains();
      auto brute_a = oracles::antichains_brute(p);
      std::sort(brute_a.begin(), brute_a.end(), canonical_set_less);
      if (anti != brute_a) return false;
    }
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)();
  };
  const Criterion criteria[] = {
      {"omega polytopes reflexive and normal (d<=4)", criterion1},
      {"six-way Ehrhart equality (d<=4)", criterion2},
      {"volume formula vs Ehrhart leading coefficient (d<=4)", criterion3},
      {"binomial basis verification (d<=3, n<=4)", criterion4},
      {"quotient ring count agreement (d<=3, n<=4)", criterion5},
      {"reflexive polygon census: 16 classes", criterion6},
      {"simplex Ehrhart formula (d=2,3,4)", criterion7},
      {"non-normal omega pairing with re-checkable witness", criterion8},
      {"eleven equi-Ehrhart 7-polytopes", criterion9},
      {"poset-layer brute-force oracles (d<=6)", criterion10},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    const char* note = "";
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      note = e.what();
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    std::printf("CRITERION %2d: %s  (%.1fs)  %s%s%s\n", index,
                ok ? "PASS" : "FAIL", secs, c.name, *note ? " -- " : "", note);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  return failures;
}
