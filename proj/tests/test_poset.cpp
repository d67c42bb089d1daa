#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "posetfano/catalog.hpp"
#include "posetfano/poset.hpp"

using namespace posetfano;

namespace {

Poset chain(int d) {
  std::vector<std::pair<int, int>> covers;
  for (int i = 1; i < d; ++i) covers.push_back({i, i + 1});
  return Poset::from_cover_relations(d, covers);
}

Poset antichain(int d) { return Poset::from_cover_relations(d, {}); }

Poset vee() { return Poset::from_cover_relations(3, {{1, 3}, {2, 3}}); }

IndexSet set(std::initializer_list<int> els) {
  IndexSet s;
  for (int e : els) s = s.with(e);
  return s;
}

}  // namespace

TEST_CASE("construction and closure") {
  Poset c2 = chain(2);
  CHECK(c2.less(1, 2));
  CHECK(!c2.less(2, 1));
  CHECK(c2.leq(1, 1));

  Poset v = vee();
  CHECK(v.less(1, 3));
  CHECK(v.less(2, 3));
  CHECK(!v.comparable(1, 2));

  // Transitivity through a chain of covers.
  Poset c3 = chain(3);
  CHECK(c3.less(1, 3));

  CHECK_THROWS_AS(Poset::from_cover_relations(2, {{1, 2}, {2, 1}}),
                  CycleDetected);
  CHECK_THROWS_AS(Poset::from_cover_relations(3, {{1, 2}, {2, 3}, {3, 1}}),
                  CycleDetected);
}

TEST_CASE("ideals and antichains: examples") {
  CHECK(chain(2).ideals() ==
        std::vector<IndexSet>{set({}), set({1}), set({1, 2})});
  CHECK(antichain(2).ideals().size() == 4);
  CHECK(vee().ideals() == std::vector<IndexSet>{set({}), set({1}), set({2}),
                                                set({1, 2}), set({1, 2, 3})});

  CHECK(chain(2).antichains() ==
        std::vector<IndexSet>{set({}), set({1}), set({2})});
  CHECK(antichain(2).antichains().size() == 4);
  CHECK(vee().antichains() == std::vector<IndexSet>{set({}), set({1}),
                                                    set({2}), set({3}),
                                                    set({1, 2})});
}

TEST_CASE("ideals and antichains against subset brute force, d <= 5") {
  for (int d = 1; d <= 5; ++d) {
    for (const Poset& p : catalog::all_posets(d)) {
      auto ideals = p.ideals();
      auto brute = oracles::ideals_brute(p);
      std::sort(brute.begin(), brute.end(), canonical_set_less);
      CHECK(ideals == brute);

      auto anti = p.antichains();
      auto brute_a = oracles::antichains_brute(p);
      std::sort(brute_a.begin(), brute_a.end(), canonical_set_less);
      CHECK(anti == brute_a);

      // The lattice property and the max bijection.
      CHECK(ideals.size() == anti.size());
      std::set<std::uint32_t> ideal_bits, max_bits;
      for (IndexSet i : ideals) ideal_bits.insert(i.bits);
      for (IndexSet i : ideals) {
        max_bits.insert(p.max_elements(i).bits);
        for (IndexSet j : ideals) {
          CHECK(ideal_bits.count((i | j).bits));
          CHECK(ideal_bits.count((i & j).bits));
        }
      }
      std::set<std::uint32_t> anti_bits;
      for (IndexSet a : anti) anti_bits.insert(a.bits);
      CHECK(max_bits == anti_bits);
    }
  }
}

TEST_CASE("max_elements examples and errors") {
  CHECK(chain(2).max_elements(set({1, 2})) == set({2}));
  CHECK(antichain(2).max_elements(set({1, 2})) == set({1, 2}));
  CHECK(vee().max_elements(set({1, 2, 3})) == set({3}));
  CHECK_THROWS_AS(chain(2).max_elements(set({2})), NotAnIdeal);
}

TEST_CASE("ideal_star") {
  CHECK(antichain(2).ideal_star(set({1}), set({2})) == set({}));
  Poset p = Poset::from_cover_relations(4, {{1, 3}, {2, 4}});
  CHECK(p.ideal_star(set({1, 2, 3}), set({1, 2, 4})) == set({1, 2}));
  // Comparable ideals: result contained in the smaller ideal.
  for (int d = 1; d <= 4; ++d)
    for (const Poset& q : catalog::all_posets(d))
      for (IndexSet i : q.ideals())
        for (IndexSet j : q.ideals())
          if (i.subset_of(j)) CHECK(q.ideal_star(i, j).subset_of(i));
}

TEST_CASE("linear extension count examples") {
  CHECK(chain(5).linear_extension_count() == 1);
  CHECK(antichain(3).linear_extension_count() == 6);
  CHECK(vee().linear_extension_count() == 2);
  CHECK(catalog::six_element_poset().linear_extension_count() == 8);
}

TEST_CASE("linear extension count against permutation brute force, d <= 5") {
  for (int d = 1; d <= 5; ++d)
    for (const Poset& p : catalog::all_posets(d))
      CHECK(p.linear_extension_count() == oracles::linear_extensions_brute(p));
}

TEST_CASE("common linear extension") {
  Poset p = chain(2);
  Poset q_rev = Poset::from_cover_relations(2, {{2, 1}});
  CHECK(p.has_common_linear_extension(p));
  CHECK(!p.has_common_linear_extension(q_rev));
  CHECK(p.has_common_linear_extension(antichain(2)));
  CHECK_THROWS_AS(p.has_common_linear_extension(antichain(3)),
                  DimensionMismatch);

  for (int d = 2; d <= 4; ++d) {
    auto all = catalog::all_labeled_posets(d);
    for (const Poset& a : all)
      for (const Poset& b : all)
        CHECK(a.has_common_linear_extension(b) ==
              oracles::common_extension_brute(a, b));
  }
}

TEST_CASE("ordinal sum and adjoin_bottom") {
  Poset two = Poset::from_cover_relations(1, {}).ordinal_sum(
      Poset::from_cover_relations(1, {}));
  CHECK(two == chain(2));

  Poset s = antichain(2).ordinal_sum(Poset::from_cover_relations(1, {}));
  CHECK(s.less(1, 3));
  CHECK(s.less(2, 3));
  CHECK(!s.comparable(1, 2));

  CHECK(antichain(2).ordinal_sum(antichain(2)).linear_extension_count() == 4);

  // The adjoined bottom gets the fresh label d+1.
  Poset single = Poset::from_cover_relations(1, {});
  Poset single_b = single.adjoin_bottom();
  CHECK(single_b.size() == 2);
  CHECK(single_b.less(2, 1));
  CHECK(single_b.linear_extension_count() == 1);

  Poset vb = antichain(2).adjoin_bottom();
  CHECK(vb.size() == 3);
  CHECK(vb.less(3, 1));
  CHECK(vb.less(3, 2));
  CHECK(vb.linear_extension_count() == 2);
  CHECK(vee().adjoin_bottom().ideals().size() == 6);

  // ideals(P') = {empty} plus bottom-extended ideals of P.
  for (int d = 1; d <= 4; ++d)
    for (const Poset& p : catalog::all_posets(d)) {
      Poset pb = p.adjoin_bottom();
      std::set<std::uint32_t> got;
      for (IndexSet i : pb.ideals()) got.insert(i.bits);
      std::set<std::uint32_t> expect{0};
      for (IndexSet i : p.ideals()) expect.insert(i.with(d + 1).bits);
      CHECK(got == expect);
    }

  // e multiplies across ordinal sums.
  for (int da = 1; da <= 3; ++da)
    for (int db = 1; db + da <= 6 && db <= 3; ++db)
      for (const Poset& a : catalog::all_posets(da))
        for (const Poset& b : catalog::all_posets(db))
          CHECK(a.ordinal_sum(b).linear_extension_count() ==
                a.linear_extension_count() * b.linear_extension_count());
}

TEST_CASE("induced subposets and delta_W") {
  Poset v = vee();
  CHECK(v.induced_subposet(IndexSet::full(3)) == v);
  CHECK(chain(2).induced_subposet(set({2})).size() == 1);
  CHECK(v.induced_subposet(set({1, 2})) == antichain(2));

  Poset c2 = chain(2);
  CHECK(Poset::delta_w(c2, c2, set({})) == c2);
  CHECK(Poset::delta_w(c2, c2, IndexSet::full(2)) == c2);
  CHECK(Poset::delta_w(c2, c2, set({1})) == chain(2));

  // A(delta_W) = A(P_W) union A(Q_complement) after relabeling, checked via
  // the antichain count identity |A| = |A(P_W)| + |A(Q_Wc)| - 1.
  for (int d = 2; d <= 4; ++d)
    for (const Poset& p : catalog::all_posets(d))
      for (const Poset& q : catalog::all_posets(d))
        for (std::uint32_t w = 1; w < IndexSet::full(d).bits; ++w) {
          // Proper nonempty W; the empty/full cases are the identity maps
          // checked above.
          IndexSet ws(w);
          IndexSet wc(IndexSet::full(d).bits & ~w);
          size_t lhs = Poset::delta_w(p, q, ws).antichains().size();
          size_t rhs = p.induced_subposet(ws).antichains().size() +
                       q.induced_subposet(wc).antichains().size() - 1;
          CHECK(lhs == rhs);
        }
}

TEST_CASE("canonical set order") {
  CHECK(canonical_set_less(set({}), set({1})));
  CHECK(canonical_set_less(set({1}), set({2})));
  CHECK(canonical_set_less(set({2}), set({1, 2})));
  CHECK(canonical_set_less(set({1, 3}), set({2, 3})));
  CHECK(!canonical_set_less(set({1}), set({1})));
}
