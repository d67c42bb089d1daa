#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "posetfano/errors.hpp"
#include "posetfano/numbers.hpp"

namespace posetfano {

// Subset of the ground set {1,...,d}, d <= 32.
struct IndexSet {
  std::uint32_t bits = 0;

  IndexSet() = default;
  explicit IndexSet(std::uint32_t b) : bits(b) {}

  static IndexSet full(int d) {
    return IndexSet(d == 32 ? ~0u : ((1u << d) - 1u));
  }

  bool contains(int i) const { return (bits >> (i - 1)) & 1u; }
  IndexSet with(int i) const { return IndexSet(bits | (1u << (i - 1))); }
  IndexSet without(int i) const { return IndexSet(bits & ~(1u << (i - 1))); }
  int size() const { return __builtin_popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(IndexSet o) const { return (bits & ~o.bits) == 0; }

  friend IndexSet operator|(IndexSet a, IndexSet b) {
    return IndexSet(a.bits | b.bits);
  }
  friend IndexSet operator&(IndexSet a, IndexSet b) {
    return IndexSet(a.bits & b.bits);
  }
  friend bool operator==(IndexSet a, IndexSet b) { return a.bits == b.bits; }
  friend bool operator!=(IndexSet a, IndexSet b) { return a.bits != b.bits; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t m = bits; m; m &= m - 1)
      out.push_back(__builtin_ctz(m) + 1);
    return out;
  }
};

// Canonical enumeration order: by cardinality, then lexicographic on the
// characteristic vector (element 1 first).
bool canonical_set_less(IndexSet a, IndexSet b);

// Finite poset on {1,...,d}, stored transitively closed.
class Poset {
 public:
  // Throws CycleDetected if the closure of the covers violates antisymmetry.
  static Poset from_cover_relations(
      int d, const std::vector<std::pair<int, int>>& covers);

  // Builds directly from a strict-order matrix; used by generators that
  // already hold a closed relation.  Validates closure and antisymmetry.
  static Poset from_strict_matrix(int d, const std::vector<std::uint8_t>& lt);

  int size() const { return d_; }

  // 1-based comparisons.
  bool less(int i, int j) const { return lt_[idx(i, j)] != 0; }
  bool leq(int i, int j) const { return i == j || less(i, j); }
  bool comparable(int i, int j) const {
    return i == j || less(i, j) || less(j, i);
  }

  bool is_ideal(IndexSet s) const;
  bool is_antichain(IndexSet s) const;

  std::vector<IndexSet> ideals() const;
  std::vector<IndexSet> antichains() const;

  // max(I); throws NotAnIdeal.
  IndexSet max_elements(IndexSet ideal) const;

  // Poset ideal generated by max(I cap I') cap (max(I) cup max(I')).
  IndexSet ideal_star(IndexSet a, IndexSet b) const;

  IndexSet ideal_generated_by(IndexSet s) const;

  // e(P): number of linear extensions, by DP over the ideal lattice.
  Int linear_extension_count() const;

  bool has_common_linear_extension(const Poset& other) const;

  Poset ordinal_sum(const Poset& upper) const;
  Poset adjoin_bottom() const;

  // Induced subposet on W, relabeled 1..|W|; retained_labels()[k-1] is the
  // original label of element k.
  Poset induced_subposet(IndexSet w) const;
  const std::vector<int>& retained_labels() const { return labels_; }

  // P_W (+) Q_{complement of W}.
  static Poset delta_w(const Poset& p, const Poset& q, IndexSet w);

  std::vector<std::pair<int, int>> cover_relations() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.d_ == b.d_ && a.lt_ == b.lt_;
  }

 private:
  Poset(int d, std::vector<std::uint8_t> lt, std::vector<int> labels);
  int idx(int i, int j) const { return (i - 1) * d_ + (j - 1); }

  int d_ = 0;
  std::vector<std::uint8_t> lt_;  // strict order, transitively closed
  std::vector<int> labels_;       // original labels (identity by default)
};

}  // namespace posetfano
