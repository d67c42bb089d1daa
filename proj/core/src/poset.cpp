#include "posetfano/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace posetfano {

bool canonical_set_less(IndexSet a, IndexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Lexicographic on the characteristic vector, element 1 most significant.
  // Reversing the bit pattern would be equivalent; compare element by element.
  std::uint32_t diff = a.bits ^ b.bits;
  if (diff == 0) return false;
  int lowest = __builtin_ctz(diff);
  // Element lowest+1 is the first coordinate where they differ; the set that
  // contains it is lexicographically larger (charvec 1 > 0)?  We sort with
  // 1-before-0 so {1} < {2}: the set containing the smaller element first.
  return a.contains(lowest + 1);
}

Poset::Poset(int d, std::vector<std::uint8_t> lt, std::vector<int> labels)
    : d_(d), lt_(std::move(lt)), labels_(std::move(labels)) {}

Poset Poset::from_cover_relations(
    int d, const std::vector<std::pair<int, int>>& covers) {
  if (d < 1 || d > 32) throw Error("poset size must be in 1..32");
  std::vector<std::uint8_t> lt(d * d, 0);
  for (auto [i, j] : covers) {
    if (i < 1 || i > d || j < 1 || j > d)
      throw Error("cover relation index out of range");
    if (i == j) throw CycleDetected("cover relation relates an element to itself");
    lt[(i - 1) * d + (j - 1)] = 1;
  }
  // Warshall closure.
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < d; ++i)
      if (lt[i * d + k])
        for (int j = 0; j < d; ++j)
          if (lt[k * d + j]) lt[i * d + j] = 1;
  for (int i = 0; i < d; ++i)
    if (lt[i * d + i])
      throw CycleDetected("transitive closure violates antisymmetry");
  std::vector<int> labels(d);
  std::iota(labels.begin(), labels.end(), 1);
  return Poset(d, std::move(lt), std::move(labels));
}

Poset Poset::from_strict_matrix(int d, const std::vector<std::uint8_t>& lt) {
  if ((int)lt.size() != d * d) throw Error("bad strict-order matrix size");
  for (int i = 0; i < d; ++i) {
    if (lt[i * d + i]) throw CycleDetected("strict order has a loop");
    for (int j = 0; j < d; ++j) {
      if (lt[i * d + j] && lt[j * d + i])
        throw CycleDetected("strict order violates antisymmetry");
      if (lt[i * d + j])
        for (int k = 0; k < d; ++k)
          if (lt[j * d + k] && !lt[i * d + k])
            throw Error("strict order is not transitively closed");
    }
  }
  std::vector<int> labels(d);
  std::iota(labels.begin(), labels.end(), 1);
  return Poset(d, lt, std::move(labels));
}

bool Poset::is_ideal(IndexSet s) const {
  for (int i = 1; i <= d_; ++i)
    if (s.contains(i))
      for (int j = 1; j <= d_; ++j)
        if (less(j, i) && !s.contains(j)) return false;
  return true;
}

bool Poset::is_antichain(IndexSet s) const {
  auto el = s.elements();
  for (size_t a = 0; a < el.size(); ++a)
    for (size_t b = a + 1; b < el.size(); ++b)
      if (comparable(el[a], el[b])) return false;
  return true;
}

std::vector<IndexSet> Poset::ideals() const {
  // Precompute, per element, the set of elements strictly below it.
  std::vector<std::uint32_t> below(d_, 0);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j)
      if (less(j, i)) below[i - 1] |= 1u << (j - 1);
  std::vector<IndexSet> out;
  std::uint32_t full = IndexSet::full(d_).bits;
  for (std::uint32_t m = 0;; ++m) {
    bool ok = true;
    for (std::uint32_t t = m; t; t &= t - 1) {
      int i = __builtin_ctz(t);
      if ((below[i] & ~m) != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(IndexSet(m));
    if (m == full) break;
  }
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

std::vector<IndexSet> Poset::antichains() const {
  std::vector<IndexSet> out;
  std::uint32_t full = IndexSet::full(d_).bits;
  for (std::uint32_t m = 0;; ++m) {
    if (is_antichain(IndexSet(m))) out.push_back(IndexSet(m));
    if (m == full) break;
  }
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

IndexSet Poset::max_elements(IndexSet ideal) const {
  if (!is_ideal(ideal)) throw NotAnIdeal("max_elements: not a poset ideal");
  IndexSet out;
  for (int i = 1; i <= d_; ++i) {
    if (!ideal.contains(i)) continue;
    bool maximal = true;
    for (int j = 1; j <= d_; ++j)
      if (ideal.contains(j) && less(i, j)) {
        maximal = false;
        break;
      }
    if (maximal) out = out.with(i);
  }
  return out;
}

IndexSet Poset::ideal_generated_by(IndexSet s) const {
  IndexSet out = s;
  for (int i = 1; i <= d_; ++i)
    if (s.contains(i))
      for (int j = 1; j <= d_; ++j)
        if (less(j, i)) out = out.with(j);
  return out;
}

IndexSet Poset::ideal_star(IndexSet a, IndexSet b) const {
  if (!is_ideal(a) || !is_ideal(b)) throw NotAnIdeal("ideal_star: not ideals");
  IndexSet gen = max_elements(a & b) & (max_elements(a) | max_elements(b));
  return ideal_generated_by(gen);
}

Int Poset::linear_extension_count() const {
  // Number of maximal chains of the ideal lattice, bottom to top.
  std::vector<std::uint32_t> below(d_, 0);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j)
      if (less(j, i)) below[i - 1] |= 1u << (j - 1);
  std::uint32_t full = IndexSet::full(d_).bits;
  std::unordered_map<std::uint32_t, Int> count;
  count.reserve(1u << std::min(d_, 20));
  count[0] = 1;
  // Process ideal masks in increasing popcount order by iterating all masks
  // ascending; a mask's sub-ideals are numerically smaller.
  for (std::uint32_t m = 1;; ++m) {
    bool ideal = true;
    for (std::uint32_t t = m; t; t &= t - 1) {
      int i = __builtin_ctz(t);
      if ((below[i] & ~m) != 0) {
        ideal = false;
        break;
      }
    }
    if (ideal) {
      Int total = 0;
      for (std::uint32_t t = m; t; t &= t - 1) {
        int i = __builtin_ctz(t);
        std::uint32_t without = m & ~(1u << i);
        // i must be maximal in m for m\{i} to be an ideal.
        bool maximal = true;
        for (std::uint32_t u = m; u; u &= u - 1) {
          int j = __builtin_ctz(u);
          if (below[j] & (1u << i)) {
            maximal = false;
            break;
          }
        }
        if (maximal) total += count[without];
      }
      count[m] = std::move(total);
    }
    if (m == full) break;
  }
  return count[full];
}

bool Poset::has_common_linear_extension(const Poset& other) const {
  if (d_ != other.d_)
    throw DimensionMismatch("posets have different ground-set sizes");
  // Union of the two strict orders must be acyclic.
  std::vector<std::uint8_t> rel(d_ * d_, 0);
  for (int i = 0; i < d_ * d_; ++i) rel[i] = lt_[i] | other.lt_[i];
  for (int k = 0; k < d_; ++k)
    for (int i = 0; i < d_; ++i)
      if (rel[i * d_ + k])
        for (int j = 0; j < d_; ++j)
          if (rel[k * d_ + j]) rel[i * d_ + j] = 1;
  for (int i = 0; i < d_; ++i)
    if (rel[i * d_ + i]) return false;
  return true;
}

Poset Poset::ordinal_sum(const Poset& upper) const {
  int n = d_ + upper.d_;
  if (n > 32) throw Error("ordinal sum exceeds supported size");
  std::vector<std::uint8_t> lt(n * n, 0);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j)
      if (less(i, j)) lt[(i - 1) * n + (j - 1)] = 1;
  for (int i = 1; i <= upper.d_; ++i)
    for (int j = 1; j <= upper.d_; ++j)
      if (upper.less(i, j)) lt[(d_ + i - 1) * n + (d_ + j - 1)] = 1;
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= upper.d_; ++j) lt[(i - 1) * n + (d_ + j - 1)] = 1;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return Poset(n, std::move(lt), std::move(labels));
}

Poset Poset::adjoin_bottom() const {
  // New element gets label d+1, strictly below everything.
  int n = d_ + 1;
  if (n > 32) throw Error("adjoin_bottom exceeds supported size");
  std::vector<std::uint8_t> lt(n * n, 0);
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j)
      if (less(i, j)) lt[(i - 1) * n + (j - 1)] = 1;
  for (int j = 1; j <= d_; ++j) lt[(n - 1) * n + (j - 1)] = 1;
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  return Poset(n, std::move(lt), std::move(labels));
}

Poset Poset::induced_subposet(IndexSet w) const {
  auto el = w.elements();
  int n = (int)el.size();
  if (n == 0) throw Error("induced subposet on empty set");
  std::vector<std::uint8_t> lt(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (less(el[a], el[b])) lt[a * n + b] = 1;
  std::vector<int> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = labels_[el[a] - 1];
  return Poset(n, std::move(lt), std::move(labels));
}

Poset Poset::delta_w(const Poset& p, const Poset& q, IndexSet w) {
  if (p.size() != q.size())
    throw DimensionMismatch("delta_w: posets have different sizes");
  IndexSet wc(IndexSet::full(p.size()).bits & ~w.bits);
  if (w.empty()) return q;
  if (wc.empty()) return p;
  return p.induced_subposet(w).ordinal_sum(q.induced_subposet(wc));
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= d_; ++i)
    for (int j = 1; j <= d_; ++j) {
      if (!less(i, j)) continue;
      bool cover = true;
      for (int k = 1; k <= d_; ++k)
        if (less(i, k) && less(k, j)) {
          cover = false;
          break;
        }
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

}  // namespace posetfano
