#include "posetfano/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace posetfano {

std::string family_name(Family f) {
  switch (f) {
    case Family::OO: return "oo";
    case Family::OC: return "oc";
    case Family::CC: return "cc";
  }
  return "?";
}

namespace {

int degree_of(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0);
}

Monomial quotient_times(const Monomial& num, const Monomial& den,
                        const Monomial& mul) {
  Monomial out(num.size());
  for (size_t i = 0; i < num.size(); ++i) out[i] = num[i] - den[i] + mul[i];
  return out;
}

}  // namespace

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

BinomialSystem::BinomialSystem(Family family, const Poset& p, const Poset& q)
    : family_(family), p_(p), q_(q) {
  if (p.size() != q.size())
    throw DimensionMismatch("binomial system: poset sizes differ");
  ideals_p_ = p_.ideals();
  ideals_q_ = q_.ideals();
  nvars_ = 1 + (int)ideals_p_.size() + (int)ideals_q_.size();

  const int d = p_.size();
  pi_.assign(nvars_, std::vector<Coord>(d + 2, 0));
  pi_[0][d + 1] = 1;  // z maps to s
  for (size_t j = 0; j < ideals_q_.size(); ++j) {
    IndexSet support = family_ == Family::OO
                           ? ideals_q_[j]
                           : q_.max_elements(ideals_q_[j]);
    auto& img = pi_[y_var(j)];
    for (int i : support.elements()) img[i - 1] = -1;
    img[d] = -1;
    img[d + 1] = 1;
  }
  for (size_t i = 0; i < ideals_p_.size(); ++i) {
    IndexSet support = family_ == Family::CC
                           ? p_.max_elements(ideals_p_[i])
                           : ideals_p_[i];
    auto& img = pi_[x_var(i)];
    for (int e : support.elements()) img[e - 1] = 1;
    img[d] = 1;
    img[d + 1] = 1;
  }
  build_generators();
}

std::vector<Coord> BinomialSystem::pi_eval(const Monomial& mono) const {
  std::vector<Coord> out(pi_[0].size(), 0);
  for (int v = 0; v < nvars_; ++v) {
    if (!mono[v]) continue;
    for (size_t c = 0; c < out.size(); ++c) out[c] += (Coord)mono[v] * pi_[v][c];
  }
  return out;
}

bool BinomialSystem::monomial_less(const Monomial& a, const Monomial& b) const {
  int da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  // Reverse lexicographic: at the smallest variable where they differ, the
  // monomial with the larger exponent is the smaller monomial.
  for (int v = 0; v < nvars_; ++v)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

void BinomialSystem::append_checked(Monomial first, Monomial second) {
  if (first == second)
    throw Error("generator with equal monomials");
  if (pi_eval(first) != pi_eval(second))
    throw Error("generator is not pi-balanced");
  if (monomial_less(first, second))
    throw Error("generator's first monomial is not its initial monomial");
  gens_.push_back(Binomial{std::move(first), std::move(second)});
}

void BinomialSystem::build_generators() {
  std::map<IndexSet, size_t, decltype([](IndexSet a, IndexSet b) {
             return a.bits < b.bits;
           })>
      index_p, index_q;
  for (size_t i = 0; i < ideals_p_.size(); ++i) index_p[ideals_p_[i]] = i;
  for (size_t j = 0; j < ideals_q_.size(); ++j) index_q[ideals_q_[j]] = j;

  auto mono = [&](std::initializer_list<int> vars) {
    Monomial m(nvars_, 0);
    for (int v : vars) m[v] += 1;
    return m;
  };

  // Pairs of incomparable ideals of P.
  for (size_t a = 0; a < ideals_p_.size(); ++a) {
    for (size_t b = a + 1; b < ideals_p_.size(); ++b) {
      IndexSet i = ideals_p_[a], i2 = ideals_p_[b];
      if (i.subset_of(i2) || i2.subset_of(i)) continue;
      size_t u = index_p.at(i | i2);
      size_t v = family_ == Family::CC ? index_p.at(p_.ideal_star(i, i2))
                                       : index_p.at(i & i2);
      append_checked(mono({x_var(a), x_var(b)}), mono({x_var(u), x_var(v)}));
    }
  }
  // Pairs of incomparable ideals of Q.
  for (size_t a = 0; a < ideals_q_.size(); ++a) {
    for (size_t b = a + 1; b < ideals_q_.size(); ++b) {
      IndexSet j = ideals_q_[a], j2 = ideals_q_[b];
      if (j.subset_of(j2) || j2.subset_of(j)) continue;
      size_t u = index_q.at(j | j2);
      size_t v = family_ == Family::OO ? index_q.at(j & j2)
                                       : index_q.at(q_.ideal_star(j, j2));
      append_checked(mono({y_var(a), y_var(b)}), mono({y_var(u), y_var(v)}));
    }
  }
  // Mixed generators over (I, J, i) with p_i maximal in I, q_i maximal in J.
  for (size_t a = 0; a < ideals_p_.size(); ++a) {
    IndexSet i = ideals_p_[a];
    IndexSet maxi = p_.max_elements(i);
    for (size_t b = 0; b < ideals_q_.size(); ++b) {
      IndexSet j = ideals_q_[b];
      IndexSet maxj = q_.max_elements(j);
      for (int e : (maxi & maxj).elements()) {
        size_t u, v;
        if (family_ == Family::OO || family_ == Family::OC)
          u = index_p.at(i.without(e));
        else
          u = index_p.at(p_.ideal_generated_by(maxi.without(e)));
        if (family_ == Family::OO)
          v = index_q.at(j.without(e));
        else
          v = index_q.at(q_.ideal_generated_by(maxj.without(e)));
        append_checked(mono({x_var(a), y_var(b)}),
                       mono({x_var(u), y_var(v)}));
      }
    }
  }
  // x_empty * y_empty - z^2.
  append_checked(mono({x_var(index_p.at(IndexSet())),
                       y_var(index_q.at(IndexSet()))}),
                 mono({z_var(), z_var()}));

  std::sort(gens_.begin(), gens_.end(), [](const Binomial& a, const Binomial& b) {
    return std::tie(a.lead, a.tail) < std::tie(b.lead, b.tail);
  });
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

namespace {

// Reduces the binomial (hi, lo) modulo gens; returns true iff it reaches 0.
bool reduces_to_zero(Monomial hi, Monomial lo,
                     const std::vector<Binomial>& gens,
                     const std::function<bool(const Monomial&, const Monomial&)>& less) {
  if (hi == lo) return true;
  if (less(hi, lo)) std::swap(hi, lo);
  for (;;) {
    bool reduced = false;
    for (const Binomial& g : gens) {
      if (!monomial_divides(g.lead, hi)) continue;
      hi = quotient_times(hi, g.lead, g.tail);
      if (hi == lo) return true;
      if (less(hi, lo)) std::swap(hi, lo);
      reduced = true;
      break;
    }
    if (!reduced) return false;  // the leading monomial survives
  }
}

}  // namespace

bool spair_reduce_verify(
    const std::vector<Binomial>& gens,
    const std::function<bool(const Monomial&, const Monomial&)>& less,
    long long max_pairs) {
  long long seen = 0;
  for (size_t a = 0; a < gens.size(); ++a) {
    for (size_t b = a + 1; b < gens.size(); ++b) {
      const Monomial& la = gens[a].lead;
      const Monomial& lb = gens[b].lead;
      const size_t nvars = la.size();
      bool coprime = true;
      for (size_t v = 0; v < nvars; ++v)
        if (la[v] && lb[v]) {
          coprime = false;
          break;
        }
      if (coprime) continue;  // Buchberger's first criterion
      if (++seen > max_pairs)
        throw BudgetExceeded("spair_reduce_verify: pair budget exceeded");
      Monomial lcm(nvars);
      for (size_t v = 0; v < nvars; ++v) lcm[v] = std::max(la[v], lb[v]);
      Monomial u = quotient_times(lcm, la, gens[a].tail);
      Monomial v = quotient_times(lcm, lb, gens[b].tail);
      if (!reduces_to_zero(std::move(u), std::move(v), gens, less))
        return false;
    }
  }
  return true;
}

bool BinomialSystem::spair_reduce_verify(long long max_pairs) const {
  return posetfano::spair_reduce_verify(
      gens_,
      [this](const Monomial& a, const Monomial& b) {
        return monomial_less(a, b);
      },
      max_pairs);
}

std::vector<Monomial> BinomialSystem::initial_ideal() const {
  std::vector<Monomial> leads;
  for (const Binomial& g : gens_) leads.push_back(g.lead);
  std::sort(leads.begin(), leads.end());
  leads.erase(std::unique(leads.begin(), leads.end()), leads.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < leads.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < leads.size(); ++j)
      if (i != j && monomial_divides(leads[j], leads[i]) &&
          !(leads[j] == leads[i] && j > i)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(leads[i]);
  }
  return minimal;
}

bool is_squarefree(const std::vector<Monomial>& monomials) {
  for (const Monomial& m : monomials)
    for (int e : m)
      if (e > 1) return false;
  return true;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == nvars - 1) {
      cur[var] = remaining;
      out.push_back(cur);
      cur[var] = 0;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      cur[var] = e;
      rec(var + 1, remaining - e);
    }
    cur[var] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return out;
  }
  rec(0, degree);
  return out;
}

std::vector<Monomial> BinomialSystem::standard_monomials(int degree) const {
  std::vector<Monomial> init = initial_ideal();
  std::vector<Monomial> out;
  for (Monomial& m : monomials_of_degree(nvars_, degree)) {
    bool standard = true;
    for (const Monomial& g : init)
      if (monomial_divides(g, m)) {
        standard = false;
        break;
      }
    if (standard) out.push_back(std::move(m));
  }
  return out;
}

Int BinomialSystem::standard_monomial_count(int degree) const {
  Int direct = (Int)standard_monomials(degree).size();

  // Second route: with a squarefree quadratic initial ideal the standard
  // monomials are exactly those supported on an independent set of the
  // forbidden-pair graph; count compositions per support.
  std::vector<Monomial> init = initial_ideal();
  bool quadratic_squarefree = is_squarefree(init);
  for (const Monomial& g : init)
    if (degree_of(g) != 2) quadratic_squarefree = false;
  if (quadratic_squarefree && degree >= 1) {
    std::vector<std::vector<bool>> forbidden(nvars_,
                                             std::vector<bool>(nvars_, false));
    for (const Monomial& g : init) {
      std::vector<int> sup;
      for (int v = 0; v < nvars_; ++v)
        if (g[v]) sup.push_back(v);
      forbidden[sup[0]][sup.back()] = forbidden[sup.back()][sup[0]] = true;
    }
    Int total = 0;
    std::vector<int> chosen;
    std::function<void(int)> rec = [&](int from) {
      if (!chosen.empty()) {
        int k = (int)chosen.size();
        total += binomial(Int(degree - 1), k - 1);
      }
      if ((int)chosen.size() == degree) return;
      for (int v = from; v < nvars_; ++v) {
        bool ok = true;
        for (int c : chosen)
          if (forbidden[c][v]) {
            ok = false;
            break;
          }
        if (!ok) continue;
        chosen.push_back(v);
        rec(v + 1);
        chosen.pop_back();
      }
    };
    rec(0);
    if (total != direct)
      throw Error("standard monomial count mismatch between routes");
  }
  return direct;
}

bool BinomialSystem::lattice_spanning() const {
  // Integer row-style Hermite reduction; the pi images span the full lattice
  // iff every pivot ends up at 1.
  const size_t w = pi_[0].size();
  std::vector<std::vector<Int>> rows;
  for (const auto& img : pi_) {
    std::vector<Int> r(w);
    for (size_t c = 0; c < w; ++c) r[c] = img[c];
    rows.push_back(std::move(r));
  }
  size_t top = 0;
  for (size_t c = 0; c < w; ++c) {
    for (;;) {
      size_t best = rows.size();
      for (size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() ||
             abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int f = rows[i][c] / rows[top][c];
        for (size_t j = 0; j < w; ++j) rows[i][j] -= f * rows[top][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] == 0) return false;  // rank deficient
    if (abs(rows[top][c]) != 1) return false;
    ++top;
    if (top == rows.size() && c + 1 < w) return false;
  }
  return true;
}

LatticePolytope BinomialSystem::omega_polytope() const {
  switch (family_) {
    case Family::OO: return build_pair(PairKind::OmegaOO, p_, q_);
    case Family::OC: return build_pair(PairKind::OmegaOC, p_, q_);
    case Family::CC: return build_pair(PairKind::OmegaCC, p_, q_);
  }
  throw Error("unknown family");
}

bool BinomialSystem::hilbert_match(int n_max) const {
  if (!lattice_spanning()) return false;
  LatticePolytope om = omega_polytope();
  for (int n = 0; n <= n_max; ++n)
    if (standard_monomial_count(n) != om.lattice_point_count(n)) return false;
  return true;
}

bool BinomialSystem::injectivity_check(int n_max) const {
  for (int n = 1; n <= n_max; ++n) {
    std::set<std::vector<Coord>> images;
    for (const Monomial& m : standard_monomials(n))
      if (!images.insert(pi_eval(m)).second) return false;
  }
  return true;
}

std::string BinomialSystem::variable_name(int var) const {
  if (var == 0) return "z";
  std::ostringstream os;
  IndexSet s;
  if (var <= (int)ideals_q_.size()) {
    os << "y";
    s = ideals_q_[var - 1];
  } else {
    os << "x";
    s = ideals_p_[var - 1 - ideals_q_.size()];
  }
  os << "{";
  auto el = s.elements();
  for (size_t i = 0; i < el.size(); ++i) os << (i ? "," : "") << el[i];
  os << "}";
  return os.str();
}

RingIsomorphismReport rings_isomorphism_check(const Poset& p, const Poset& q,
                                              int n_max) {
  RingIsomorphismReport rep;
  rep.oo_available = p.has_common_linear_extension(q);
  std::vector<BinomialSystem> systems;
  if (rep.oo_available) systems.emplace_back(Family::OO, p, q);
  systems.emplace_back(Family::OC, p, q);
  systems.emplace_back(Family::CC, p, q);

  for (const auto& s : systems) {
    std::vector<Int> counts;
    for (int n = 0; n <= n_max; ++n)
      counts.push_back(s.standard_monomial_count(n));
    rep.counts.push_back(std::move(counts));
  }
  for (size_t i = 1; i < rep.counts.size(); ++i)
    if (rep.counts[i] != rep.counts[0]) rep.counts_agree = false;

  // The ideal-indexed variables make the proof's x_I -> x_{max(I)} bijection
  // the identity on indices, so the initial ideals must coincide as sets.
  BinomialSystem oc(Family::OC, p, q);
  BinomialSystem cc(Family::CC, p, q);
  auto a = oc.initial_ideal();
  auto b = cc.initial_ideal();
  rep.oc_cc_initial_ideals_match = (a == b);
  return rep;
}

}  // namespace posetfano
