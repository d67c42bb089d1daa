#pragma once

#include <functional>
#include <string>
#include <vector>

#include "posetfano/constructions.hpp"
#include "posetfano/poset.hpp"

namespace posetfano {

enum class Family { OO, OC, CC };

std::string family_name(Family f);

// Exponent vector over the system's variables.
using Monomial = std::vector<int>;

// Pure difference of two monomials, leading term first under the system's
// monomial order.
struct Binomial {
  Monomial lead;
  Monomial tail;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

// Toric presentation of one Omega polytope: variables are Z (index 0), one
// Y per ideal of Q, one X per ideal of P.  All three families share this
// ideal indexing; the family only selects the monomial map.  Variable ranks
// are the reverse-lex ranks: index 0 is the smallest variable, Y block below
// X block, inclusion-monotone within each block.
class BinomialSystem {
 public:
  BinomialSystem(Family family, const Poset& p, const Poset& q);

  Family family() const { return family_; }
  const Poset& poset_p() const { return p_; }
  const Poset& poset_q() const { return q_; }
  int var_count() const { return nvars_; }
  int z_var() const { return 0; }
  int y_var(size_t ideal_index) const { return 1 + (int)ideal_index; }
  int x_var(size_t ideal_index) const {
    return 1 + (int)ideals_q_.size() + (int)ideal_index;
  }
  const std::vector<IndexSet>& ideals_p() const { return ideals_p_; }
  const std::vector<IndexSet>& ideals_q() const { return ideals_q_; }

  // Image of one variable in Z^{d+1} x Z (last coordinate: s-degree).
  const std::vector<Coord>& pi_image(int var) const { return pi_[var]; }
  std::vector<Coord> pi_eval(const Monomial& mono) const;

  const std::vector<Binomial>& generators() const { return gens_; }

  // Graded reverse lexicographic comparison; true when a < b.
  bool monomial_less(const Monomial& a, const Monomial& b) const;

  // Buchberger: every S-polynomial of a generator pair reduces to zero.
  bool spair_reduce_verify(long long max_pairs = 1'000'000) const;

  // Minimalized set of leading monomials of the generators.
  std::vector<Monomial> initial_ideal() const;

  // Count of degree-n monomials divisible by no initial generator; both the
  // direct enumeration and the squarefree-support closed form are computed
  // and must agree.
  Int standard_monomial_count(int degree) const;

  // pi images of the degree-1 variables affinely span the full lattice.
  bool lattice_spanning() const;

  // standard_monomial_count(n) equals |n Omega| for n <= n_max, plus the
  // lattice-spanning hypothesis.
  bool hilbert_match(int n_max) const;

  // pi is injective on standard monomials of each degree <= n_max.
  bool injectivity_check(int n_max) const;

  // The Omega polytope this system presents.
  LatticePolytope omega_polytope() const;

  std::vector<Monomial> standard_monomials(int degree) const;

  std::string variable_name(int var) const;

 private:
  void build_generators();
  void append_checked(Monomial first, Monomial second);

  Family family_;
  Poset p_, q_;
  std::vector<IndexSet> ideals_p_, ideals_q_;
  int nvars_ = 0;
  std::vector<std::vector<Coord>> pi_;
  std::vector<Binomial> gens_;
};

bool is_squarefree(const std::vector<Monomial>& monomials);

// All exponent vectors of the given total degree (stand-alone helper, also
// useful for ad-hoc quotient counts in tests).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

bool monomial_divides(const Monomial& a, const Monomial& b);

// Buchberger check over an explicit generator list and monomial order;
// BinomialSystem::spair_reduce_verify delegates here.
bool spair_reduce_verify(
    const std::vector<Binomial>& gens,
    const std::function<bool(const Monomial&, const Monomial&)>& less,
    long long max_pairs = 1'000'000);

struct RingIsomorphismReport {
  bool oo_available = false;  // false when no common linear extension
  bool counts_agree = true;   // degreewise standard-monomial counts
  bool oc_cc_initial_ideals_match = false;
  std::vector<std::vector<Int>> counts;  // per family, per degree 0..n_max
};

RingIsomorphismReport rings_isomorphism_check(const Poset& p, const Poset& q,
                                              int n_max);

}  // namespace posetfano
