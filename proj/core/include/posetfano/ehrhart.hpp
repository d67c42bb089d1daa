#pragma once

#include <string>
#include <vector>

#include "posetfano/polytope.hpp"
#include "posetfano/poset.hpp"

namespace posetfano {

// Exact polynomial sum_k coeffs[k] n^k, constant term first.
struct EhrhartPolynomial {
  std::vector<Rat> coeffs;

  Rat evaluate(const Int& n) const;
  int degree() const { return (int)coeffs.size() - 1; }
  Rat leading() const { return coeffs.back(); }
  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) =
      default;
  std::string to_string() const;
};

// Interpolates |nP cap Z^m| through n = 0..m exactly.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p);

Rat volume(const LatticePolytope& p);
Int normalized_volume(const LatticePolytope& p);

struct EhrhartEqualityReport {
  bool equal = false;
  std::vector<EhrhartPolynomial> polynomials;
};

EhrhartEqualityReport ehrhart_equal(const std::vector<LatticePolytope>& ps);

// vol(Omega(O_P, C_Q)) by the linear-extension sum over subsets of [d+1].
// Throws NoCommonLinearExtension unless `force`.
Rat volume_omega_formula(const Poset& p, const Poset& q, bool force = false);

}  // namespace posetfano
