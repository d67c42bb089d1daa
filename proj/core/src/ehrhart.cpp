#include "posetfano/ehrhart.hpp"

#include <sstream>

namespace posetfano {

Rat EhrhartPolynomial::evaluate(const Int& n) const {
  Rat acc = 0;
  Rat pw = 1;
  for (const Rat& c : coeffs) {
    acc += c * pw;
    pw *= Rat(n);
  }
  return acc;
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream os;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k) os << " + ";
    os << coeffs[k] << "*n^" << k;
  }
  return os.str();
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  if (!p.full_dimensional())
    throw NotFullDimensional("ehrhart_polynomial requires full dimension");
  const int m = p.ambient_dim();
  std::vector<Rat> values(m + 1);
  for (int n = 0; n <= m; ++n) values[n] = Rat(p.lattice_point_count(n));

  // Lagrange interpolation at the nodes 0..m, accumulated coefficient-wise.
  std::vector<Rat> coeffs(m + 1, Rat(0));
  for (int i = 0; i <= m; ++i) {
    // Basis polynomial prod_{j != i} (n - j) / (i - j).
    std::vector<Rat> basis{Rat(1)};
    Rat denom = 1;
    for (int j = 0; j <= m; ++j) {
      if (j == i) continue;
      denom *= Rat(i - j);
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k] += basis[k] * Rat(-j);
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
    }
    for (size_t k = 0; k < basis.size(); ++k)
      coeffs[k] += values[i] * basis[k] / denom;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return EhrhartPolynomial{std::move(coeffs)};
}

Rat volume(const LatticePolytope& p) {
  EhrhartPolynomial e = ehrhart_polynomial(p);
  if (e.degree() != p.ambient_dim())
    throw Error("ehrhart degree does not match dimension");
  return e.leading();
}

Int normalized_volume(const LatticePolytope& p) {
  Rat nv = volume(p) * Rat(factorial(p.ambient_dim()));
  if (denominator(nv) != 1)
    throw Error("normalized volume is not an integer");
  return Int(numerator(nv));
}

EhrhartEqualityReport ehrhart_equal(const std::vector<LatticePolytope>& ps) {
  EhrhartEqualityReport rep;
  if (ps.empty()) {
    rep.equal = true;
    return rep;
  }
  int m = ps[0].ambient_dim();
  for (const auto& p : ps)
    if (p.ambient_dim() != m)
      throw DimensionMismatch("ehrhart_equal: mixed ambient dimensions");
  for (const auto& p : ps) rep.polynomials.push_back(ehrhart_polynomial(p));
  rep.equal = true;
  for (size_t i = 1; i < rep.polynomials.size(); ++i)
    if (!(rep.polynomials[i] == rep.polynomials[0])) rep.equal = false;
  return rep;
}

Rat volume_omega_formula(const Poset& p, const Poset& q, bool force) {
  if (p.size() != q.size())
    throw DimensionMismatch("volume_omega_formula: poset sizes differ");
  if (!p.has_common_linear_extension(q) && !force)
    throw NoCommonLinearExtension(
        "volume_omega_formula: posets have no common linear extension");
  Poset pb = p.adjoin_bottom();
  Poset qb = q.adjoin_bottom();
  const int n = pb.size();
  Int total = 0;
  std::uint32_t full = IndexSet::full(n).bits;
  for (std::uint32_t w = 0;; ++w) {
    total += Poset::delta_w(pb, qb, IndexSet(w)).linear_extension_count();
    if (w == full) break;
  }
  return Rat(total) / Rat(factorial(n));
}

}  // namespace posetfano
