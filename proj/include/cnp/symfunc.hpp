#ifndef CNP_SYMFUNC_HPP
#define CNP_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "cnp/weyl.hpp"

namespace cnp {

enum class Basis { m, P, Q, chi };
std::string basis_name(Basis b);

// Finite expansion over dominant weights in a named basis.
struct BasisExpansion {
  Basis basis = Basis::m;
  int n = 0;
  std::map<Partition, ExactScalar> coeffs;

  ExactScalar coeff(const Partition& p) const;
  void add(const Partition& p, const ExactScalar& c);
  bool is_zero() const { return coeffs.empty(); }
  // partitions in decreasing graded-lexicographic order
  std::vector<Partition> ordered_keys() const;
};

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b);
BasisExpansion operator-(const BasisExpansion& a, const BasisExpansion& b);
BasisExpansion operator*(const ExactScalar& c, const BasisExpansion& a);
bool operator==(const BasisExpansion& a, const BasisExpansion& b);

// sum of c_i * e_i with a single common denominator per coefficient
BasisExpansion linear_combination(const std::vector<std::pair<ExactScalar, const BasisExpansion*>>& terms,
                                  Basis basis, int n);

// products and conversions in the orbit-sum basis
BasisExpansion m_basis(const Partition& lam, int n);
BasisExpansion m_product(const BasisExpansion& a, const BasisExpansion& b);
LaurentPoly to_laurent(const BasisExpansion& m);
// W-invariant Laurent polynomial to the m basis; throws if not invariant
BasisExpansion from_laurent(const LaurentPoly& f);

// multiplicities N such that m_mu m_kappa = sum N_nu m_nu
const std::map<Partition, long>& m_structure(const Partition& mu, const Partition& kappa, int n);

}  // namespace cnp

#endif
