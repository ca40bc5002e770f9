#ifndef CNP_MACDONALD_HPP
#define CNP_MACDONALD_HPP

#include <vector>

#include "cnp/symfunc.hpp"

namespace cnp {

// The operator E_pi for the minuscule coweight of C_n:
//   E f = sum_sigma prod_i (1 - t x_i^{2s_i})/(1 - x_i^{2s_i})
//         prod_{i<j} (1 - t x_i^{s_i} x_j^{s_j})/(1 - x_i^{s_i} x_j^{s_j}) f(q^{s/2} x)
// Throws std::invalid_argument on input that is not W-invariant.
LaurentPoly apply_E(const LaurentPoly& f);
BasisExpansion apply_E(const BasisExpansion& f);  // m basis in and out

// E(m_mu) in the m basis, cached
const BasisExpansion& apply_E_orbit(const Partition& mu, int n);

struct Eigenvalue {
  ExactScalar value;
};
// prod_i (a^{lam_i} b^{2(n-i+1)} + a^{-lam_i})
Eigenvalue eigenvalue(const Partition& lam, int n);

// monic P_lam in the m basis, cached
const BasisExpansion& compute_P(const Partition& lam, int n);
// the normalization factor b_lam with Q_lam = b_lam P_lam
ExactScalar q_normalization(const Partition& lam, int n);
BasisExpansion compute_Q(const Partition& lam, int n);

// Q_(0), ..., Q_(R) from the one-row generating product
std::vector<BasisExpansion> onerow_Q_series(int R, int n);
const BasisExpansion& onerow_Q(int r, int n);

// x_i -> t^{n-i+1/2}
ExactScalar specialize_principal(const LaurentPoly& f, int n);
ExactScalar specialize_principal(const BasisExpansion& f);
ExactScalar principal_value_formula(const Partition& lam, int n);
bool verify_specialization(const Partition& lam, int n);

// E(Q_(l1) Q_(l2)) against the two-sum closed form
BasisExpansion thm4_lhs(int l1, int l2, int n);
BasisExpansion thm4_rhs(int l1, int l2, int n);
bool verify_thm4(int l1, int l2, int n);

// <P_lam, P_mu> at t = q^k
ExactScalar p_inner_product(const Partition& lam, const Partition& mu, int n, int k);
// zero off the diagonal and nonzero on it, for all partitions of size <= max_size
bool verify_orthogonality(int n, int max_size, int k);

}  // namespace cnp

#endif
