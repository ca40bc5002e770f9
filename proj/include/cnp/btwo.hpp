#ifndef CNP_BTWO_HPP
#define CNP_BTWO_HPP

#include "cnp/symfunc.hpp"

namespace cnp {

// Type B_2 in the variables y_1 = x_1 x_2, y_2 = x_1 / x_2. Weights have
// coordinates in Z or Z + 1/2 and are stored doubled: d = (2c_1, 2c_2).
// A LaurentPoly or m-basis expansion with n = 2 over doubled exponents
// stands for the corresponding series in y.
struct B2Weight {
  int d1 = 0;
  int d2 = 0;

  static B2Weight from_coords2(int d1, int d2);  // validates parity and dominance
  // m1 varpi_1 + m2 varpi_2, varpi_1 = e_1, varpi_2 = (e_1 + e_2)/2
  static B2Weight fundamental(int m1, int m2);
  int m1() const { return (d1 - d2) / 2; }
  int m2() const { return d2; }
  // the C_2 partition with the same Macdonald polynomial
  Partition c2_partition() const { return {(d1 + d2) / 2, (d1 - d2) / 2}; }
  Partition key() const { return {d1, d2}; }
  std::string str() const;  // e.g. "3/2,1/2"
};

// the C_2 -> B_2 parameter swap (q,t,T) -> (q,T,t); the identity here since T = t
struct ParameterSwap {
  bool swaps_t_and_T = true;
  ExactScalar t_of_B(const ExactScalar& t_C) const { return t_C; }
};

B2Weight b2_weight_of_c2(const Partition& lam);
// x^a -> doubled y exponent (a1 + a2, a1 - a2)
LaurentPoly c2_to_b2(const LaurentPoly& f);
LaurentPoly b2_to_c2(const LaurentPoly& f);

// E_pi~ of B_2 on a Weyl-invariant polynomial (doubled exponents)
LaurentPoly b2_operator_apply(const LaurentPoly& f);
BasisExpansion b2_operator_apply(const BasisExpansion& f);
ExactScalar b2_eigenvalue(const B2Weight& w);

// P^(C)_lam re-expressed as a B_2 polynomial (m basis over doubled weights)
BasisExpansion b2_from_c2(const Partition& lam);
BasisExpansion b2_P(const B2Weight& w);
ExactScalar b2_q_normalization(const B2Weight& w);
BasisExpansion b2_Q(const B2Weight& w);

bool verify_b2_eigen(const Partition& lam);
bool verify_thm7(int lam1, int lam2);

}  // namespace cnp

#endif
