#ifndef CNP_SCALAR_HPP
#define CNP_SCALAR_HPP

#include "cnp/genrat.hpp"

namespace cnp {

// Coefficients in q^{1/2} = a and t^{1/2} = b.
using ExactScalar = GenRat;

const VarList& ab_vars();

// a^i b^j times c
ExactScalar ab(int i, int j, const Rational& c = 1);
inline ExactScalar qpow(int k) { return ab(2 * k, 0); }
inline ExactScalar tpow(int k) { return ab(0, 2 * k); }
// q^i t^j
inline ExactScalar qt(int i, int j) { return ab(2 * i, 2 * j); }
inline ExactScalar q_sym() { return qpow(1); }
inline ExactScalar t_sym() { return tpow(1); }
// 1 - q^i t^j
inline ExactScalar one_minus_qt(int i, int j) { return ExactScalar(1) - qt(i, j); }

}  // namespace cnp

#endif
