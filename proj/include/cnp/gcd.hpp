#ifndef CNP_GCD_HPP
#define CNP_GCD_HPP

#include "cnp/poly.hpp"

namespace cnp {

// Greatest common divisor over Z[x], positive leading coefficient.
// gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace cnp

#endif
