#ifndef CNP_LAURENT_OPS_HPP
#define CNP_LAURENT_OPS_HPP

#include "cnp/poly.hpp"

namespace cnp {

// Helpers that treat a Poly as a Laurent polynomial (exponents of any sign).

// exact quotient p / (x^A - x^B); throws std::logic_error if not exact
Poly laurent_div_binomial(const Poly& p, const Mono& A, const Mono& B);

// x_i -> 1/x_i for every i with bit i set in mask
Poly flip_vars(const Poly& p, unsigned mask);

// sum over all 2^n sign changes of x_0..x_{n-1}, weighted by the sign product
Poly antisymmetrize_signs(const Poly& p, int n);

// x_i -> s x_i for i < n, where s is the variable with index svar
Poly translate(const Poly& p, int n, int svar);

// extract the part of p whose first n exponents equal e, as a polynomial in
// the remaining variables (first n slots zeroed)
Poly slice(const Poly& p, int n, const Mono& e);

}  // namespace cnp

#endif
