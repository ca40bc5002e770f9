#ifndef CNP_CYCLO_HPP
#define CNP_CYCLO_HPP

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cnp/poly.hpp"

namespace cnp {

// Coefficients (low to high) of the d-th cyclotomic polynomial.
const std::vector<Integer>& cyclotomic(int d);
int euler_phi(int d);
std::vector<int> divisors(int n);

// A denominator building block. Either Phi_d(w) for a primitive Laurent
// monomial w (irreducible, cleared of monomial factors and sign-normalized),
// or an opaque polynomial with no known factorization (d == 0).
struct Atom {
  int d = 0;
  Mono w;         // first nonzero entry positive; unused when d == 0
  int sign = 1;   // poly = sign * w_minus^phi(d) * Phi_d(w)
  Poly poly;      // primitive, positive leading coefficient, no monomial factor

  bool irreducible() const { return d > 0; }
};
using AtomPtr = std::shared_ptr<const Atom>;

AtomPtr make_cyclo_atom(int d, const Mono& w);
AtomPtr make_opaque_atom(const Poly& p);

bool same_atom(const Atom& a, const Atom& b);
int compare_atoms(const Atom& a, const Atom& b);

// p = unit * x^mono * prod atoms^mult. Binomials and polynomials in a single
// monomial are split into cyclotomic atoms; anything else becomes one opaque
// atom.
struct LightFactors {
  Integer unit;
  Mono mono;
  std::vector<std::pair<AtomPtr, int>> atoms;
};
LightFactors factor_light(const Poly& p);

// exact division of p by the atom polynomial; nullopt if not divisible
std::optional<Poly> divide_by_atom(const Poly& p, const Atom& a);

}  // namespace cnp

#endif
