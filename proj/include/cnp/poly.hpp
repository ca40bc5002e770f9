#ifndef CNP_POLY_HPP
#define CNP_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "cnp/mono.hpp"

namespace cnp {

using Integer = mpz_class;
using Rational = mpq_class;

// Sparse multivariate polynomial with integer coefficients. Terms are kept
// strictly decreasing in grlex order with no zero coefficient, so equal
// polynomials have identical term vectors. The ring (variable names) is
// carried by the enclosing value, not here.
class Poly {
 public:
  struct Term {
    Mono m;
    Integer c;
  };

  Poly() = default;
  explicit Poly(std::vector<Term> sorted_terms) : t_(std::move(sorted_terms)) {}

  static Poly constant(const Integer& c);
  static Poly monomial(const Mono& m, const Integer& c = 1);
  static Poly var(int i, int k = 1) { return monomial(Mono::var(i, k)); }
  // sorts, merges duplicates, drops zeros
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c == 1; }
  bool is_monomial() const { return t_.size() == 1; }
  size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lt() const { return t_.front(); }
  Integer constant_term() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly mul_term(const Mono& m, const Integer& c) const;
  Poly shift(const Mono& m) const;  // multiply by x^m, m may be negative
  Poly scaled(const Integer& c) const;
  Poly divexact_int(const Integer& c) const;
  Poly pow(int k) const;

  Mono min_exponents() const;  // largest monomial dividing every term
  Mono max_exponents() const;
  Integer content() const;     // positive gcd of coefficients (0 for zero)
  // divide by content and make the leading coefficient positive
  Poly primitive() const;
  int lc_sign() const { return t_.empty() ? 0 : sgn(t_.front().c); }
  int degree_in(int var) const;
  int min_degree_in(int var) const;
  int total_degree() const { return t_.empty() ? -1 : t_.front().m.deg(); }
  Mono used_vars() const;  // 1 in slot i when variable i occurs

  // exact division; nullopt if d does not divide *this over Z
  std::optional<Poly> divexact(const Poly& d) const;
  bool divisible_by(const Poly& d) const { return divexact(d).has_value(); }

  // set variable v to the integer value x
  Poly eval_var(int v, const Integer& x) const;
  Integer eval_all(const std::vector<Integer>& xs) const;
  Rational eval_rational(const std::vector<Rational>& xs) const;
  Integer max_norm() const;

  // coefficient of var^k as a polynomial in the other variables
  Poly coeff_in(int var, int k) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  // total order on polynomials, used for canonical sorting
  static int compare(const Poly& a, const Poly& b);
  size_t hash() const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> t_;
};

}  // namespace cnp

#endif
