#ifndef CNP_GENRAT_HPP
#define CNP_GENRAT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cnp/cyclo.hpp"
#include "cnp/poly.hpp"

namespace cnp {

struct DenFactor {
  AtomPtr atom;
  int mult;
};

// Rational function over Q in a declared list of indeterminates.
//
// Stored as scale * num / (x^dmono * prod atom^mult) where num is a
// primitive integer polynomial with positive leading coefficient, coprime to
// the denominator, and the atoms are pairwise coprime. The canonical
// numerator/denominator pair is (scale * num, x^dmono * prod atom^mult); the
// denominator is then primitive with positive leading coefficient.
//
// A value built from a bare number has no variable list and combines with
// values of any ring.
class GenRat {
 public:
  GenRat() : scale_(0) {}
  GenRat(long c) : GenRat(Rational(c)) {}  // NOLINT
  GenRat(const Rational& c);               // NOLINT

  static GenRat var(const VarList& vars, const std::string& name, int k = 1);
  // c * x^m, negative exponents allowed
  static GenRat monomial(const VarList& vars, const Mono& m, const Rational& c = 1);
  static GenRat from_poly(const VarList& vars, const Poly& p, const Rational& c = 1);
  static GenRat fraction(const VarList& vars, const Poly& num, const Poly& den);

  const VarList& vars() const { return vars_; }
  bool is_zero() const { return sgn(scale_) == 0; }
  bool is_constant() const { return num_.is_one() && dmono_.is_one() && den_.empty(); }
  bool is_one() const { return is_constant() && scale_ == 1; }
  bool is_polynomial() const { return dmono_.is_one() && den_.empty(); }
  const Rational& scale() const { return scale_; }
  const Poly& num_primitive() const { return num_; }
  const Mono& den_monomial() const { return dmono_; }
  const std::vector<DenFactor>& den_factors() const { return den_; }

  Poly den_poly() const;
  // canonical numerator with rational coefficients, in decreasing grlex order
  std::vector<std::pair<Mono, Rational>> num_terms() const;

  GenRat operator-() const;
  friend GenRat operator+(const GenRat& a, const GenRat& b);
  friend GenRat operator-(const GenRat& a, const GenRat& b);
  friend GenRat operator*(const GenRat& a, const GenRat& b);
  friend GenRat operator/(const GenRat& a, const GenRat& b);
  GenRat& operator+=(const GenRat& b) { return *this = *this + b; }
  GenRat& operator-=(const GenRat& b) { return *this = *this - b; }
  GenRat& operator*=(const GenRat& b) { return *this = *this * b; }
  GenRat& operator/=(const GenRat& b) { return *this = *this / b; }
  GenRat inv() const;
  GenRat pow(int k) const;

  // sum with a single common denominator
  static GenRat sum(const std::vector<GenRat>& xs);
  static GenRat product(const std::vector<GenRat>& xs);

  // Replace indeterminates by values. The result lives in `target` when
  // given; otherwise in the ring of the values (or of *this if all values
  // are bare numbers), extended by any unbound names of *this.
  GenRat substitute(const std::map<std::string, GenRat>& bindings,
                    const VarList& target = nullptr) const;
  // the same function viewed in another ring that contains every used name
  GenRat embed(const VarList& target) const;
  Rational evaluate(const std::map<std::string, Rational>& point) const;
  std::vector<std::string> used_names() const;

  friend bool operator==(const GenRat& a, const GenRat& b);
  friend bool operator!=(const GenRat& a, const GenRat& b) { return !(a == b); }

  std::string str() const;

 private:
  static GenRat make(VarList vars, Rational scale, Poly num, Mono dmono,
                     std::vector<DenFactor> den, bool cancel);

  VarList vars_;
  Rational scale_;
  Poly num_;
  Mono dmono_;
  std::vector<DenFactor> den_;
};

// (base; step)_k = prod_{j<k} (1 - base * step^j)
GenRat qpoch(const GenRat& base, const GenRat& step, int k);

}  // namespace cnp

#endif
