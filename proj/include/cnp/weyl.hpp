#ifndef CNP_WEYL_HPP
#define CNP_WEYL_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cnp/scalar.hpp"

namespace cnp {

// Root system C_n: roots +-e_i +- e_j (i < j) and +-2 e_i. Dominant weights
// are partitions; x_i stands for e^{e_i}.

using Exponent = std::vector<int>;
using Partition = std::vector<int>;  // weakly decreasing, nonnegative

struct Weight {
  int n = 0;
  std::vector<int> coords;
};

struct SignedPerm {
  std::vector<int> perm;   // image index of coordinate i (0-based)
  std::vector<int> signs;  // +1 or -1

  Exponent apply(const Exponent& e) const;
  int det() const;
};

// Partition helpers. `fit` pads with zeros to length n and validates.
Partition fit(const Partition& p, int n);
bool is_partition(const std::vector<int>& p);
int weight_size(const Exponent& e);
Partition parse_partition(const std::string& s);  // "3,1" -> {3,1}
std::string partition_str(const Partition& p);

// all partitions with at most n parts and size exactly / at most s
std::vector<Partition> partitions_of(int s, int n);
std::vector<Partition> partitions_up_to(int s, int n);
// all mu <= lam in dominance, in decreasing lexicographic order (lam first)
std::vector<Partition> dominated(const Partition& lam, int n);

bool dominance_leq(const Partition& mu, const Partition& lam, int n);

std::vector<SignedPerm> weyl_group(int n);
std::vector<Exponent> orbit(const Partition& lam, int n);
// the dominant representative of the orbit of e
Partition dominant_of(const Exponent& e);
std::vector<Exponent> positive_roots(int n);
Exponent rho(int n);

// Laurent polynomial in x_1..x_n with ExactScalar coefficients, terms kept in
// lexicographic order of exponent vectors.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int n) : n_(n) {}
  static LaurentPoly constant(int n, const ExactScalar& c);
  static LaurentPoly monomial(const Exponent& e, const ExactScalar& c = ExactScalar(1));

  int n() const { return n_; }
  const std::map<Exponent, ExactScalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  ExactScalar coeff(const Exponent& e) const;
  ExactScalar constant_term() const;
  void add_term(const Exponent& e, const ExactScalar& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const ExactScalar& c, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly act(const SignedPerm& w) const;
  LaurentPoly bar() const;  // e^lam -> e^{-lam}
  bool is_w_invariant() const;
  LaurentPoly map_coeffs(const std::function<ExactScalar(const ExactScalar&)>& f) const;
  std::string str() const;

 private:
  int n_ = 0;
  std::map<Exponent, ExactScalar> t_;
};

LaurentPoly orbit_sum(const Partition& lam, int n);
LaurentPoly weyl_character(const Partition& lam, int n);

// <f, g> = (1/|W|) [f g^bar Delta]_1 with Delta = prod_{roots} (e^alpha; q)_k
// at t = q^k
ExactScalar inner_product(const LaurentPoly& f, const LaurentPoly& g, int k);

struct WsumResult {
  bool ok;
  std::string lhs;
  std::string rhs;
};
WsumResult verify_macdonald_wsum(int n);

}  // namespace cnp

#endif
