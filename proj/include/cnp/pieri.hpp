#ifndef CNP_PIERI_HPP
#define CNP_PIERI_HPP

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cnp/symfunc.hpp"

namespace cnp {

// Coefficients indexed by (i, j) with i, j >= 0 and i + j <= lam2.
struct PieriExpansion {
  int n = 0;
  int lam1 = 0;
  int lam2 = 0;
  std::map<std::pair<int, int>, ExactScalar> terms;
};

// Q_(l1) Q_(l2) = sum c_ij Q_(l1+i-j, l2-i-j); zero outside i + j <= l2
ExactScalar pieri_c(int i, int j, int lam1, int lam2, int n);
// Q_(l1,l2) = sum C_ij Q_(l1+i-j) Q_(l2-i-j); zero outside i + j <= l2
ExactScalar inverse_C(int i, int j, int lam1, int lam2, int n);

PieriExpansion expand_tworow_product(int lam1, int lam2, int n);
PieriExpansion expand_tworow_inverse(int lam1, int lam2, int n);

// sum over the table of coeff * Q_(l1+i-j, l2-i-j), resp. coeff * Q_(l1+i-j) Q_(l2-i-j)
BasisExpansion rebuild_product_side(const PieriExpansion& e);
BasisExpansion rebuild_inverse_side(const PieriExpansion& e);

bool verify_thm3(int lam1, int lam2, int n);
// two-row product check with a replacement coefficient function; returns a
// description of the first differing m-coefficient, or empty when equal
using PieriCoeffFn = std::function<ExactScalar(int, int, int, int, int)>;
std::string thm3_discrepancy(int lam1, int lam2, int n, const PieriCoeffFn& c);
bool verify_thm5(int lam1, int lam2, int n);
// formal composition of both expansions in the two-row Q basis
std::map<Partition, ExactScalar> tworow_round_trip(int lam1, int lam2, int n);
bool verify_round_trip(int lam1, int lam2, int n);

// t = q: Weyl character from the inverse expansion and from the four h terms
bool verify_cor6(int lam1, int lam2, int n);

// P_e1 P_lam = sum a_k^+ P_{lam + e_k} + a_k^- P_{lam - e_k}; key (k, sign), k 1-based
using MinusculeTable = std::map<std::pair<int, int>, ExactScalar>;
MinusculeTable pieri_minuscule(const Partition& lam, int n);
bool verify_pieri_minuscule(const Partition& lam, int n);

// (P_w2 - P_w2(rho)) P_lam = sum over tau in W(e1+e2), lam + tau dominant, of C P_{lam+tau} - D P_lam
struct QuasiCoeffs {
  ExactScalar C;
  ExactScalar D;
};
std::map<Exponent, QuasiCoeffs> pieri_quasiminuscule(const Partition& lam, int n);
bool verify_pieri_quasiminuscule(const Partition& lam, int n);

// Matrix inverse pairs. kinds: "A" (indices i, j; params q, u, v), "f" and "g"
// (indices i, j; params q, u, v), "f2" and "g2" (indices j1, j2, k1, k2;
// params q, t, u1, u2). Zero outside the lower triangle.
GenRat bressoud_entry(const std::string& kind, const std::vector<int>& idx,
                      const std::map<std::string, GenRat>& params);

struct InverseCheck {
  bool ok = true;
  std::string first_failure;
};
// sum_j A_ij(u,v) A_jk(v,u) = delta_ik for 0 <= k <= i <= size
InverseCheck verify_bressoud_1d(int size);
InverseCheck verify_fg_1d(int size);
// two-dimensional pair on the box [0, size]^2
InverseCheck verify_two_dim(int size);

}  // namespace cnp

#endif
