#ifndef CNP_IDENTITIES_HPP
#define CNP_IDENTITIES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnp/genrat.hpp"

namespace cnp {

// r+1 phi r: sum_{i <= truncation} prod (a;base)_i / prod (b;base)_i * arg^i / (base;base)_i
struct HypergeomSpec {
  std::vector<GenRat> upper;
  std::vector<GenRat> lower;
  GenRat base;
  GenRat argument;
  int truncation = 0;
};

// smallest m <= max_m such that some upper parameter is base^{-m}, or -1
int terminating_order(const HypergeomSpec& spec, int max_m = 64);
// spec with truncation set from terminating_order; throws if not terminating
HypergeomSpec terminating(HypergeomSpec spec);
GenRat phi_series(const HypergeomSpec& spec);

class ResourceGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IdentityConfig {
  int guard = 6;  // bound on n + r for exact symmetrized sums
};

// Variables x1..xn, u1..ur, t. `I` is a bit mask over u1..ur.
VarList thm6_vars(int n, int r);
GenRat subset_coefficient(int n, int r, unsigned I);
GenRat r_function(int n, int r, int k);  // R(u_k)
// (-t;t)_{n-r} with the negative-index convention
GenRat minus_t_poch(int m, const GenRat& t);
GenRat thm6_lhs(int n, int r, const IdentityConfig& cfg = {});
GenRat thm6_rhs(int n, int r, const IdentityConfig& cfg = {});
// the subset sum without the (-t;t)_{n-r} factor
GenRat thm6_subset_sum(int n, int r);
bool verify_thm6(int n, int r, const IdentityConfig& cfg = {});
// evaluation at `points` random rational points, poles rejected
bool verify_thm6_probabilistic(int n, int r, std::uint64_t seed, int points = 3);

// u, v as u1, u2
GenRat cor7_rhs(int n);
bool verify_cor7(int n);

bool verify_65_summation(int i_max);

using KVec = std::vector<int>;
bool verify_thm8(int n, int r);
bool verify_thm9(int n, int r);
bool verify_thm10(int n, const KVec& k);
bool verify_thm11(int n, const KVec& k);
bool verify_rosengren_form(int n, const KVec& k);
// thm10 left side in x1..xn, z1..zs, q
GenRat thm10_lhs(int n, const KVec& k);
GenRat thm8_rhs(int n, int r);

}  // namespace cnp

#endif
