#include <doctest.h>

#include "cnp/identities.hpp"

using namespace cnp;

namespace {
GenRat v(const VarList& vars, const char* name) { return GenRat::var(vars, name); }
// t^{-k} + 1 in the (0, 3) ring
GenRat one_over_t_plus_1(int k) { return GenRat::var(thm6_vars(0, 3), "t").pow(-k) + GenRat(1); }
}  // namespace

TEST_CASE("symmetrized sum examples") {
  VarList vars = thm6_vars(2, 0);
  GenRat t = v(vars, "t");
  CHECK(thm6_lhs(2, 0) == (t + GenRat(1)) * (t * t + GenRat(1)));
  CHECK(thm6_rhs(2, 0) == (t + GenRat(1)) * (t * t + GenRat(1)));

  VarList v11 = thm6_vars(1, 1);
  GenRat t1 = v(v11, "t");
  CHECK(thm6_lhs(1, 1) == t1 + r_function(1, 1, 1));

  CHECK(thm6_subset_sum(0, 1) == GenRat(2));
  CHECK(thm6_subset_sum(0, 3) == GenRat(2) * (one_over_t_plus_1(1)) * (one_over_t_plus_1(2)));
  CHECK(thm6_rhs(0, 1) == GenRat(1));
  CHECK(thm6_lhs(0, 3) == GenRat(1));
}

TEST_CASE("subset coefficients") {
  for (int n = 0; n <= 3; ++n) {
    VarList vars = thm6_vars(n, 2);
    GenRat t = v(vars, "t"), u1 = v(vars, "u1"), u2 = v(vars, "u2");
    GenRat one(1);
    // I = {1}: v1 = u1, v2 = 1/(t u2)
    CHECK(subset_coefficient(n, 2, 1u) == t.pow(n) * (one - u1 / (t * u2)) / (one - u1 / u2));
    CHECK(subset_coefficient(n, 2, 3u) == (one - u1 * u2) / (one - t * u1 * u2));
    CHECK(subset_coefficient(n, 2, 0u) ==
          t.pow(2 * n) * (one - one / (t * t * u1 * u2)) / (one - one / (t * u1 * u2)));
  }
}

TEST_CASE("(-t;t)_m sign convention") {
  VarList vars = make_vars({"t"});
  GenRat t = v(vars, "t");
  GenRat one(1);
  CHECK(minus_t_poch(2, t) == (t + one) * (t * t + one));
  CHECK(minus_t_poch(0, t) == one);
  CHECK(minus_t_poch(-1, t) == one / GenRat(2));
  CHECK(minus_t_poch(-2, t) == one / (GenRat(2) * (one / t + one)));
}

TEST_CASE("rational identity, exact") {
  for (int n = 0; n <= 3; ++n)
    for (int r = 0; r <= 2; ++r) {
      CAPTURE(n);
      CAPTURE(r);
      CHECK(verify_thm6(n, r));
    }
  CHECK(verify_thm6(1, 3));
  CHECK(verify_thm6(0, 3));
  for (int n = 0; n <= 3; ++n) CHECK(verify_cor7(n));
}

TEST_CASE("rational identity, probabilistic") {
  CHECK(verify_thm6_probabilistic(3, 3, 7));
  CHECK(verify_thm6_probabilistic(4, 3, 11));
  CHECK(verify_thm6_probabilistic(2, 2, 1, 5));
  IdentityConfig small{3};
  CHECK_THROWS_AS(verify_thm6(2, 2, small), ResourceGuardExceeded);
  CHECK(verify_thm6(1, 2, small));
}

TEST_CASE("residues vanish at u_r = 1/(t u_i)") {
  for (int n : {1, 2}) {
    VarList vars = thm6_vars(n, 2);
    GenRat t = v(vars, "t"), u1 = v(vars, "u1"), u2 = v(vars, "u2");
    GenRat rhs = thm6_rhs(n, 2);
    GenRat lifted = rhs * (GenRat(1) - t * u1 * u2);
    CHECK(lifted.substitute({{"u2", GenRat(1) / (t * u1)}}).is_zero());
    lifted = rhs * (u2 - u1);
    CHECK(lifted.substitute({{"u2", u1}}).is_zero());
  }
}

TEST_CASE("u_r = 0 recovers the smaller identity") {
  for (int n = 0; n <= 2; ++n)
    for (int r = 1; r <= 2; ++r) {
      VarList big = thm6_vars(n, r);
      GenRat t = v(big, "t");
      std::string last = "u" + std::to_string(r);
      GenRat at0 = thm6_subset_sum(n, r).substitute({{last, GenRat(0)}}, big);
      GenRat smaller = thm6_subset_sum(n, r - 1).embed(big);
      CHECK(at0 == (t.pow(n - r + 1) + GenRat(1)) * smaller);
    }
}

TEST_CASE("phi series") {
  VarList vars = make_vars({"c", "q", "t"});
  GenRat c = v(vars, "c"), q = v(vars, "q"), t = v(vars, "t");
  GenRat a = c * c;
  GenRat one(1);
  auto spec = [&](int i) {
    return HypergeomSpec{{a, q * c, -(q * c), q, a * q.pow(i) * t, q.pow(-i)},
                         {c, -c, a, q.pow(1 - i) / t, a * q.pow(i + 1)},
                         q,
                         one / t,
                         0};
  };
  HypergeomSpec s0 = spec(2);
  s0.argument = GenRat(0);
  s0.truncation = 2;
  CHECK(phi_series(s0) == one);
  CHECK(terminating_order(spec(0)) == 0);
  CHECK(phi_series(terminating(spec(0))) == one);
  CHECK(terminating_order(spec(3)) == 3);
  CHECK(phi_series(terminating(spec(1))) ==
        (one - a * q) * (one - one / (q * t)) / ((one - a) * (one - one / t)));
  HypergeomSpec bad{{q.pow(-2)}, {q.pow(-1)}, q, one, 2};
  CHECK_THROWS_AS(phi_series(bad), std::domain_error);
  HypergeomSpec open{{a}, {c}, q, t, 0};
  CHECK(terminating_order(open) == -1);
  CHECK_THROWS(terminating(open));
}

TEST_CASE("terminating 6phi5 summation") {
  CHECK(verify_65_summation(6));
  CHECK_THROWS_AS(verify_65_summation(9), ResourceGuardExceeded);
}

TEST_CASE("principal specializations") {
  // r = 0 leaves (-q;q)_n
  for (int n = 1; n <= 3; ++n) {
    GenRat rhs = thm8_rhs(n, 0);
    GenRat q = GenRat::var(rhs.vars(), "q");
    CHECK(rhs == minus_t_poch(n, q));
  }
  for (auto [n, r] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 2}}) {
    CAPTURE(n);
    CAPTURE(r);
    CHECK(verify_thm8(n, r));
    CHECK(verify_thm9(n, r));
  }
  CHECK_THROWS_AS(verify_thm8(4, 1), ResourceGuardExceeded);
}

TEST_CASE("multiple principal specializations") {
  std::vector<KVec> ks{{1}, {2}, {1, 1}, {2, 1}};
  for (int n = 1; n <= 3; ++n)
    for (const auto& k : ks) {
      CAPTURE(n);
      CAPTURE(k.size());
      CHECK(verify_thm10(n, k));
      CHECK(verify_thm11(n, k));
      CHECK(verify_rosengren_form(n, k));
    }
  // a single block is the specialization of the one-parameter sum
  for (int n = 1; n <= 2; ++n)
    for (int r = 1; r <= 2; ++r) {
      GenRat rhs8 = thm8_rhs(n, r);
      CHECK(thm10_lhs(n, {r}).embed(rhs8.vars()) == rhs8);
    }
  CHECK_THROWS_AS(verify_thm10(2, {2, 2}), ResourceGuardExceeded);
  CHECK_THROWS_AS(verify_thm10(2, {0, 1}), std::invalid_argument);
}
