#include <doctest.h>

#include "cnp/btwo.hpp"
#include "cnp/macdonald.hpp"

using namespace cnp;

namespace {
ExactScalar one() { return ExactScalar(1); }

// direct substitution x1 = (y1 y2)^{1/2}, x2 = (y1/y2)^{1/2} on a C2 Laurent polynomial
LaurentPoly substitute_y(const LaurentPoly& f) {
  LaurentPoly r(2);
  for (const auto& [e, c] : f.terms()) {
    // x1^a x2^b = y1^{(a+b)/2} y2^{(a-b)/2}
    r.add_term({e[0] + e[1], e[0] - e[1]}, c);
  }
  return r;
}
}  // namespace

TEST_CASE("B2 weights") {
  CHECK(B2Weight::fundamental(0, 1).str() == "1/2,1/2");
  CHECK(B2Weight::fundamental(1, 0).str() == "1,0");
  CHECK(B2Weight::fundamental(2, 3).c2_partition() == Partition{5, 2});
  CHECK(b2_weight_of_c2({1, 1}).str() == "1,0");
  CHECK(b2_weight_of_c2({1, 0}).str() == "1/2,1/2");
  CHECK(b2_weight_of_c2({3, 1}).m1() == 1);
  CHECK(b2_weight_of_c2({3, 1}).m2() == 2);
  CHECK_THROWS_AS(B2Weight::from_coords2(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(B2Weight::from_coords2(1, 3), std::invalid_argument);
}

TEST_CASE("B2 operator on constants and orbit sums") {
  LaurentPoly one_poly = LaurentPoly::constant(2, one());
  ExactScalar t = t_sym();
  CHECK(b2_operator_apply(one_poly) ==
        LaurentPoly::constant(2, (t + one()) * (t * t + one())));
  CHECK(b2_eigenvalue(B2Weight{}) == (t + one()) * (t * t + one()));
  LaurentPoly bad(2);
  bad.add_term({2, 0}, one());
  CHECK_THROWS_AS(b2_operator_apply(bad), std::invalid_argument);
}

TEST_CASE("C2 to B2 correspondence") {
  CHECK(b2_from_c2({0, 0}) == m_basis({0, 0}, 2));
  // lam = (1,1): weight e_1 in y, i.e. doubled (2, 0)
  BasisExpansion p11 = b2_from_c2({1, 1});
  CHECK(p11.ordered_keys().front() == Partition{2, 0});
  CHECK(to_laurent(p11) == substitute_y(to_laurent(compute_P({1, 1}, 2))));
  // lam = (1,0): the minuscule orbit sum, doubled (1, 1)
  CHECK(b2_from_c2({1, 0}) == m_basis({1, 1}, 2));
  CHECK(b2_to_c2(c2_to_b2(to_laurent(compute_P({3, 1}, 2)))) == to_laurent(compute_P({3, 1}, 2)));
}

TEST_CASE("B2 eigenvectors") {
  for (const auto& lam : partitions_up_to(6, 2)) {
    CAPTURE(partition_str(lam));
    CHECK(verify_b2_eigen(lam));
  }
  // an orbit sum that is not a Macdonald polynomial
  BasisExpansion m = m_basis({2, 2}, 2);
  CHECK_FALSE(b2_operator_apply(m) == b2_eigenvalue(B2Weight::from_coords2(2, 2)) * m);
}

TEST_CASE("one-row generating function") {
  auto series = onerow_Q_series(5, 2);
  for (int r = 0; r <= 5; ++r) {
    BasisExpansion qb = b2_Q(B2Weight::fundamental(0, r));
    CHECK(b2_to_c2(to_laurent(qb)) == to_laurent(series[size_t(r)]));
  }
}

TEST_CASE("B2 product and inverse expansions") {
  CHECK(verify_thm7(3, 0));
  CHECK(verify_thm7(1, 1));
  CHECK(verify_thm7(3, 2));
  CHECK_THROWS_AS(verify_thm7(1, 2), std::invalid_argument);
}
