#include <doctest.h>

#include "cnp/json_io.hpp"
#include "cnp/macdonald.hpp"

using namespace cnp;

TEST_CASE("scalar round trip") {
  ExactScalar x = (one_minus_qt(1, 1) * qpow(-2) + Rational(3, 7)) / (ExactScalar(1) - qt(2, 3));
  Json j = to_json(x);
  CHECK(genrat_from_json(j) == x);
  CHECK(genrat_from_json(to_json(ExactScalar(0))) == ExactScalar(0));
  CHECK(genrat_from_json(Json::parse(j.dump())) == x);
}

TEST_CASE("expansion round trip") {
  for (const auto& lam : partitions_up_to(3, 2)) {
    const BasisExpansion& p = compute_P(lam, 2);
    BasisExpansion back = expansion_from_json(Json::parse(to_json(p).dump()));
    CHECK(back == p);
    CHECK(to_json(back).dump() == to_json(p).dump());
  }
}

TEST_CASE("pieri table round trip") {
  PieriExpansion e = expand_tworow_product(2, 1, 2);
  PieriExpansion back = pieri_from_json(to_json(e));
  CHECK(back.terms.size() == e.terms.size());
  for (const auto& [ij, c] : e.terms) CHECK(back.terms.at(ij) == c);
}

TEST_CASE("laurent round trip") {
  LaurentPoly f = to_laurent(compute_Q({1, 1}, 2));
  LaurentPoly g = laurent_from_json(to_json(f));
  CHECK(from_laurent(g) == from_laurent(f));
}

TEST_CASE("malformed input") {
  CHECK_THROWS(genrat_from_json(Json::parse(R"({"vars":[],"num":[],"den":[]})")));
  CHECK_THROWS(expansion_from_json(Json::parse(R"({"basis":"X","n":2,"coeffs":[]})")));
}
