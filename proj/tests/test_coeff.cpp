#include <doctest.h>

#include <random>

#include "cnp/cyclo.hpp"
#include "cnp/gcd.hpp"
#include "cnp/genrat.hpp"
#include "cnp/scalar.hpp"

using namespace cnp;

namespace {

VarList xyz() {
  static const VarList v = make_vars({"x", "y", "z"});
  return v;
}

GenRat X(const char* n, int k = 1) { return GenRat::var(xyz(), n, k); }

// f == g as functions, checked by cross multiplication of canonical parts
bool cross_equal(const GenRat& f, const GenRat& g) {
  Poly fn = Poly::from_terms({});
  auto lhs = f.num_primitive().scaled(1) * g.den_poly();
  auto rhs = g.num_primitive() * f.den_poly();
  Rational s = f.scale() / g.scale();
  if (f.is_zero() || g.is_zero()) return f.is_zero() == g.is_zero();
  return lhs.scaled(s.get_num()) == rhs.scaled(s.get_den());
}

Poly random_poly(std::mt19937& rng, int nvars, int terms, int maxdeg) {
  std::uniform_int_distribution<int> dc(-4, 4), de(0, maxdeg);
  std::vector<Poly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Mono m;
    for (int v = 0; v < nvars; ++v) m[v] = int16_t(de(rng));
    ts.push_back({m, dc(rng)});
  }
  return Poly::from_terms(ts);
}

GenRat random_rat(std::mt19937& rng) {
  Poly n = random_poly(rng, 3, 3, 2);
  Poly d;
  do d = random_poly(rng, 3, 3, 2); while (d.is_zero());
  return GenRat::fraction(xyz(), n, d);
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
  Poly x = Poly::var(0), y = Poly::var(1);
  Poly one = Poly::constant(1);
  Poly p = (x + y) * (x - y);
  CHECK(p == x * x - y * y);
  CHECK(*p.divexact(x + y) == x - y);
  CHECK_FALSE(p.divisible_by(x + one));
  CHECK((x + one).pow(3).size() == 4);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic(6) == std::vector<Integer>{1, -1, 1});
  CHECK(cyclotomic(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  // product over divisors of 30 gives z^30 - 1
  std::vector<Integer> prod{1};
  for (int d : divisors(30)) {
    const auto& c = cyclotomic(d);
    std::vector<Integer> r(prod.size() + c.size() - 1, 0);
    for (size_t i = 0; i < prod.size(); ++i)
      for (size_t j = 0; j < c.size(); ++j) r[i + j] += prod[i] * c[j];
    prod = r;
  }
  std::vector<Integer> want(31, 0);
  want[0] = -1;
  want[30] = 1;
  CHECK(prod == want);
}

TEST_CASE("binomial factorization reassembles") {
  // 1 - x^6 y^4 and 1 + x^3 y^-3 style binomials
  Poly one = Poly::constant(1);
  for (auto p : {one - Poly::monomial(Mono::var(0, 6) + Mono::var(1, 4)),
                 Poly::monomial(Mono::var(1, 3)) + Poly::monomial(Mono::var(0, 3)),
                 Poly::monomial(Mono::var(0, 4)) + one.scaled(1) * Poly::constant(1) +
                     Poly::monomial(Mono::var(0, 2))}) {
    LightFactors f = factor_light(p);
    Poly r = Poly::monomial(f.mono, f.unit);
    for (auto& [a, e] : f.atoms) {
      CHECK(a->irreducible());
      r *= a->poly.pow(e);
    }
    CHECK(r == p);
  }
}

TEST_CASE("exact division with a sparse quotient") {
  // (1 - x^8) / (1 + x^2 + x^4 + x^6): the dividend has fewer terms than the divisor
  Poly num = Poly::constant(1) - Poly::var(0, 8);
  Poly den = Poly::constant(1) + Poly::var(0, 2) + Poly::var(0, 4) + Poly::var(0, 6);
  auto q = num.divexact(den);
  REQUIRE(q.has_value());
  CHECK(*q == Poly::constant(1) - Poly::var(0, 2));
  CHECK(!den.divisible_by(num));
}

TEST_CASE("gcd") {
  std::mt19937 rng(7);
  for (int it = 0; it < 30; ++it) {
    Poly a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 3, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    Poly g = gcd(a * c, b * c);
    CHECK((a * c).divisible_by(g));
    CHECK((b * c).divisible_by(g));
    CHECK(g.divisible_by(c.primitive()));
  }
}

TEST_CASE("ratfun examples") {
  GenRat x = X("x"), one(1);
  CHECK(x / (one - x) + one == one / (one - x));
  VarList abx = make_vars({"a", "b", "x"});
  GenRat a = GenRat::var(abx, "a"), b = GenRat::var(abx, "b"), xx = GenRat::var(abx, "x");
  GenRat g = (one - a * a * xx) / (one - b * b * xx);
  CHECK(g * (one / g) == one);
  GenRat h = (one - a.pow(4)) / (one - a.pow(2)) - (one + a.pow(2));
  CHECK(h.is_zero());
  CHECK_THROWS_AS(one / GenRat(0), std::domain_error);
  CHECK_THROWS_AS(x + a, std::invalid_argument);
}

TEST_CASE("canonical form uniqueness") {
  std::mt19937 rng(11);
  for (int it = 0; it < 40; ++it) {
    Poly p = random_poly(rng, 3, 3, 2), q = random_poly(rng, 3, 3, 2), r = random_poly(rng, 3, 3, 2);
    if (p.is_zero() || r.is_zero() || q.is_zero()) continue;
    GenRat lhs = GenRat::fraction(xyz(), p * q, p * r);
    GenRat rhs = GenRat::fraction(xyz(), q, r);
    CHECK(lhs == rhs);
    CHECK(lhs.den_poly() == rhs.den_poly());
    CHECK(lhs.num_terms() == rhs.num_terms());
  }
}

TEST_CASE("ring axioms") {
  std::mt19937 rng(3);
  for (int it = 0; it < 25; ++it) {
    GenRat f = random_rat(rng), g = random_rat(rng), h = random_rat(rng);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(cross_equal(f * (g + h), f * g + f * h));
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("qpoch") {
  VarList v = make_vars({"u", "q"});
  GenRat u = GenRat::var(v, "u"), q = GenRat::var(v, "q"), one(1);
  CHECK(qpoch(u, q, 0) == one);
  CHECK(qpoch(u, q, 2) == (one - u) * (one - u * q));
  CHECK(qpoch(tpow(1), qpow(1), 1) == one - tpow(1));
  for (int k = 0; k <= 8; ++k) CHECK(qpoch(u, q, k + 1) == qpoch(u, q, k) * (one - u * q.pow(k)));
  CHECK_THROWS_AS(qpoch(u, q, -1), std::invalid_argument);
}

TEST_CASE("substitute") {
  VarList v = make_vars({"u", "x", "t", "z", "q"});
  GenRat u = GenRat::var(v, "u"), x = GenRat::var(v, "x"), t = GenRat::var(v, "t"),
         z = GenRat::var(v, "z"), q = GenRat::var(v, "q"), one(1);
  CHECK((one / (one - u * x)).substitute({{"u", GenRat(0)}}) == one);
  GenRat f = (one - t * u / x) * (one - t * u * x);
  CHECK(f.substitute({{"u", z}, {"t", q}}) == (one - q * z / x) * (one - q * z * x));
  GenRat r = one / (one - u / x);
  CHECK_THROWS_AS(r.substitute({{"u", x}}), std::domain_error);
  // composition
  std::mt19937 rng(5);
  for (int it = 0; it < 10; ++it) {
    Poly n = random_poly(rng, 3, 3, 2), d = random_poly(rng, 3, 3, 2);
    if (d.is_zero()) continue;
    GenRat g = GenRat::fraction(v, n, d);
    GenRat w = z * z + q;
    try {
      GenRat a1 = g.substitute({{"u", t}}).substitute({{"t", w}});
      GenRat a2 = g.substitute({{"u", w}, {"t", w}});
      CHECK(a1 == a2);
    } catch (const std::domain_error&) {
    }
  }
}

TEST_CASE("evaluate agrees with arithmetic") {
  std::mt19937 rng(9);
  for (int it = 0; it < 20; ++it) {
    GenRat f = random_rat(rng), g = random_rat(rng);
    std::map<std::string, Rational> pt{{"x", Rational(3, 7)}, {"y", Rational(-5, 2)}, {"z", Rational(11, 13)}};
    try {
      Rational fv = f.evaluate(pt), gv = g.evaluate(pt);
      CHECK((f + g).evaluate(pt) == fv + gv);
      CHECK((f * g).evaluate(pt) == fv * gv);
    } catch (const std::domain_error&) {
    }
  }
}
