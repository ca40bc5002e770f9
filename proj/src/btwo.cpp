#include "cnp/btwo.hpp"

#include <mutex>
#include <stdexcept>

#include "cnp/macdonald.hpp"
#include "cnp/pieri.hpp"

namespace cnp {

namespace {

std::string half(int d) { return d % 2 ? std::to_string(d) + "/2" : std::to_string(d / 2); }

Partition b2_key(const Exponent& a) { return {a[0] + a[1], a[0] - a[1]}; }

// s_i = y_i^{1/2}, so doubled exponents are plain exponents in s
const VarList& s_vars() {
  static const VarList v = make_vars({"s1", "s2", "a", "b"});
  return v;
}

GenRat s_mono(int e1, int e2, int ea = 0, int eb = 0) {
  Mono m;
  m[0] = int16_t(e1);
  m[1] = int16_t(e2);
  m[2] = int16_t(ea);
  m[3] = int16_t(eb);
  return GenRat::monomial(s_vars(), m);
}

GenRat lift(const ExactScalar& c) { return c.embed(s_vars()); }

// the polynomial part in s of a rational function whose denominator does not
// involve s1, s2
LaurentPoly to_b2_laurent(const GenRat& g) {
  LaurentPoly r(2);
  if (g.is_zero()) return r;
  Mono dm = g.den_monomial();
  std::vector<GenRat> den_parts;
  for (const auto& f : g.den_factors()) {
    const Poly& p = f.atom->poly;
    for (const auto& [m, c] : p.terms())
      if (m[0] != 0 || m[1] != 0) throw std::logic_error("B2 operator result is not a Laurent polynomial");
    den_parts.push_back(GenRat::from_poly(s_vars(), p).pow(f.mult));
  }
  Mono dab;
  dab[2] = dm[2];
  dab[3] = dm[3];
  den_parts.push_back(GenRat::monomial(s_vars(), dab));
  GenRat den = GenRat::product(den_parts);
  std::map<Exponent, std::vector<GenRat>> parts;
  for (const auto& [m, c] : g.num_terms()) {
    Mono ab_part;
    ab_part[2] = m[2];
    ab_part[3] = m[3];
    parts[{m[0] - dm[0], m[1] - dm[1]}].push_back(GenRat::monomial(s_vars(), ab_part, c));
  }
  for (const auto& [e, cs] : parts) {
    GenRat coef = GenRat::sum(cs) / den;
    if (!coef.is_zero()) r.add_term(e, coef.embed(ab_vars()));
  }
  return r;
}

GenRat ratio(const GenRat& w) {
  GenRat one(1);
  return (one - s_mono(0, 0, 0, 2) * w) / (one - w);
}

GenRat shifted(const LaurentPoly& f, int coord, int sigma) {
  std::vector<GenRat> terms;
  for (const auto& [e, c] : f.terms())
    terms.push_back(lift(c) * s_mono(e[0], e[1], sigma * e[size_t(coord)]));
  return GenRat::sum(terms);
}

BasisExpansion compute_b2_E_orbit(const Partition& mu) {
  LaurentPoly m = orbit_sum(mu, 2);
  std::vector<GenRat> terms;
  for (int sigma : {1, -1}) {
    // y1^sigma y2, y1^sigma / y2, y1^sigma
    GenRat y1 = s_mono(2 * sigma, 0);
    terms.push_back(ratio(y1 * s_mono(0, 2)) * ratio(y1 * s_mono(0, -2)) * ratio(y1) * shifted(m, 0, sigma));
    GenRat y2 = s_mono(0, 2 * sigma);
    terms.push_back(ratio(y2 * s_mono(2, 0)) * ratio(y2 * s_mono(-2, 0)) * ratio(y2) * shifted(m, 1, sigma));
  }
  return from_laurent(to_b2_laurent(GenRat::sum(terms)));
}

const BasisExpansion& b2_E_orbit(const Partition& mu) {
  static std::mutex mu_lock;
  static std::map<Partition, std::unique_ptr<BasisExpansion>> memo;
  {
    std::lock_guard<std::mutex> lk(mu_lock);
    auto it = memo.find(mu);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<BasisExpansion>(compute_b2_E_orbit(mu));
  std::lock_guard<std::mutex> lk(mu_lock);
  auto [it, fresh] = memo.emplace(mu, std::move(value));
  return *it->second;
}

}  // namespace

B2Weight B2Weight::from_coords2(int d1, int d2) {
  if (d2 < 0 || d1 < d2) throw std::invalid_argument("B2 weight is not dominant");
  if ((d1 - d2) % 2) throw std::invalid_argument("B2 weight coordinates mix integers and half-integers");
  return {d1, d2};
}

B2Weight B2Weight::fundamental(int m1, int m2) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("negative fundamental weight multiplicity");
  return {2 * m1 + m2, m2};
}

std::string B2Weight::str() const { return half(d1) + "," + half(d2); }

B2Weight b2_weight_of_c2(const Partition& lam) {
  Partition l = fit(lam, 2);
  return B2Weight::from_coords2(l[0] + l[1], l[0] - l[1]);
}

LaurentPoly c2_to_b2(const LaurentPoly& f) {
  if (f.n() != 2) throw std::invalid_argument("C2 polynomial expected");
  LaurentPoly r(2);
  for (const auto& [e, c] : f.terms()) r.add_term(b2_key(e), c);
  return r;
}

LaurentPoly b2_to_c2(const LaurentPoly& f) {
  if (f.n() != 2) throw std::invalid_argument("B2 polynomial expected");
  LaurentPoly r(2);
  for (const auto& [e, c] : f.terms()) {
    if ((e[0] - e[1]) % 2) throw std::invalid_argument("exponent outside the C2 image lattice");
    r.add_term({(e[0] + e[1]) / 2, (e[0] - e[1]) / 2}, c);
  }
  return r;
}

BasisExpansion b2_operator_apply(const BasisExpansion& f) {
  if (f.basis != Basis::m || f.n != 2) throw std::invalid_argument("B2 operator needs the m basis in rank 2");
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (const auto& [p, c] : f.coeffs) terms.push_back({c, &b2_E_orbit(p)});
  return linear_combination(terms, Basis::m, 2);
}

LaurentPoly b2_operator_apply(const LaurentPoly& f) {
  if (f.n() != 2) throw std::invalid_argument("B2 polynomial expected");
  return to_laurent(b2_operator_apply(from_laurent(f)));
}

ExactScalar b2_eigenvalue(const B2Weight& w) {
  return ab(w.d1, 6) + ab(-w.d1, 0) + ab(w.d2, 4) + ab(-w.d2, 2);
}

BasisExpansion b2_from_c2(const Partition& lam) {
  const BasisExpansion& p = compute_P(lam, 2);
  BasisExpansion r;
  r.n = 2;
  for (const auto& [k, c] : p.coeffs) r.add(b2_key(k), c);
  return r;
}

BasisExpansion b2_P(const B2Weight& w) { return b2_from_c2(w.c2_partition()); }

ExactScalar b2_q_normalization(const B2Weight& w) {
  int m1 = w.m1(), m2 = w.m2();
  ExactScalar q = q_sym(), t = t_sym();
  return qpoch(t, q, m1) / qpoch(q, q, m1) * qpoch(t, q, m2) / qpoch(q, q, m2) *
         qpoch(qt(m2, 2), q, m1) / qpoch(qt(m2 + 1, 1), q, m1);
}

BasisExpansion b2_Q(const B2Weight& w) { return b2_q_normalization(w) * b2_P(w); }

bool verify_b2_eigen(const Partition& lam) {
  BasisExpansion p = b2_from_c2(lam);
  return b2_operator_apply(p) == b2_eigenvalue(b2_weight_of_c2(lam)) * p;
}

bool verify_thm7(int lam1, int lam2) {
  if (lam2 < 0 || lam1 < lam2) throw std::invalid_argument("need lam1 >= lam2 >= 0");
  auto onerow = [](int r) { return b2_Q(B2Weight::fundamental(0, r)); };
  BasisExpansion lhs = m_product(onerow(lam1), onerow(lam2));
  std::vector<BasisExpansion> qs;
  std::vector<ExactScalar> cs;
  for (int i = 0; i <= lam2; ++i)
    for (int j = 0; i + j <= lam2; ++j) {
      cs.push_back(pieri_c(i, j, lam1, lam2, 2));
      qs.push_back(b2_Q(B2Weight::from_coords2(lam1 + lam2 - 2 * j, lam1 - lam2 + 2 * i)));
    }
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (size_t k = 0; k < qs.size(); ++k) terms.push_back({cs[k], &qs[k]});
  if (!(lhs == linear_combination(terms, Basis::m, 2))) return false;

  BasisExpansion target = b2_Q(B2Weight::from_coords2(lam1 + lam2, lam1 - lam2));
  qs.clear();
  cs.clear();
  for (int i = 0; i <= lam2; ++i)
    for (int j = 0; i + j <= lam2; ++j) {
      cs.push_back(inverse_C(i, j, lam1, lam2, 2));
      qs.push_back(m_product(onerow(lam1 + i - j), onerow(lam2 - i - j)));
    }
  terms.clear();
  for (size_t k = 0; k < qs.size(); ++k) terms.push_back({cs[k], &qs[k]});
  return target == linear_combination(terms, Basis::m, 2);
}

}  // namespace cnp
