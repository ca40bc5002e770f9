#include "cnp/gcd.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace cnp {

namespace {

Integer isqrt(const Integer& x) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Poly normalize(const Poly& p) { return p.lc_sign() < 0 ? -p : p; }

// recover a polynomial in `v` from its value at v = x using balanced digits
Poly interpolate(const Poly& h, const Integer& x, int v) {
  std::vector<Poly::Term> out;
  Integer half = x / 2;
  for (const auto& t : h.terms()) {
    Integer c = t.c;
    int k = 0;
    while (c != 0) {
      Integer d = c % x;  // truncated, sign follows c
      if (d > half) d -= x;
      if (d < -half) d += x;
      if (d != 0) out.push_back({t.m + Mono::var(v, k), d});
      c = (c - d) / x;
      ++k;
    }
  }
  return Poly::from_terms(std::move(out));
}

std::vector<int> vars_of(const Poly& f, const Poly& g) {
  Mono u = Mono::max(f.used_vars(), g.used_vars());
  std::vector<int> r;
  for (int i = 0; i < kMaxVars; ++i)
    if (u[i]) r.push_back(i);
  return r;
}

// heuristic gcd; the result may carry a sign
std::optional<Poly> heu(const Poly& f, const Poly& g, const std::vector<int>& vars, size_t pos) {
  if (pos == vars.size()) {
    Integer a = f.constant_term(), b = g.constant_term();
    Integer h;
    mpz_gcd(h.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Poly::constant(h);
  }
  int v = vars[pos];
  if (f.degree_in(v) == 0 && g.degree_in(v) == 0) return heu(f, g, vars, pos + 1);
  Integer c;
  {
    Integer cf = f.content(), cg = g.content();
    mpz_gcd(c.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  }
  if (c != 1) {
    auto h = heu(f.divexact_int(c), g.divexact_int(c), vars, pos);
    if (!h) return h;
    return h->scaled(c);
  }
  Integer fn = f.max_norm(), gn = g.max_norm();
  Integer B = 2 * std::min(fn, gn) + 29;
  Integer lf = abs(f.lt().c), lg = abs(g.lt().c);
  Integer x = std::max(std::min(B, Integer(99 * isqrt(B))),
                       Integer(2 * std::min(Integer(fn / lf), Integer(gn / lg)) + 2));
  for (int i = 0; i < 6; ++i) {
    Poly ff = f.eval_var(v, x), gg = g.eval_var(v, x);
    if (!ff.is_zero() && !gg.is_zero()) {
      auto hh = heu(ff, gg, vars, pos + 1);
      if (hh) {
        Poly h = interpolate(*hh, x, v);
        if (!h.is_zero()) {
          h = h.primitive();
          if (f.divisible_by(h) && g.divisible_by(h)) return h;
        }
      }
    }
    x = 73794 * x * isqrt(isqrt(x)) / 27011;
  }
  return std::nullopt;
}

Poly leading_in(const Poly& p, int v, int& deg) {
  deg = p.degree_in(v);
  return p.coeff_in(v, deg);
}

Poly content_in(const Poly& p, int v) {
  int d = p.degree_in(v);
  Poly c;
  for (int k = 0; k <= d; ++k) {
    Poly ck = p.coeff_in(v, k);
    if (ck.is_zero()) continue;
    c = gcd(c, ck);
    if (c.is_one()) break;
  }
  return c;
}

Poly prem(Poly F, const Poly& G, int v) {
  int dg = 0;
  Poly lg = leading_in(G, v, dg);
  while (!F.is_zero()) {
    int df = 0;
    Poly lf = leading_in(F, v, df);
    if (df < dg) break;
    F = F * lg - (lf * G).shift(Mono::var(v, df - dg));
  }
  return F;
}

Poly prs_gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  auto vars = vars_of(f, g);
  if (vars.empty()) return gcd(f, g);
  int v = vars.front();
  if (f.degree_in(v) == 0) return gcd(f, content_in(g, v));
  if (g.degree_in(v) == 0) return gcd(g, content_in(f, v));
  Poly cf = content_in(f, v), cg = content_in(g, v);
  Poly c = gcd(cf, cg);
  Poly F = *f.divexact(cf), G = *g.divexact(cg);
  if (F.degree_in(v) < G.degree_in(v)) std::swap(F, G);
  while (!G.is_zero() && G.degree_in(v) > 0) {
    Poly R = prem(F, G, v);
    F = G;
    if (R.is_zero()) {
      G = R;
    } else {
      G = *R.divexact(content_in(R, v));
    }
  }
  Poly H;
  if (G.is_zero()) {
    H = *F.divexact(content_in(F, v));
  } else {
    H = Poly::constant(1);  // a nonzero remainder free of v
  }
  return normalize(c * H);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  Mono m = Mono::min(a.min_exponents(), b.min_exponents());
  Integer ca = a.content(), cb = b.content(), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  Poly f = a.shift(Mono() - a.min_exponents()).divexact_int(ca);
  Poly g = b.shift(Mono() - b.min_exponents()).divexact_int(cb);
  Poly unit = Poly::monomial(m, c);
  if (f.is_constant() || g.is_constant()) return unit;
  if (f.lc_sign() < 0) f = -f;
  if (g.lc_sign() < 0) g = -g;
  if (f == g) return unit * f;
  auto vars = vars_of(f, g);
  if (auto h = heu(f, g, vars, 0)) return unit * normalize(*h);
  return unit * prs_gcd(f, g);
}

}  // namespace cnp
