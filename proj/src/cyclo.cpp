#include "cnp/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cnp {

namespace {

using UPoly = std::vector<Integer>;  // low to high

// exact division by a monic polynomial; empty optional if remainder nonzero
std::optional<UPoly> upoly_div_monic(UPoly a, const UPoly& m) {
  size_t dm = m.size() - 1;
  if (a.size() < m.size()) {
    for (auto& c : a)
      if (c != 0) return std::nullopt;
    return UPoly{0};
  }
  UPoly q(a.size() - dm, 0);
  for (size_t j = a.size() - 1; j + 1 > dm; --j) {
    Integer c = a[j];
    if (c == 0) {
      if (j == dm) break;
      continue;
    }
    q[j - dm] = c;
    for (size_t i = 0; i <= dm; ++i) a[j - dm + i] -= c * m[i];
    if (j == dm) break;
  }
  for (size_t i = 0; i < dm; ++i)
    if (a[i] != 0) return std::nullopt;
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

struct CycloCache {
  std::mutex mu;
  std::map<int, UPoly> table;
};

CycloCache& cache() {
  static CycloCache c;
  return c;
}

UPoly compute_cyclotomic(int d) {
  // z^d - 1 divided by Phi_e for proper divisors e
  UPoly p(size_t(d) + 1, 0);
  p[0] = -1;
  p[size_t(d)] = 1;
  for (int e : divisors(d)) {
    if (e == d) continue;
    auto q = upoly_div_monic(p, cyclotomic(e));
    if (!q) throw std::logic_error("cyclotomic construction failed");
    p = *q;
  }
  return p;
}

int first_nonzero(const Mono& w) {
  for (int i = 0; i < kMaxVars; ++i)
    if (w[i]) return i;
  return -1;
}

int mono_gcd(const Mono& w) {
  int g = 0;
  for (int i = 0; i < kMaxVars; ++i) g = std::gcd(g, std::abs(int(w[i])));
  return g;
}

Mono divide_mono(const Mono& w, int g) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = int16_t(w[i] / g);
  return r;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// If every term of p lies on one line base + k*w with w primitive and
// normalized, return (w, base exponent of k = 0, coefficient vector in k).
struct LineForm {
  Mono w;
  Mono base;
  UPoly f;
};

std::optional<LineForm> as_line(const Poly& p) {
  if (p.size() < 2) return std::nullopt;
  const auto& t = p.terms();
  Mono dir = t[0].m - t[1].m;
  int g = mono_gcd(dir);
  Mono w = divide_mono(dir, g);
  int piv = first_nonzero(w);
  if (w[piv] < 0) w = w.scaled(-1);
  // every term difference must be a multiple of w
  long kmin = 0, kmax = 0;
  std::vector<long> ks(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    Mono dd = t[i].m - t[0].m;
    if (dd[piv] % w[piv] != 0) return std::nullopt;
    long k = dd[piv] / w[piv];
    if (w.scaled(int(k)) != dd) return std::nullopt;
    ks[i] = k;
    kmin = std::min(kmin, k);
    kmax = std::max(kmax, k);
  }
  LineForm lf;
  lf.w = w;
  lf.base = t[0].m + w.scaled(int(kmin));
  lf.f.assign(size_t(kmax - kmin + 1), 0);
  for (size_t i = 0; i < t.size(); ++i) lf.f[size_t(ks[i] - kmin)] = t[i].c;
  return lf;
}

}  // namespace

std::vector<int> divisors(int n) {
  std::vector<int> r;
  for (int i = 1; i <= n; ++i)
    if (n % i == 0) r.push_back(i);
  return r;
}

int euler_phi(int d) {
  int r = d, m = d;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      r -= r / p;
    }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<Integer>& cyclotomic(int d) {
  if (d <= 0) throw std::invalid_argument("cyclotomic index must be positive");
  auto& c = cache();
  {
    std::lock_guard<std::mutex> lk(c.mu);
    auto it = c.table.find(d);
    if (it != c.table.end()) return it->second;
  }
  UPoly p;
  if (d == 1) {
    p = {-1, 1};
  } else {
    p = compute_cyclotomic(d);
  }
  std::lock_guard<std::mutex> lk(c.mu);
  return c.table.emplace(d, std::move(p)).first->second;
}

AtomPtr make_cyclo_atom(int d, const Mono& w) {
  auto a = std::make_shared<Atom>();
  a->d = d;
  a->w = w;
  const auto& c = cyclotomic(d);
  int ph = int(c.size()) - 1;
  Mono wn = w.neg();
  std::vector<Poly::Term> terms;
  for (int i = 0; i <= ph; ++i)
    if (c[size_t(i)] != 0) terms.push_back({w.scaled(i) + wn.scaled(ph), c[size_t(i)]});
  Poly p = Poly::from_terms(std::move(terms));
  a->sign = p.lc_sign();
  a->poly = a->sign < 0 ? -p : p;
  return a;
}

AtomPtr make_opaque_atom(const Poly& p) {
  auto a = std::make_shared<Atom>();
  a->d = 0;
  a->poly = p;
  return a;
}

bool same_atom(const Atom& a, const Atom& b) {
  if (&a == &b) return true;
  if (a.d > 0 && b.d > 0) return a.d == b.d && a.w == b.w;
  return a.poly == b.poly;
}

int compare_atoms(const Atom& a, const Atom& b) {
  if (same_atom(a, b)) return 0;
  int c = Poly::compare(a.poly, b.poly);
  if (c) return c;
  return a.d < b.d ? -1 : (a.d > b.d ? 1 : 0);
}

LightFactors factor_light(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("factor_light of zero");
  LightFactors lf;
  Integer c = p.content();
  if (p.lc_sign() < 0) c = -c;
  lf.unit = c;
  Poly q = p.divexact_int(c);
  lf.mono = q.min_exponents();
  q = q.shift(Mono() - lf.mono);
  if (q.is_constant()) return lf;

  if (auto line = as_line(q)) {
    // try to peel off cyclotomic factors in the monomial w
    UPoly f = line->f;
    std::vector<std::pair<AtomPtr, int>> found;
    int deg = int(f.size()) - 1;
    // candidates: Phi_d with phi(d) <= deg; roots of unity of order d need
    // d with phi(d) <= deg, and such d satisfy d <= 2 deg^2 + 2 roughly
    int dmax = std::max(2, 2 * deg * deg + 2);
    std::vector<int> cands;
    if (q.size() == 2) {
      cands = divisors(2 * deg);
    } else {
      for (int d = 1; d <= dmax; ++d) cands.push_back(d);
    }
    for (int d : cands) {
      if (f.size() <= 1) break;
      int ph = euler_phi(d);
      if (ph > int(f.size()) - 1) continue;
      int mult = 0;
      while (f.size() > 1) {
        auto r = upoly_div_monic(f, cyclotomic(d));
        if (!r) break;
        f = *r;
        ++mult;
      }
      if (mult) found.push_back({make_cyclo_atom(d, line->w), mult});
    }
    if (f.size() == 1 && (f[0] == 1 || f[0] == -1)) {
      lf.atoms = std::move(found);
      std::sort(lf.atoms.begin(), lf.atoms.end(),
                [](const auto& a, const auto& b) { return compare_atoms(*a.first, *b.first) < 0; });
      // the sign of the whole product is fixed by the leading coefficient
      return lf;
    }
    if (!found.empty()) {
      // divide the identified part out and keep the rest opaque
      Poly rest = q;
      for (auto& [a, m] : found)
        for (int k = 0; k < m; ++k) rest = *divide_by_atom(rest, *a);
      Integer rc = rest.content();
      if (rest.lc_sign() < 0) rc = -rc;
      rest = rest.divexact_int(rc);
      lf.unit *= rc;
      Mono rm = rest.min_exponents();
      rest = rest.shift(Mono() - rm);
      lf.mono = lf.mono + rm;
      lf.atoms = std::move(found);
      if (!rest.is_constant()) lf.atoms.push_back({make_opaque_atom(rest), 1});
      std::sort(lf.atoms.begin(), lf.atoms.end(),
                [](const auto& a, const auto& b) { return compare_atoms(*a.first, *b.first) < 0; });
      return lf;
    }
  }
  lf.atoms.push_back({make_opaque_atom(q), 1});
  return lf;
}

std::optional<Poly> divide_by_atom(const Poly& p, const Atom& a) {
  if (p.is_zero()) return Poly();
  if (a.d == 0) return p.divexact(a.poly);
  const auto& phi_c = cyclotomic(a.d);
  int ph = int(phi_c.size()) - 1;
  const Mono& w = a.w;
  int piv = first_nonzero(w);
  struct Entry {
    Mono key;
    long k;
    size_t idx;
  };
  const auto& t = p.terms();
  std::vector<Entry> es;
  es.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    long k = floor_div(t[i].m[piv], w[piv]);
    es.push_back({t[i].m - w.scaled(int(k)), k, i});
  }
  std::sort(es.begin(), es.end(), [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return lex_less(x.key, y.key);
    return x.k < y.k;
  });
  std::vector<Poly::Term> out;
  out.reserve(t.size());
  Mono unshift = w.neg().scaled(ph);
  std::vector<Integer> A;
  size_t i = 0;
  while (i < es.size()) {
    size_t j = i;
    while (j < es.size() && es[j].key == es[i].key) ++j;
    long kmin = es[i].k, kmax = es[j - 1].k;
    long len = kmax - kmin + 1;
    if (len - 1 < ph) return std::nullopt;
    A.assign(size_t(len), 0);
    for (size_t r = i; r < j; ++r) A[size_t(es[r].k - kmin)] = t[es[r].idx].c;
    for (long jj = len - 1; jj >= ph; --jj) {
      if (A[size_t(jj)] == 0) continue;
      Integer qc = A[size_t(jj)];
      for (int s = 0; s <= ph; ++s)
        if (phi_c[size_t(s)] != 0) A[size_t(jj - ph + s)] -= qc * phi_c[size_t(s)];
      Mono m = es[i].key + w.scaled(int(kmin + jj - ph)) - unshift;
      if (!m.nonneg()) return std::nullopt;
      out.push_back({m, a.sign < 0 ? Integer(-qc) : qc});
    }
    for (long s = 0; s < ph; ++s)
      if (A[size_t(s)] != 0) return std::nullopt;
    i = j;
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace cnp
