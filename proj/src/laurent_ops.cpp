#include "cnp/laurent_ops.hpp"

#include <algorithm>
#include <stdexcept>

namespace cnp {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

Poly laurent_div_binomial(const Poly& p, const Mono& A, const Mono& B) {
  if (p.is_zero()) return p;
  Mono w = A - B;
  int piv = -1;
  for (int i = 0; i < kMaxVars; ++i)
    if (w[i]) {
      piv = i;
      break;
    }
  if (piv < 0) throw std::domain_error("division by zero binomial");
  bool neg = w[piv] < 0;
  Mono lo = neg ? A : B;  // p / (x^A - x^B) = +-x^{-lo} * p / (z - 1)
  if (neg) w = w.scaled(-1);
  struct Entry {
    Mono key;
    long k;
    size_t idx;
  };
  const auto& t = p.terms();
  std::vector<Entry> es;
  es.reserve(t.size());
  for (size_t i = 0; i < t.size(); ++i) {
    Mono e = t[i].m - lo;
    long k = floor_div(e[piv], w[piv]);
    es.push_back({e - w.scaled(int(k)), k, i});
  }
  std::sort(es.begin(), es.end(), [](const Entry& x, const Entry& y) {
    if (x.key != y.key) return lex_less(x.key, y.key);
    return x.k > y.k;
  });
  std::vector<Poly::Term> out;
  out.reserve(t.size());
  size_t i = 0;
  Integer q;
  while (i < es.size()) {
    size_t j = i;
    while (j < es.size() && es[j].key == es[i].key) ++j;
    // terms es[i..j) have decreasing k; (z - 1) Q = P gives q_{k-1} = p_k + q_k
    q = 0;
    size_t r = i;
    long kmax = es[i].k, kmin = es[j - 1].k;
    for (long k = kmax; k > kmin; --k) {
      if (r < j && es[r].k == k) q += t[es[r++].idx].c;
      if (q != 0) out.push_back({es[i].key + w.scaled(int(k - 1)), neg ? Integer(-q) : q});
    }
    // remaining p_kmin must cancel q_kmin
    Integer last = t[es[j - 1].idx].c + q;
    if (last != 0) throw std::logic_error("inexact Laurent division by a binomial");
    i = j;
  }
  return Poly::from_terms(std::move(out));
}

Poly flip_vars(const Poly& p, unsigned mask) {
  std::vector<Poly::Term> r = p.terms();
  for (auto& t : r)
    for (int i = 0; i < kMaxVars; ++i)
      if (mask & (1u << i)) t.m[i] = int16_t(-t.m[i]);
  return Poly::from_terms(std::move(r));
}

Poly antisymmetrize_signs(const Poly& p, int n) {
  std::vector<Poly::Term> all;
  all.reserve(p.size() << n);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool odd = __builtin_popcount(mask) & 1;
    for (const auto& t : p.terms()) {
      Poly::Term s = t;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.m[i] = int16_t(-s.m[i]);
      if (odd) s.c = -s.c;
      all.push_back(std::move(s));
    }
  }
  return Poly::from_terms(std::move(all));
}

Poly translate(const Poly& p, int n, int svar) {
  std::vector<Poly::Term> r = p.terms();
  for (auto& t : r) {
    int d = 0;
    for (int i = 0; i < n; ++i) d += t.m[i];
    t.m[svar] = int16_t(t.m[svar] + d);
  }
  return Poly::from_terms(std::move(r));
}

Poly slice(const Poly& p, int n, const Mono& e) {
  std::vector<Poly::Term> r;
  for (const auto& t : p.terms()) {
    bool match = true;
    for (int i = 0; i < n && match; ++i) match = t.m[i] == e[i];
    if (!match) continue;
    Poly::Term s = t;
    for (int i = 0; i < n; ++i) s.m[i] = 0;
    r.push_back(std::move(s));
  }
  return Poly::from_terms(std::move(r));
}

}  // namespace cnp
