#include "cnp/weyl.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cnp/laurent_ops.hpp"

namespace cnp {

Exponent SignedPerm::apply(const Exponent& e) const {
  Exponent r(e.size(), 0);
  for (size_t i = 0; i < e.size(); ++i) r[size_t(perm[i])] = signs[i] * e[i];
  return r;
}

int SignedPerm::det() const {
  int s = 1;
  std::vector<int> p = perm;
  for (size_t i = 0; i < p.size(); ++i)
    while (p[i] != int(i)) {
      std::swap(p[i], p[size_t(p[i])]);
      s = -s;
    }
  for (int g : signs) s *= g;
  return s;
}

bool is_partition(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) return false;
    if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
  }
  return true;
}

Partition fit(const Partition& p, int n) {
  if (!is_partition(p)) throw std::invalid_argument("not a partition: " + partition_str(p));
  Partition r = p;
  while (int(r.size()) > n && r.back() == 0) r.pop_back();
  if (int(r.size()) > n) throw std::invalid_argument("partition has more than n parts");
  r.resize(size_t(n), 0);
  return r;
}

int weight_size(const Exponent& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad partition: " + s);
    p.push_back(v);
  }
  if (p.empty() || !is_partition(p)) throw std::invalid_argument("bad partition: " + s);
  return p;
}

std::string partition_str(const Partition& p) {
  std::string r = "(";
  for (size_t i = 0; i < p.size(); ++i) r += (i ? "," : "") + std::to_string(p[i]);
  return r + ")";
}

namespace {

void gen_parts(int s, int n, int maxpart, Partition& cur, std::vector<Partition>& out) {
  if (int(cur.size()) == n) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (int v = std::min(s, maxpart); v >= 0; --v) {
    cur.push_back(v);
    gen_parts(s - v, n, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int s, int n) {
  std::vector<Partition> out;
  Partition cur;
  gen_parts(s, n, s, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int s, int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= s; ++k)
    for (auto& p : partitions_of(k, n)) out.push_back(p);
  return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam, int n) {
  Partition a = fit(mu, n), b = fit(lam, n);
  int s = 0;
  for (int i = 0; i < n; ++i) {
    s += b[size_t(i)] - a[size_t(i)];
    if (s < 0) return false;
  }
  return s % 2 == 0;
}

std::vector<Partition> dominated(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  int size = weight_size(l);
  std::vector<Partition> out;
  for (int k = size % 2; k <= size; k += 2)
    for (auto& p : partitions_of(k, n))
      if (dominance_leq(p, l, n)) out.push_back(p);
  std::sort(out.begin(), out.end(), std::greater<Partition>());
  return out;
}

std::vector<SignedPerm> weyl_group(int n) {
  std::vector<SignedPerm> out;
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[size_t(i)] = i;
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      SignedPerm w;
      w.perm = p;
      w.signs.assign(size_t(n), 1);
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) w.signs[size_t(i)] = -1;
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Exponent> orbit(const Partition& lam, int n) {
  Exponent start = fit(lam, n);
  std::set<Exponent> seen{start};
  std::deque<Exponent> queue{start};
  while (!queue.empty()) {
    Exponent e = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Exponent f = e;
      if (i + 1 < n) {
        std::swap(f[size_t(i)], f[size_t(i + 1)]);
      } else {
        f[size_t(i)] = -f[size_t(i)];
      }
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  return {seen.begin(), seen.end()};
}

Partition dominant_of(const Exponent& e) {
  Partition p(e.size());
  for (size_t i = 0; i < e.size(); ++i) p[i] = std::abs(e[i]);
  std::sort(p.begin(), p.end(), std::greater<int>());
  return p;
}

std::vector<Exponent> positive_roots(int n) {
  std::vector<Exponent> r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Exponent a(size_t(n), 0), b(size_t(n), 0);
      a[size_t(i)] = 1;
      a[size_t(j)] = -1;
      b[size_t(i)] = 1;
      b[size_t(j)] = 1;
      r.push_back(a);
      r.push_back(b);
    }
  for (int i = 0; i < n; ++i) {
    Exponent a(size_t(n), 0);
    a[size_t(i)] = 2;
    r.push_back(a);
  }
  return r;
}

Exponent rho(int n) {
  Exponent r(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) r[size_t(i)] = n - i;
  return r;
}

LaurentPoly LaurentPoly::constant(int n, const ExactScalar& c) {
  LaurentPoly p(n);
  p.add_term(Exponent(size_t(n), 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Exponent& e, const ExactScalar& c) {
  LaurentPoly p(int(e.size()));
  p.add_term(e, c);
  return p;
}

ExactScalar LaurentPoly::coeff(const Exponent& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? ExactScalar(0) : it->second;
}

ExactScalar LaurentPoly::constant_term() const { return coeff(Exponent(size_t(n_), 0)); }

void LaurentPoly::add_term(const Exponent& e, const ExactScalar& c) {
  if (int(e.size()) != n_) throw std::invalid_argument("exponent length does not match rank");
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  if (r.n_ == 0 && r.t_.empty()) r.n_ = b.n_;
  for (const auto& [e, c] : b.t_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  std::map<Exponent, std::vector<ExactScalar>> acc;
  for (const auto& [e, c] : a.t_)
    for (const auto& [f, d] : b.t_) {
      Exponent g(e.size());
      for (size_t i = 0; i < e.size(); ++i) g[i] = e[i] + f[i];
      acc[g].push_back(c * d);
    }
  LaurentPoly r(std::max(a.n_, b.n_));
  for (auto& [g, cs] : acc) {
    ExactScalar s = ExactScalar::sum(cs);
    if (!s.is_zero()) r.t_.emplace(g, s);
  }
  return r;
}

LaurentPoly operator*(const ExactScalar& c, const LaurentPoly& a) {
  LaurentPoly r(a.n_);
  if (c.is_zero()) return r;
  for (const auto& [e, d] : a.t_) r.t_.emplace(e, c * d);
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  auto i = a.t_.begin();
  auto j = b.t_.begin();
  for (; i != a.t_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

LaurentPoly LaurentPoly::act(const SignedPerm& w) const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : t_) r.t_.emplace(w.apply(e), c);
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : t_) {
    Exponent f = e;
    for (auto& v : f) v = -v;
    r.t_.emplace(f, c);
  }
  return r;
}

bool LaurentPoly::is_w_invariant() const {
  // generators: adjacent transpositions and the last sign change
  for (const auto& [e, c] : t_)
    for (int i = 0; i < n_; ++i) {
      Exponent f = e;
      if (i + 1 < n_) {
        std::swap(f[size_t(i)], f[size_t(i + 1)]);
      } else {
        f[size_t(i)] = -f[size_t(i)];
      }
      auto it = t_.find(f);
      if (it == t_.end() || it->second != c) return false;
    }
  return true;
}

LaurentPoly LaurentPoly::map_coeffs(const std::function<ExactScalar(const ExactScalar&)>& f) const {
  LaurentPoly r(n_);
  for (const auto& [e, c] : t_) r.add_term(e, f(c));
  return r;
}

std::string LaurentPoly::str() const {
  if (t_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")";
    for (int i = 0; i < n_; ++i)
      if (e[size_t(i)]) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(e[size_t(i)]);
  }
  return s;
}

LaurentPoly orbit_sum(const Partition& lam, int n) {
  LaurentPoly r(n);
  for (const auto& e : orbit(lam, n)) r.add_term(e, ExactScalar(1));
  return r;
}

namespace {

Mono to_mono(const Exponent& e) {
  Mono m;
  for (size_t i = 0; i < e.size(); ++i) m[int(i)] = int16_t(e[i]);
  return m;
}

// a polynomial in the variable at slot `slot` read as a scalar in a
ExactScalar poly_in_a(const Poly& p, int slot) {
  std::vector<Poly::Term> ts;
  for (const auto& t : p.terms()) {
    Mono m;
    m[0] = t.m[slot];
    ts.push_back({m, t.c});
  }
  Poly q = Poly::from_terms(std::move(ts));
  Mono lo = q.min_exponents();
  return ExactScalar::from_poly(ab_vars(), q.shift(Mono() - lo)) * ExactScalar::monomial(ab_vars(), lo);
}

}  // namespace

LaurentPoly weyl_character(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  Exponent r = rho(n);
  Exponent lr(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) lr[size_t(i)] = l[size_t(i)] + r[size_t(i)];
  std::vector<Poly::Term> ts;
  for (const auto& w : weyl_group(n)) ts.push_back({to_mono(w.apply(lr)) + to_mono(r), w.det()});
  Poly A = Poly::from_terms(std::move(ts));
  for (const auto& a : positive_roots(n)) A = laurent_div_binomial(A, to_mono(a), Mono());
  LaurentPoly out(n);
  for (const auto& t : A.terms()) {
    Exponent e(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) e[size_t(i)] = t.m[i];
    out.add_term(e, ExactScalar(Rational(t.c)));
  }
  return out;
}

ExactScalar inner_product(const LaurentPoly& f, const LaurentPoly& g, int k) {
  if (k <= 0) throw std::invalid_argument("inner product needs a positive integer k");
  if (k > 3) throw std::invalid_argument("inner product supports k <= 3");
  int n = std::max(f.n(), g.n());
  ExactScalar ak = ab(k, 0);
  auto at_t_qk = [&](const ExactScalar& c) { return c.substitute({{"b", ak}}, ab_vars()); };
  LaurentPoly fg = f.map_coeffs(at_t_qk) * g.bar().map_coeffs(at_t_qk);
  // Delta over all roots, with a in slot n
  Poly delta = Poly::constant(1);
  for (const auto& a : positive_roots(n))
    for (int s : {1, -1}) {
      Exponent e = a;
      for (auto& v : e) v *= s;
      for (int j = 0; j < k; ++j)
        delta *= Poly::constant(1) - Poly::monomial(to_mono(e) + Mono::var(n, 2 * j));
    }
  std::vector<ExactScalar> parts;
  for (const auto& [e, c] : fg.terms()) {
    Exponent m = e;
    for (auto& v : m) v = -v;
    Poly s = slice(delta, n, to_mono(m));
    if (!s.is_zero()) parts.push_back(c * poly_in_a(s, n));
  }
  long wsize = 1L << n;
  for (int i = 2; i <= n; ++i) wsize *= i;
  return ExactScalar::sum(parts) / ExactScalar(wsize);
}

WsumResult verify_macdonald_wsum(int n) {
  auto roots = positive_roots(n);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  for (size_t j = 0; j < roots.size(); ++j) names.push_back("u" + std::to_string(j + 1));
  VarList vars = make_vars(names);
  auto xpow = [&](const Exponent& e) { return GenRat::monomial(vars, to_mono(e)); };
  std::vector<GenRat> lhs_terms, rhs_terms;
  GenRat one(1);
  for (const auto& w : weyl_group(n)) {
    SignedPerm inv = w;
    for (int i = 0; i < n; ++i) {
      inv.perm[size_t(w.perm[size_t(i)])] = i;
      inv.signs[size_t(w.perm[size_t(i)])] = w.signs[size_t(i)];
    }
    GenRat num(1), den(1), rhs(1);
    for (size_t j = 0; j < roots.size(); ++j) {
      GenRat u = GenRat::var(vars, names[size_t(n) + j]);
      Exponent wa = w.apply(roots[j]);
      for (auto& v : wa) v = -v;
      num *= one - u * xpow(wa);
      den *= one - xpow(wa);
      Exponent b = inv.apply(roots[j]);
      int first = 0;
      for (int v : b)
        if (v) {
          first = v;
          break;
        }
      if (first < 0) rhs *= u;
    }
    lhs_terms.push_back(num / den);
    rhs_terms.push_back(rhs);
  }
  GenRat lhs = GenRat::sum(lhs_terms), rhs = GenRat::sum(rhs_terms);
  return {lhs == rhs, lhs.str(), rhs.str()};
}

}  // namespace cnp
