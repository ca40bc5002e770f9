#include "cnp/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cnp {

VarList make_vars(const std::vector<std::string>& names) {
  if (int(names.size()) > kMaxVars)
    throw std::invalid_argument("too many indeterminates (max 16)");
  return std::make_shared<const std::vector<std::string>>(names);
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

int var_index(const VarList& v, const std::string& name) {
  for (size_t i = 0; i < v->size(); ++i)
    if ((*v)[i] == name) return int(i);
  return -1;
}

Poly Poly::constant(const Integer& c) {
  if (c == 0) return Poly();
  return Poly({Term{Mono(), c}});
}

Poly Poly::monomial(const Mono& m, const Integer& c) {
  if (c == 0) return Poly();
  return Poly({Term{m, c}});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.m, b.m); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  return Poly(std::move(out));
}

Integer Poly::constant_term() const {
  if (!t_.empty() && t_.back().m.is_one()) return t_.back().c;
  return 0;
}

Poly Poly::operator-() const {
  std::vector<Term> r = t_;
  for (auto& t : r) t.c = -t.c;
  return Poly(std::move(r));
}

static Poly merge(const Poly& a, const Poly& b, bool subtract) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<Poly::Term> r;
  r.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = grlex_cmp(x[i].m, y[j].m);
    if (c > 0) {
      r.push_back(x[i++]);
    } else if (c < 0) {
      r.push_back(y[j++]);
      if (subtract) r.back().c = -r.back().c;
    } else {
      Integer s = subtract ? Integer(x[i].c - y[j].c) : Integer(x[i].c + y[j].c);
      if (s != 0) r.push_back(Poly::Term{x[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) r.push_back(x[i]);
  for (; j < y.size(); ++j) {
    r.push_back(y[j]);
    if (subtract) r.back().c = -r.back().c;
  }
  return Poly(std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return merge(a, b, false);
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return -b;
  return merge(a, b, true);
}

Poly Poly::mul_term(const Mono& m, const Integer& c) const {
  if (c == 0) return Poly();
  std::vector<Term> r;
  r.reserve(t_.size());
  for (const auto& t : t_) r.push_back(Term{t.m + m, t.c * c});
  return Poly(std::move(r));
}

Poly Poly::shift(const Mono& m) const {
  std::vector<Term> r = t_;
  for (auto& t : r) t.m = t.m + m;
  return Poly(std::move(r));
}

Poly Poly::scaled(const Integer& c) const { return mul_term(Mono(), c); }

Poly Poly::divexact_int(const Integer& c) const {
  std::vector<Term> r = t_;
  for (auto& t : r) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
  return Poly(std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  const Poly& s = a.size() <= b.size() ? a : b;
  const Poly& l = a.size() <= b.size() ? b : a;
  if (s.size() == 1) return l.mul_term(s.lt().m, s.lt().c);
  if (s.size() <= 6) {
    Poly acc = l.mul_term(s.terms()[0].m, s.terms()[0].c);
    for (size_t i = 1; i < s.size(); ++i) acc = acc + l.mul_term(s.terms()[i].m, s.terms()[i].c);
    return acc;
  }
  std::unordered_map<Mono, Integer, MonoHash> acc;
  acc.reserve(std::min<size_t>(s.size() * l.size(), 1u << 22));
  for (const auto& x : s.terms())
    for (const auto& y : l.terms()) {
      auto it = acc.try_emplace(x.m + y.m).first;
      mpz_addmul(it->second.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    }
  std::vector<Poly::Term> r;
  r.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.push_back(Poly::Term{m, std::move(c)});
  std::sort(r.begin(), r.end(),
            [](const Poly::Term& x, const Poly::Term& y) { return grlex_greater(x.m, y.m); });
  return Poly(std::move(r));
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of polynomial");
  Poly r = constant(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Mono Poly::min_exponents() const {
  if (t_.empty()) return Mono();
  Mono m = t_[0].m;
  for (const auto& t : t_) m = Mono::min(m, t.m);
  return m;
}

Mono Poly::max_exponents() const {
  if (t_.empty()) return Mono();
  Mono m = t_[0].m;
  for (const auto& t : t_) m = Mono::max(m, t.m);
  return m;
}

Integer Poly::content() const {
  Integer g = 0;
  for (const auto& t : t_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Poly Poly::primitive() const {
  if (t_.empty()) return Poly();
  Integer g = content();
  if (t_[0].c < 0) g = -g;
  if (g == 1) return *this;
  return divexact_int(g);
}

int Poly::degree_in(int var) const {
  int d = -1;
  for (const auto& t : t_) d = std::max<int>(d, t.m[var]);
  return d;
}

int Poly::min_degree_in(int var) const {
  if (t_.empty()) return -1;
  int d = t_[0].m[var];
  for (const auto& t : t_) d = std::min<int>(d, t.m[var]);
  return d;
}

Mono Poly::used_vars() const {
  Mono u;
  for (const auto& t : t_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.m[i]) u[i] = 1;
  return u;
}

std::optional<Poly> Poly::divexact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return Poly();
  const Term& dl = d.lt();
  if (d.size() == 1) {
    std::vector<Term> r;
    r.reserve(t_.size());
    for (const auto& t : t_) {
      if (!t.m.divisible_by(dl.m) || !mpz_divisible_p(t.c.get_mpz_t(), dl.c.get_mpz_t()))
        return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), t.c.get_mpz_t(), dl.c.get_mpz_t());
      r.push_back(Term{t.m - dl.m, std::move(q)});
    }
    return Poly(std::move(r));
  }
  // quick rejection on per-variable degree ranges
  Mono dmax = d.max_exponents(), dmin = d.min_exponents();
  Mono pmax = max_exponents(), pmin = min_exponents();
  for (int i = 0; i < kMaxVars; ++i)
    if (pmax[i] - pmin[i] < dmax[i] - dmin[i]) return std::nullopt;

  auto cmp = [](const Mono& a, const Mono& b) { return grlex_greater(a, b); };
  std::map<Mono, Integer, decltype(cmp)> r(cmp);
  for (const auto& t : t_) r.emplace_hint(r.end(), t.m, t.c);
  std::vector<Term> q;
  Integer qc, prod;
  while (!r.empty()) {
    auto it = r.begin();
    if (!it->first.divisible_by(dl.m)) return std::nullopt;
    if (!mpz_divisible_p(it->second.get_mpz_t(), dl.c.get_mpz_t())) return std::nullopt;
    Mono qm = it->first - dl.m;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), dl.c.get_mpz_t());
    r.erase(it);
    for (size_t k = 1; k < d.t_.size(); ++k) {
      Mono key = d.t_[k].m + qm;
      prod = qc * d.t_[k].c;
      auto f = r.find(key);
      if (f == r.end()) {
        r.emplace(key, -prod);
      } else {
        f->second -= prod;
        if (f->second == 0) r.erase(f);
      }
    }
    q.push_back(Term{qm, qc});
  }
  return Poly(std::move(q));
}

Poly Poly::eval_var(int v, const Integer& x) const {
  int dmax = degree_in(v);
  std::vector<Integer> pw(size_t(dmax + 1));
  pw[0] = 1;
  for (int k = 1; k <= dmax; ++k) pw[size_t(k)] = pw[size_t(k - 1)] * x;
  std::vector<Term> r;
  r.reserve(t_.size());
  for (const auto& t : t_) {
    Term s{t.m, t.c * pw[size_t(t.m[v])]};
    s.m[v] = 0;
    r.push_back(std::move(s));
  }
  return from_terms(std::move(r));
}

Integer Poly::eval_all(const std::vector<Integer>& xs) const {
  Integer s = 0, p;
  for (const auto& t : t_) {
    p = t.c;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (t.m[int(i)] == 0) continue;
      Integer w;
      mpz_pow_ui(w.get_mpz_t(), xs[i].get_mpz_t(), (unsigned long)t.m[int(i)]);
      p *= w;
    }
    s += p;
  }
  return s;
}

Rational Poly::eval_rational(const std::vector<Rational>& xs) const {
  Rational s = 0;
  for (const auto& t : t_) {
    Rational p = t.c;
    for (size_t i = 0; i < xs.size(); ++i) {
      int e = t.m[int(i)];
      if (e == 0) continue;
      Rational w = 1, b = xs[i];
      if (e < 0) {
        b = 1 / b;
        e = -e;
      }
      while (e) {
        if (e & 1) w *= b;
        e >>= 1;
        if (e) b *= b;
      }
      p *= w;
    }
    s += p;
  }
  return s;
}

Integer Poly::max_norm() const {
  Integer m = 0;
  for (const auto& t : t_)
    if (abs(t.c) > m) m = abs(t.c);
  return m;
}

Poly Poly::coeff_in(int var, int k) const {
  std::vector<Term> r;
  for (const auto& t : t_)
    if (t.m[var] == k) {
      r.push_back(t);
      r.back().m[var] = 0;
    }
  return from_terms(std::move(r));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i].m != b.t_[i].m || a.t_[i].c != b.t_[i].c) return false;
  return true;
}

int Poly::compare(const Poly& a, const Poly& b) {
  size_t n = std::min(a.t_.size(), b.t_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = grlex_cmp(a.t_[i].m, b.t_[i].m);
    if (c) return c;
    int d = cmp(a.t_[i].c, b.t_[i].c);
    if (d) return d < 0 ? -1 : 1;
  }
  if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size() ? -1 : 1;
  return 0;
}

size_t Poly::hash() const {
  size_t h = t_.size();
  MonoHash mh;
  for (const auto& t : t_) h = h * 1000003u ^ mh(t.m) ^ size_t(mpz_get_si(t.c.get_mpz_t()));
  return h;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    Integer c = t.c;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    c = abs(c);
    bool unit = t.m.is_one();
    if (c != 1 || unit) {
      os << c.get_str();
      if (!unit) os << "*";
    }
    bool fm = true;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.m[i]) continue;
      if (!fm) os << "*";
      fm = false;
      os << (i < int(names.size()) ? names[size_t(i)] : "v" + std::to_string(i));
      if (t.m[i] != 1) os << "^" << t.m[i];
    }
    first = false;
  }
  return os.str();
}

}  // namespace cnp
