#include "cnp/pieri.hpp"

#include <stdexcept>

#include "cnp/macdonald.hpp"

namespace cnp {

namespace {

void check_pair(int lam1, int lam2) {
  if (lam2 < 0 || lam1 < lam2) throw std::invalid_argument("need lam1 >= lam2 >= 0");
}

ExactScalar qinv() { return qpow(-1); }

ExactScalar ratio(const ExactScalar& base, int k) {
  return qpoch(base, q_sym(), k) / qpoch(q_sym(), q_sym(), k);
}

Partition two_row(int a, int b) { return Partition{a, b}; }

BasisExpansion q_two_row(int a, int b, int n) {
  if (b == 0) return onerow_Q(a, n);
  return compute_Q(two_row(a, b), n);
}

}  // namespace

ExactScalar pieri_c(int i, int j, int lam1, int lam2, int n) {
  check_pair(lam1, lam2);
  if (i < 0 || j < 0 || i + j > lam2) return ExactScalar(0);
  int d = lam1 - lam2, s = lam1 + lam2;
  return ratio(t_sym(), i) * ratio(t_sym(), j) * qpoch(qpow(d + i + 1), q_sym(), i) /
         qpoch(qt(d + i, 1), q_sym(), i) * qpoch(qt(s - j - 1, 2 * n), qinv(), j) /
         qpoch(qt(s - j, 2 * n - 1), qinv(), j);
}

ExactScalar inverse_C(int i, int j, int lam1, int lam2, int n) {
  check_pair(lam1, lam2);
  if (i < 0 || j < 0 || i + j > lam2) return ExactScalar(0);
  int d = lam1 - lam2, s = lam1 + lam2;
  ExactScalar ti = tpow(-1);
  // (1 - q^{d+2i}) / (1 - q^{d+i}) is 1 at i = 0, including d = 0
  ExactScalar wp = i == 0 ? ExactScalar(1) : one_minus_qt(d + 2 * i, 0) / one_minus_qt(d + i, 0);
  return tpow(i + j) * ratio(ti, i) * ratio(ti, j) * qpoch(qpow(d + 1), q_sym(), i) /
         qpoch(qt(d + 1, 1), q_sym(), i) * wp *
         qpoch(qt(s - 1, 2 * n), qinv(), j) / qpoch(qt(s - 1, 2 * n - 1), qinv(), j) *
         one_minus_qt(s - 2 * j, 2 * n) / one_minus_qt(s - j, 2 * n);
}

namespace {

PieriExpansion tabulate(int lam1, int lam2, int n, const PieriCoeffFn& f) {
  check_pair(lam1, lam2);
  PieriExpansion e;
  e.n = n;
  e.lam1 = lam1;
  e.lam2 = lam2;
  for (int i = 0; i <= lam2; ++i)
    for (int j = 0; i + j <= lam2; ++j) {
      ExactScalar c = f(i, j, lam1, lam2, n);
      if (!c.is_zero()) e.terms.emplace(std::make_pair(i, j), c);
    }
  return e;
}

}  // namespace

PieriExpansion expand_tworow_product(int lam1, int lam2, int n) { return tabulate(lam1, lam2, n, pieri_c); }

PieriExpansion expand_tworow_inverse(int lam1, int lam2, int n) {
  return tabulate(lam1, lam2, n, inverse_C);
}

BasisExpansion rebuild_product_side(const PieriExpansion& e) {
  std::vector<BasisExpansion> qs;
  std::vector<ExactScalar> cs;
  for (const auto& [ij, c] : e.terms) {
    auto [i, j] = ij;
    qs.push_back(q_two_row(e.lam1 + i - j, e.lam2 - i - j, e.n));
    cs.push_back(c);
  }
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (size_t k = 0; k < qs.size(); ++k) terms.push_back({cs[k], &qs[k]});
  return linear_combination(terms, Basis::m, e.n);
}

BasisExpansion rebuild_inverse_side(const PieriExpansion& e) {
  std::vector<BasisExpansion> qs;
  std::vector<ExactScalar> cs;
  for (const auto& [ij, c] : e.terms) {
    auto [i, j] = ij;
    qs.push_back(m_product(onerow_Q(e.lam1 + i - j, e.n), onerow_Q(e.lam2 - i - j, e.n)));
    cs.push_back(c);
  }
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (size_t k = 0; k < qs.size(); ++k) terms.push_back({cs[k], &qs[k]});
  return linear_combination(terms, Basis::m, e.n);
}

std::string thm3_discrepancy(int lam1, int lam2, int n, const PieriCoeffFn& c) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  BasisExpansion lhs = m_product(onerow_Q(lam1, n), onerow_Q(lam2, n));
  BasisExpansion rhs = rebuild_product_side(tabulate(lam1, lam2, n, c));
  BasisExpansion diff = lhs - rhs;
  if (diff.is_zero()) return "";
  Partition at = diff.ordered_keys().front();
  return "coefficient of m" + partition_str(at) + " differs by " + diff.coeff(at).str();
}

bool verify_thm3(int lam1, int lam2, int n) { return thm3_discrepancy(lam1, lam2, n, pieri_c).empty(); }

bool verify_thm5(int lam1, int lam2, int n) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  return rebuild_inverse_side(expand_tworow_inverse(lam1, lam2, n)) == q_two_row(lam1, lam2, n);
}

std::map<Partition, ExactScalar> tworow_round_trip(int lam1, int lam2, int n) {
  std::map<Partition, std::vector<ExactScalar>> acc;
  for (const auto& [ij, C] : expand_tworow_inverse(lam1, lam2, n).terms) {
    auto [i, j] = ij;
    int a = lam1 + i - j, b = lam2 - i - j;
    for (const auto& [kl, c] : expand_tworow_product(a, b, n).terms) {
      auto [k, l] = kl;
      acc[two_row(a + k - l, b - k - l)].push_back(C * c);
    }
  }
  std::map<Partition, ExactScalar> out;
  for (auto& [p, v] : acc) {
    ExactScalar s = ExactScalar::sum(v);
    if (!s.is_zero()) out.emplace(p, s);
  }
  return out;
}

bool verify_round_trip(int lam1, int lam2, int n) {
  auto r = tworow_round_trip(lam1, lam2, n);
  return r.size() == 1 && r.begin()->first == two_row(lam1, lam2) && r.begin()->second.is_one();
}

namespace {

ExactScalar at_t_equals_q(const ExactScalar& x) {
  return x.substitute({{"b", ExactScalar::var(ab_vars(), "a")}}, ab_vars());
}

BasisExpansion at_t_equals_q(const BasisExpansion& e) {
  BasisExpansion r;
  r.basis = e.basis;
  r.n = e.n;
  for (const auto& [p, c] : e.coeffs) {
    ExactScalar v = at_t_equals_q(c);
    if (!v.is_zero()) r.coeffs.emplace(p, v);
  }
  return r;
}

// complete functions h_r of x_i^{+-1}
BasisExpansion h_fn(int r, int n) {
  BasisExpansion z;
  z.basis = Basis::m;
  z.n = n;
  if (r < 0) return z;
  return at_t_equals_q(onerow_Q(r, n));
}

}  // namespace

bool verify_cor6(int lam1, int lam2, int n) {
  check_pair(lam1, lam2);
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  BasisExpansion chi = from_laurent(weyl_character(two_row(lam1, lam2), n));

  std::vector<BasisExpansion> prods;
  std::vector<ExactScalar> cs;
  for (const auto& [ij, C] : expand_tworow_inverse(lam1, lam2, n).terms) {
    ExactScalar c = at_t_equals_q(C);
    if (c.is_zero()) continue;
    auto [i, j] = ij;
    prods.push_back(m_product(h_fn(lam1 + i - j, n), h_fn(lam2 - i - j, n)));
    cs.push_back(c);
  }
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (size_t k = 0; k < prods.size(); ++k) terms.push_back({cs[k], &prods[k]});
  BasisExpansion from_inverse = linear_combination(terms, Basis::m, n);

  BasisExpansion four = m_product(h_fn(lam1, n), h_fn(lam2, n)) + m_product(h_fn(lam1, n), h_fn(lam2 - 2, n)) -
                        m_product(h_fn(lam1 + 1, n), h_fn(lam2 - 1, n)) -
                        m_product(h_fn(lam1 - 1, n), h_fn(lam2 - 1, n));
  return from_inverse == chi && four == chi;
}

MinusculeTable pieri_minuscule(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  auto L = [&](int i) { return l[size_t(i - 1)]; };
  MinusculeTable out;
  for (int k = 1; k <= n; ++k) {
    if (k == 1 || L(k - 1) > L(k)) {
      std::vector<ExactScalar> num, den;
      for (int i = 1; i < k; ++i) {
        int d = L(i) - L(k);
        num.push_back(one_minus_qt(d, k - i - 1));
        den.push_back(one_minus_qt(d, k - i));
        num.push_back(one_minus_qt(d - 1, k - i + 1));
        den.push_back(one_minus_qt(d - 1, k - i));
      }
      out.emplace(std::make_pair(k, 1), ExactScalar::product(num) / ExactScalar::product(den));
    }
    if (L(k) > 0 && (k == n || L(k) > L(k + 1))) {
      std::vector<ExactScalar> num, den;
      num.push_back(one_minus_qt(L(k), n - k));
      den.push_back(one_minus_qt(L(k), n - k + 1));
      num.push_back(one_minus_qt(L(k) - 1, n - k + 2));
      den.push_back(one_minus_qt(L(k) - 1, n - k + 1));
      for (int i = 1; i <= n; ++i) {
        if (i == k) continue;
        num.push_back(one_minus_qt(L(i) + L(k), 2 * n - i - k + 1));
        den.push_back(one_minus_qt(L(i) + L(k), 2 * n - i - k + 2));
        // the second factor pairs with lam_i + lam_k - 1
        num.push_back(one_minus_qt(L(i) + L(k) - 1, 2 * n - i - k + 3));
        den.push_back(one_minus_qt(L(i) + L(k) - 1, 2 * n - i - k + 2));
      }
      for (int i = k + 1; i <= n; ++i) {
        int d = L(k) - L(i);
        num.push_back(one_minus_qt(d, i - k - 1));
        den.push_back(one_minus_qt(d, i - k));
        num.push_back(one_minus_qt(d - 1, i - k + 1));
        den.push_back(one_minus_qt(d - 1, i - k));
      }
      out.emplace(std::make_pair(k, -1), ExactScalar::product(num) / ExactScalar::product(den));
    }
  }
  return out;
}

bool verify_pieri_minuscule(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  BasisExpansion lhs = m_product(m_basis({1}, n), compute_P(l, n));
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (const auto& [key, a] : pieri_minuscule(l, n)) {
    Partition mu = l;
    mu[size_t(key.first - 1)] += key.second;
    terms.push_back({a, &compute_P(mu, n)});
  }
  return lhs == linear_combination(terms, Basis::m, n);
}

namespace {

struct RootData {
  Exponent coroot;
  int rho_pair;
};

std::vector<RootData> coroots(int n) {
  std::vector<RootData> out;
  for (const auto& r : positive_roots(n)) {
    Exponent c = r;
    bool longr = false;
    for (int x : r)
      if (x == 2 || x == -2) longr = true;
    if (longr)
      for (int& x : c) x /= 2;
    int h = 0;
    for (int i = 0; i < n; ++i) h += c[size_t(i)] * (n - i);
    out.push_back({c, h});
  }
  return out;
}

int dot(const Exponent& a, const Exponent& b) {
  int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool dominant(const Exponent& e) {
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] < 0 || (i > 0 && e[i] > e[i - 1])) return false;
  return true;
}

ExactScalar frac(const ExactScalar& x, int qe, int te) {
  // (1 - x q^qe t^te) / (1 - x q^qe)
  return (ExactScalar(1) - x * qt(qe, te)) / (ExactScalar(1) - x * qpow(qe));
}

}  // namespace

std::map<Exponent, QuasiCoeffs> pieri_quasiminuscule(const Partition& lam, int n) {
  if (n < 2) throw std::invalid_argument("quasi-minuscule Pieri needs rank at least 2");
  Partition l = fit(lam, n);
  auto roots = coroots(n);
  std::map<Exponent, QuasiCoeffs> out;
  for (const auto& tau : orbit({1, 1}, n)) {
    Exponent target = l;
    for (int i = 0; i < n; ++i) target[size_t(i)] += tau[size_t(i)];
    if (!dominant(target)) continue;
    std::vector<ExactScalar> cf, df;
    int shift = 0;
    for (int i = 0; i < n; ++i) shift += tau[size_t(i)] * (2 * (n - 1 - i) + 1);
    df.push_back(ab(0, -shift));
    for (const auto& rd : roots) {
      int p = dot(tau, rd.coroot);
      if (p == 0) continue;
      ExactScalar X = qt(dot(l, rd.coroot), rd.rho_pair);
      int s = p > 0 ? 1 : -1;
      df.push_back(frac(X, 0, s));
      if (p == 2 || p == -2) df.push_back(frac(X, s, s));
      if (p == -1) {
        cf.push_back(frac(X, 0, -1));
        cf.push_back(frac(X, -1, 1));
      } else if (p == -2) {
        cf.push_back(frac(X, 0, -1));
        cf.push_back(frac(X, -1, -1));
        cf.push_back(frac(X, -1, 1));
        cf.push_back(frac(X, -2, 1));
      }
    }
    out.emplace(tau, QuasiCoeffs{ExactScalar::product(cf), ExactScalar::product(df)});
  }
  return out;
}

bool verify_pieri_quasiminuscule(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  const BasisExpansion& pw = compute_P({1, 1}, n);
  ExactScalar c0 = specialize_principal(pw);
  BasisExpansion shifted = pw - c0 * m_basis({0}, n);
  BasisExpansion lhs = m_product(shifted, compute_P(l, n));
  std::vector<ExactScalar> ds;
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (const auto& [tau, cd] : pieri_quasiminuscule(l, n)) {
    Partition mu = l;
    for (int i = 0; i < n; ++i) mu[size_t(i)] += tau[size_t(i)];
    terms.push_back({cd.C, &compute_P(mu, n)});
    ds.push_back(cd.D);
  }
  terms.push_back({-ExactScalar::sum(ds), &compute_P(l, n)});
  return lhs == linear_combination(terms, Basis::m, n);
}

GenRat bressoud_entry(const std::string& kind, const std::vector<int>& idx,
                      const std::map<std::string, GenRat>& params) {
  auto get = [&](const char* name) {
    auto it = params.find(name);
    if (it == params.end()) throw std::invalid_argument(std::string("missing parameter ") + name);
    return it->second;
  };
  auto poch = [](const GenRat& b, const GenRat& q, int k) { return qpoch(b, q, k); };
  if (kind == "A" || kind == "f" || kind == "g") {
    if (idx.size() != 2) throw std::invalid_argument("one-dimensional entry needs two indices");
    int i = idx[0], j = idx[1];
    if (i < j) return GenRat(0);
    GenRat q = get("q"), u = get("u"), v = get("v");
    GenRat one(1);
    if (kind == "A")
      return (u / v).pow(j) * poch(u / v, q, i - j) / poch(q, q, i - j) * poch(u, q, i + j) /
             poch(v * q, q, i + j) * (one - v * q.pow(2 * j)) / (one - v);
    if (kind == "f")
      return (u / v).pow(i - j) * poch(v / u, q, i - j) / poch(q, q, i - j) * poch(v * q.pow(2 * j), q, i - j) /
             poch(u * q.pow(2 * j + 1), q, i - j) * (one - v * q.pow(2 * i)) / (one - v * q.pow(2 * j));
    return poch(u / v, q, i - j) / poch(q, q, i - j) * poch(v * q.pow(i + j + 1), q, i - j) /
           poch(u * q.pow(i + j), q, i - j);
  }
  if (kind == "f2" || kind == "g2") {
    if (idx.size() != 4) throw std::invalid_argument("two-dimensional entry needs four indices");
    GenRat q = get("q"), t = get("t");
    GenRat us[2] = {get("u1"), get("u2")};
    GenRat r(1), one(1);
    for (int c = 0; c < 2; ++c) {
      int j = idx[size_t(c)], k = idx[size_t(c + 2)];
      if (j < k) return GenRat(0);
      const GenRat& u = us[c];
      if (kind == "f2")
        r *= t.pow(j - k) * poch(t.inv(), q, j - k) / poch(q, q, j - k) * poch(u * q.pow(2 * k), q, j - k) /
             poch(t * u * q.pow(2 * k + 1), q, j - k) * (one - u * q.pow(2 * j)) / (one - u * q.pow(2 * k));
      else
        r *= poch(t, q, j - k) / poch(q, q, j - k) * poch(u * q.pow(j + k + 1), q, j - k) /
             poch(t * u * q.pow(j + k), q, j - k);
    }
    return r;
  }
  throw std::invalid_argument("unknown matrix kind " + kind);
}

namespace {

InverseCheck check_1d(int size, const std::string& fk, const std::string& gk, bool swap_uv) {
  VarList v = make_vars({"q", "u", "v"});
  GenRat q = GenRat::var(v, "q"), u = GenRat::var(v, "u"), w = GenRat::var(v, "v");
  std::map<std::string, GenRat> p1{{"q", q}, {"u", u}, {"v", w}};
  std::map<std::string, GenRat> p2 = swap_uv ? std::map<std::string, GenRat>{{"q", q}, {"u", w}, {"v", u}} : p1;
  InverseCheck res;
  for (int i = 0; i <= size; ++i)
    for (int k = 0; k <= i; ++k) {
      std::vector<GenRat> parts;
      for (int j = k; j <= i; ++j)
        parts.push_back(bressoud_entry(fk, {i, j}, p1) * bressoud_entry(gk, {j, k}, p2));
      GenRat s = GenRat::sum(parts);
      if (s != GenRat(i == k ? 1 : 0)) {
        res.ok = false;
        if (res.first_failure.empty())
          res.first_failure = "(" + std::to_string(i) + "," + std::to_string(k) + "): " + s.str();
      }
    }
  return res;
}

}  // namespace

InverseCheck verify_bressoud_1d(int size) { return check_1d(size, "A", "A", true); }
InverseCheck verify_fg_1d(int size) { return check_1d(size, "f", "g", false); }

InverseCheck verify_two_dim(int size) {
  VarList v = make_vars({"q", "t", "u1", "u2"});
  std::map<std::string, GenRat> p;
  for (const char* nm : {"q", "t", "u1", "u2"}) p.emplace(nm, GenRat::var(v, nm));
  InverseCheck res;
  for (int j1 = 0; j1 <= size; ++j1)
    for (int j2 = 0; j2 <= size; ++j2)
      for (int l1 = 0; l1 <= j1; ++l1)
        for (int l2 = 0; l2 <= j2; ++l2) {
          std::vector<GenRat> parts;
          for (int k1 = l1; k1 <= j1; ++k1)
            for (int k2 = l2; k2 <= j2; ++k2)
              parts.push_back(bressoud_entry("f2", {j1, j2, k1, k2}, p) *
                              bressoud_entry("g2", {k1, k2, l1, l2}, p));
          GenRat s = GenRat::sum(parts);
          bool diag = j1 == l1 && j2 == l2;
          if (s != GenRat(diag ? 1 : 0)) {
            res.ok = false;
            if (res.first_failure.empty())
              res.first_failure = "(" + std::to_string(j1) + "," + std::to_string(j2) + ";" + std::to_string(l1) +
                                  "," + std::to_string(l2) + "): " + s.str();
          }
        }
  return res;
}

}  // namespace cnp
