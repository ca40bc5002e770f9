#include "cnp/macdonald.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "cnp/laurent_ops.hpp"
#include "cnp/parallel.hpp"

namespace cnp {

namespace {

template <class V>
struct Memo {
  std::mutex mu;
  std::map<std::pair<int, Partition>, std::shared_ptr<const V>> table;

  std::shared_ptr<const V> find(int n, const Partition& p) {
    std::lock_guard<std::mutex> lk(mu);
    auto it = table.find({n, p});
    return it == table.end() ? nullptr : it->second;
  }
  // first writer wins
  const V& put(int n, const Partition& p, V v) {
    std::lock_guard<std::mutex> lk(mu);
    auto it = table.emplace(std::make_pair(n, p), std::make_shared<const V>(std::move(v))).first;
    return *it->second;
  }
};

Memo<BasisExpansion>& e_memo() {
  static Memo<BasisExpansion> m;
  return m;
}
Memo<BasisExpansion>& p_memo() {
  static Memo<BasisExpansion> m;
  return m;
}
Memo<BasisExpansion>& onerow_memo() {
  static Memo<BasisExpansion> m;
  return m;
}

// a^i b^j with a, b in slots n, n+1 of a Laurent Poly in (x, a, b)
ExactScalar ab_slice_to_scalar(const Poly& p, int n) {
  std::vector<ExactScalar> parts;
  parts.reserve(p.size());
  for (const auto& t : p.terms()) parts.push_back(ab(t.m[n], t.m[n + 1], Rational(t.c)));
  return ExactScalar::sum(parts);
}

Poly one_minus_b2(const Mono& x, int n) {
  return Poly::constant(1) - Poly::monomial(x + Mono::var(n + 1, 2));
}

BasisExpansion compute_E_orbit(const Partition& mu, int n) {
  if (n + 2 > kMaxVars) throw std::invalid_argument("rank too large");
  std::vector<Poly::Term> ft;
  for (const auto& e : orbit(mu, n)) {
    Mono m;
    for (int i = 0; i < n; ++i) m[i] = int16_t(e[size_t(i)]);
    ft.push_back({m, 1});
  }
  Poly tf = translate(Poly::from_terms(std::move(ft)), n, n);

  Poly g = tf;
  for (int i = 0; i < n; ++i) g = g * one_minus_b2(Mono::var(i, 2), n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g = g * one_minus_b2(Mono::var(i) + Mono::var(j), n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g = g * (Poly::var(i) - Poly::var(j));
  Mono sh;
  for (int i = 0; i < n; ++i) sh[i] = int16_t(-n);
  g = g.shift(sh);
  if ((n + n * (n - 1) / 2) % 2) g = -g;

  Poly s = antisymmetrize_signs(g, n);
  for (int i = 0; i < n; ++i) s = laurent_div_binomial(s, Mono::var(i), Mono::var(i, -1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      s = laurent_div_binomial(s, Mono::var(i), Mono::var(j));
      s = laurent_div_binomial(s, Mono(), (Mono::var(i) + Mono::var(j)).scaled(-1));
    }

  std::map<Partition, std::vector<Poly::Term>> groups;
  for (const auto& t : s.terms()) {
    Partition e(static_cast<size_t>(n));
    bool dom = true;
    for (int i = 0; i < n; ++i) {
      e[size_t(i)] = t.m[i];
      if (t.m[i] < 0 || (i > 0 && t.m[i] > t.m[i - 1])) dom = false;
    }
    if (!dom) continue;
    Mono m = t.m;
    for (int i = 0; i < n; ++i) m[i] = 0;
    groups[e].push_back({m, t.c});
  }
  BasisExpansion r;
  r.basis = Basis::m;
  r.n = n;
  for (auto& [e, terms] : groups) {
    ExactScalar c = ab_slice_to_scalar(Poly::from_terms(std::move(terms)), n);
    if (!c.is_zero()) r.coeffs.emplace(e, c);
  }
  return r;
}

}  // namespace

const BasisExpansion& apply_E_orbit(const Partition& mu, int n) {
  Partition m = fit(mu, n);
  if (auto hit = e_memo().find(n, m)) return *hit;
  return e_memo().put(n, m, compute_E_orbit(m, n));
}

BasisExpansion apply_E(const BasisExpansion& f) {
  if (f.basis != Basis::m) throw std::invalid_argument("apply_E needs the m basis");
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (const auto& [p, c] : f.coeffs) terms.push_back({c, &apply_E_orbit(p, f.n)});
  return linear_combination(terms, Basis::m, f.n);
}

LaurentPoly apply_E(const LaurentPoly& f) {
  LaurentPoly r = to_laurent(apply_E(from_laurent(f)));
  if (!r.is_w_invariant()) throw std::logic_error("apply_E produced a non-symmetric result");
  return r;
}

Eigenvalue eigenvalue(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  std::vector<ExactScalar> fs;
  for (int i = 0; i < n; ++i) {
    int li = l[size_t(i)];
    fs.push_back(ab(li, 2 * (n - i)) + ab(-li, 0));
  }
  return {ExactScalar::product(fs)};
}

const BasisExpansion& compute_P(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  Partition l = fit(lam, n);
  if (auto hit = p_memo().find(n, l)) return *hit;

  auto dom = dominated(l, n);
  auto rows = parallel_map<const BasisExpansion*>(
      dom.size(), [&](size_t i) { return &apply_E_orbit(dom[i], n); });
  ExactScalar el = eigenvalue(l, n).value;
  std::vector<ExactScalar> a(dom.size());
  a[0] = ExactScalar(1);
  for (size_t i = 1; i < dom.size(); ++i) {
    std::vector<ExactScalar> parts;
    for (size_t j = 0; j < i; ++j) {
      if (a[j].is_zero()) continue;
      ExactScalar e = rows[j]->coeff(dom[i]);
      if (!e.is_zero()) parts.push_back(a[j] * e);
    }
    if (parts.empty()) continue;
    ExactScalar gap = el - eigenvalue(dom[i], n).value;
    if (gap.is_zero())
      throw std::runtime_error("eigenvalue collision between " + partition_str(l) + " and " +
                               partition_str(dom[i]));
    a[i] = ExactScalar::sum(parts) / gap;
  }
  BasisExpansion p;
  p.basis = Basis::m;
  p.n = n;
  for (size_t i = 0; i < dom.size(); ++i)
    if (!a[i].is_zero()) p.coeffs.emplace(dom[i], a[i]);
  return p_memo().put(n, l, std::move(p));
}

ExactScalar q_normalization(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  l.push_back(0);
  std::vector<ExactScalar> num, den;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      int len = l[size_t(j)] - l[size_t(j + 1)];
      int d = l[size_t(i)] - l[size_t(j)];
      num.push_back(qpoch(qt(d, j - i + 1), q_sym(), len));
      den.push_back(qpoch(qt(d + 1, j - i), q_sym(), len));
    }
  return ExactScalar::product(num) / ExactScalar::product(den);
}

BasisExpansion compute_Q(const Partition& lam, int n) {
  BasisExpansion r = q_normalization(lam, n) * compute_P(lam, n);
  r.basis = Basis::m;
  return r;
}

namespace {

// coefficient of x^nu u^r in prod_i H(u x_i) H(u / x_i), H(z) = sum_k h_k z^k
BasisExpansion onerow_from_product(int r, int n) {
  std::vector<ExactScalar> h;
  for (int k = 0; k <= r; ++k) h.push_back(qpoch(t_sym(), q_sym(), k) / qpoch(q_sym(), q_sym(), k));
  BasisExpansion out;
  out.basis = Basis::m;
  out.n = n;
  for (const auto& nu : partitions_up_to(r, n)) {
    int rest = r - weight_size(nu);
    if (rest % 2) continue;
    int m = rest / 2;
    std::vector<ExactScalar> parts;
    // distribute m among the n negative parts
    std::vector<int> km(static_cast<size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        km[size_t(i)] = left;
        std::vector<ExactScalar> fs;
        for (int j = 0; j < n; ++j) {
          fs.push_back(h[size_t(km[size_t(j)] + nu[size_t(j)])]);
          fs.push_back(h[size_t(km[size_t(j)])]);
        }
        parts.push_back(ExactScalar::product(fs));
        return;
      }
      for (int v = 0; v <= left; ++v) {
        km[size_t(i)] = v;
        rec(i + 1, left - v);
      }
    };
    rec(0, m);
    ExactScalar c = ExactScalar::sum(parts);
    if (!c.is_zero()) out.coeffs.emplace(nu, c);
  }
  return out;
}

}  // namespace

const BasisExpansion& onerow_Q(int r, int n) {
  if (r < 0) throw std::invalid_argument("negative degree");
  Partition key{r};
  if (auto hit = onerow_memo().find(n, key)) return *hit;
  return onerow_memo().put(n, key, onerow_from_product(r, n));
}

std::vector<BasisExpansion> onerow_Q_series(int R, int n) {
  if (R < 0) throw std::invalid_argument("negative degree");
  std::vector<BasisExpansion> out;
  for (int r = 0; r <= R; ++r) out.push_back(onerow_Q(r, n));
  return out;
}

ExactScalar specialize_principal(const LaurentPoly& f, int n) {
  std::vector<ExactScalar> parts;
  for (const auto& [e, c] : f.terms()) {
    int k = 0;
    for (int i = 0; i < n; ++i) k += e[size_t(i)] * (2 * (n - 1 - i) + 1);
    parts.push_back(ab(0, k) * c);
  }
  return ExactScalar::sum(parts);
}

ExactScalar specialize_principal(const BasisExpansion& f) {
  std::vector<ExactScalar> parts;
  for (const auto& [p, c] : f.coeffs) {
    LaurentPoly o = orbit_sum(p, f.n);
    parts.push_back(c * specialize_principal(o, f.n));
  }
  return ExactScalar::sum(parts);
}

ExactScalar principal_value_formula(const Partition& lam, int n) {
  Partition l = fit(lam, n);
  int shift = 0;
  for (int i = 0; i < n; ++i) shift += l[size_t(i)] * (2 * (n - 1 - i) + 1);
  std::vector<ExactScalar> num{ab(0, -shift)}, den;
  // (rho height, pairing with lam) for each positive coroot
  auto factor = [&](int h, int m) {
    num.push_back(qpoch(tpow(h + 1), q_sym(), m));
    den.push_back(qpoch(tpow(h), q_sym(), m));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      factor(j - i, l[size_t(i)] - l[size_t(j)]);
      factor(2 * n - i - j, l[size_t(i)] + l[size_t(j)]);
    }
  for (int i = 0; i < n; ++i) factor(n - i, l[size_t(i)]);
  return ExactScalar::product(num) / ExactScalar::product(den);
}

bool verify_specialization(const Partition& lam, int n) {
  return specialize_principal(compute_P(lam, n)) == principal_value_formula(lam, n);
}

BasisExpansion thm4_lhs(int l1, int l2, int n) {
  return apply_E(m_product(onerow_Q(l1, n), onerow_Q(l2, n)));
}

BasisExpansion thm4_rhs(int l1, int l2, int n) {
  if (l2 < 0 || l1 < l2) throw std::invalid_argument("need l1 >= l2 >= 0");
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  std::vector<BasisExpansion> prods;
  std::vector<ExactScalar> cs;
  prods.push_back(m_product(onerow_Q(l1, n), onerow_Q(l2, n)));
  cs.push_back(eigenvalue({l1, l2}, n).value);

  std::vector<ExactScalar> pre{ExactScalar(1) - t_sym()};
  for (int i = 1; i <= n - 2; ++i) pre.push_back(tpow(i) + ExactScalar(1));
  ExactScalar c0 = ExactScalar::product(pre);
  for (int k = 1; k <= l2; ++k) {
    prods.push_back(m_product(onerow_Q(l1 + k, n), onerow_Q(l2 - k, n)));
    cs.push_back(c0 * ab(-(l1 - l2), 2 * (n - 1)) * qpow(-k) * one_minus_qt(2 * k + l1 - l2, 0));
    prods.push_back(m_product(onerow_Q(l1 - k, n), onerow_Q(l2 - k, n)));
    cs.push_back(-c0 * ab(-(l1 + l2), 0) * tpow(k - 1) * one_minus_qt(-2 * k + l1 + l2, 2 * n));
  }
  std::vector<std::pair<ExactScalar, const BasisExpansion*>> terms;
  for (size_t i = 0; i < prods.size(); ++i) terms.push_back({cs[i], &prods[i]});
  return linear_combination(terms, Basis::m, n);
}

bool verify_thm4(int l1, int l2, int n) { return thm4_lhs(l1, l2, n) == thm4_rhs(l1, l2, n); }

ExactScalar p_inner_product(const Partition& lam, const Partition& mu, int n, int k) {
  return inner_product(to_laurent(compute_P(lam, n)), to_laurent(compute_P(mu, n)), k);
}

bool verify_orthogonality(int n, int max_size, int k) {
  auto parts = partitions_up_to(max_size, n);
  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = i; j < parts.size(); ++j) pairs.push_back({i, j});
  auto ok = parallel_map<char>(pairs.size(), [&](size_t idx) {
    auto [i, j] = pairs[idx];
    bool zero = p_inner_product(parts[i], parts[j], n, k).is_zero();
    return char(i == j ? !zero : zero);
  });
  for (char c : ok)
    if (!c) return false;
  return true;
}

}  // namespace cnp
