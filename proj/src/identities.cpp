#include "cnp/identities.hpp"

#include <functional>
#include <map>
#include <random>
#include <type_traits>

#include "cnp/parallel.hpp"

namespace cnp {

namespace {

struct PoleHit : std::domain_error {
  PoleHit() : std::domain_error("evaluation point is a pole") {}
};

bool zero(const Rational& x) { return sgn(x) == 0; }
bool zero(const GenRat& x) { return x.is_zero(); }

Rational dv(const Rational& a, const Rational& b) {
  if (zero(b)) throw PoleHit();
  return a / b;
}
GenRat dv(const GenRat& a, const GenRat& b) { return a / b; }

Rational ipow(const Rational& x, int k) {
  if (k < 0) return dv(Rational(1), ipow(x, -k));
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}
GenRat ipow(const GenRat& x, int k) { return x.pow(k); }

Rational sum_all(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}
GenRat sum_all(const std::vector<GenRat>& v) { return GenRat::sum(v); }

int binom2(int m) { return m * (m - 1) / 2; }

template <class T>
T poch_impl(const T& a, const T& step, int k) {
  T r(1), s(1);
  for (int j = 0; j < k; ++j) {
    r *= T(1) - a * s;
    s *= step;
  }
  return r;
}

GenRat poch(const GenRat& a, const GenRat& step, int k) { return poch_impl(a, step, k); }

Rational frac(const Rational& num, const Rational& den) { return dv(num, den); }
GenRat frac(const GenRat& num, const GenRat& den) { return dv(num, den); }

template <class T>
T minus_poch(int m, const T& t) {
  T r(1);
  if (m >= 0) {
    for (int k = 1; k <= m; ++k) r *= ipow(t, k) + T(1);
  } else {
    for (int k = 0; k < -m; ++k) r = dv(r, ipow(t, -k) + T(1));
  }
  return r;
}

template <class T>
T phi(const std::vector<T>& up, const std::vector<T>& lo, const T& base, const T& arg, int N) {
  std::vector<T> terms;
  T ratio(1);
  for (int i = 0; i <= N; ++i) {
    if (i > 0) {
      T num(1), den(1);
      T sh = ipow(base, i - 1);
      for (const auto& a : up) num *= T(1) - a * sh;
      for (const auto& b : lo) den *= T(1) - b * sh;
      den *= T(1) - ipow(base, i);
      if (zero(den)) {
        if constexpr (std::is_same_v<T, Rational>) throw PoleHit();
        throw std::domain_error("lower parameter gives a vanishing Pochhammer factor at index " +
                                std::to_string(i));
      }
      ratio = ratio * num * arg / den;
    }
    terms.push_back(ratio);
    if (zero(ratio)) break;
  }
  return sum_all(terms);
}

// sum over sigma in {+-1}^n of
// prod (1 - t y_i^2)/(1 - y_i^2) extra(y_i) prod_{i<j} (1 - t y_i y_j)/(1 - y_i y_j),
// y_i = x_i^{sigma_i}
template <class T>
T sigma_sum(const std::vector<T>& x, const T& t, const std::function<T(const T&)>& extra) {
  size_t n = x.size();
  auto terms = parallel_map<T>(size_t(1) << n, [&](size_t mask) {
    std::vector<T> y(n);
    for (size_t i = 0; i < n; ++i) y[i] = (mask >> i) & 1 ? dv(T(1), x[i]) : x[i];
    T term(1);
    for (size_t i = 0; i < n; ++i) {
      T y2 = y[i] * y[i];
      term *= frac(T(1) - t * y2, T(1) - y2) * extra(y[i]);
      for (size_t j = i + 1; j < n; ++j) {
        T p = y[i] * y[j];
        term *= frac(T(1) - t * p, T(1) - p);
      }
    }
    return term;
  });
  return sum_all(terms);
}

// ---- symmetrized sum ----

template <class T>
T r_of(const std::vector<T>& x, const T& t, const T& v) {
  T r(1);
  for (const auto& xi : x) {
    r *= frac(T(1) - t * v * xi, T(1) - v * xi);
    T w = dv(v, xi);
    r *= frac(T(1) - t * w, T(1) - w);
  }
  return r;
}

template <class T>
T c_subset(int n, const std::vector<T>& u, const T& t, unsigned I) {
  int r = int(u.size());
  std::vector<T> v(static_cast<size_t>(r));
  int size = 0;
  for (int i = 0; i < r; ++i) {
    if ((I >> i) & 1) {
      v[size_t(i)] = u[size_t(i)];
      ++size;
    } else {
      v[size_t(i)] = dv(T(1), t * u[size_t(i)]);
    }
  }
  T c = ipow(t, n * (r - size));
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      T p = v[size_t(i)] * v[size_t(j)];
      c *= frac(T(1) - p, T(1) - t * p);
    }
  return c;
}

template <class T>
T thm6_left(const std::vector<T>& x, const std::vector<T>& u, const T& t) {
  return sigma_sum<T>(x, t, [&](const T& y) {
    T f(1);
    for (const auto& uk : u) {
      T w = dv(uk, y);
      f *= frac(T(1) - t * w, T(1) - w);
    }
    return f;
  });
}

template <class T>
T thm6_subsets(const std::vector<T>& x, const std::vector<T>& u, const T& t) {
  int n = int(x.size());
  size_t r = u.size();
  std::vector<T> R(r);
  for (size_t k = 0; k < r; ++k) R[k] = r_of(x, t, u[k]);
  auto terms = parallel_map<T>(size_t(1) << r, [&](size_t I) {
    T c = c_subset(n, u, t, unsigned(I));
    for (size_t k = 0; k < r; ++k)
      if ((I >> k) & 1) c *= R[k];
    return c;
  });
  return sum_all(terms);
}

template <class T>
T thm6_right(const std::vector<T>& x, const std::vector<T>& u, const T& t) {
  return minus_poch(int(x.size()) - int(u.size()), t) * thm6_subsets(x, u, t);
}

std::vector<std::string> indexed(const std::string& stem, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

std::vector<GenRat> vars_of(const VarList& vars, const std::vector<std::string>& names) {
  std::vector<GenRat> out;
  for (const auto& nm : names) out.push_back(GenRat::var(vars, nm));
  return out;
}

struct Thm6Ring {
  VarList vars;
  std::vector<GenRat> x, u;
  GenRat t;
  Thm6Ring(int n, int r) : vars(thm6_vars(n, r)) {
    x = vars_of(vars, indexed("x", n));
    u = vars_of(vars, indexed("u", r));
    t = GenRat::var(vars, "t");
  }
};

void check_guard(int n, int r, const IdentityConfig& cfg) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative rank or count");
  if (n + r > cfg.guard)
    throw ResourceGuardExceeded("n + r = " + std::to_string(n + r) + " exceeds the guard " +
                                std::to_string(cfg.guard) + "; use probabilistic mode");
}

// ---- nonterminating and multiple series ----

template <class T>
T thm8_left(const std::vector<T>& x, int r, const T& z, const T& q) {
  std::vector<T> u;
  for (int i = 0; i < r; ++i) u.push_back(z * ipow(q, i));
  return thm6_left(x, u, q);
}

template <class T>
T thm8_right(const std::vector<T>& x, int r, const T& z, const T& q) {
  int n = int(x.size());
  T z2 = z * z;
  std::vector<T> up{z2, q * z, -(q * z), ipow(q, -r)};
  std::vector<T> lo{z, -z, ipow(q, r + 1) * z2};
  for (const auto& xi : x) {
    up.push_back(q * z * xi);
    up.push_back(dv(q * z, xi));
    lo.push_back(z * xi);
    lo.push_back(dv(z, xi));
  }
  return ipow(q, n * r - binom2(r)) * minus_poch(n - r, q) * poch(q * z2, q * q, r) /
         poch(q * z2, q, r) * phi<T>(up, lo, q, -ipow(q, r - n), r);
}

template <class T>
std::vector<T> principal(const T& w, const T& q, int n) {
  std::vector<T> x;
  for (int i = 0; i < n; ++i) x.push_back(w * ipow(q, i));
  return x;
}

template <class T>
std::vector<T> thm9_sides(int n, int r, const T& w, const T& z, const T& q) {
  T w2 = w * w;
  T wz = dv(w, z);
  T left = poch(q * w2, q * q, n) / poch(w2, q, n) * poch(ipow(q, -r) * wz, q, n) / poch(wz, q, n) *
           phi<T>({wz, ipow(q, r) * w * z, dv(w2, q), ipow(q, -n)},
                  {w * z, ipow(q, -r) * wz, ipow(q, n) * w2}, q, -ipow(q, n - r + 1), n);
  T zw = dv(z, w);
  T z2 = z * z;
  T right = ipow(q, -binom2(r)) * minus_poch(n - r, q) * poch(q * z2, q * q, r) / poch(q * z2, q, r) *
            phi<T>({z2, q * z, -(q * z), ipow(q, n) * w * z, q * zw, ipow(q, -r)},
                   {z, -z, w * z, ipow(q, 1 - n) * zw, ipow(q, r + 1) * z2}, q, -ipow(q, r - n), r);
  T sigma = thm8_left(principal(w, q, n), r, z, q);
  return {left, right, sigma};
}

template <class T>
std::vector<T> multi_principal(const KVec& k, const std::vector<T>& z, const T& q) {
  std::vector<T> u;
  for (size_t l = 0; l < k.size(); ++l)
    for (int i = 0; i < k[l]; ++i) u.push_back(z[l] * ipow(q, i));
  return u;
}

int ksum(const KVec& k) {
  int s = 0;
  for (int v : k) s += v;
  return s;
}

template <class T>
T c_m(const std::vector<int>& m, const KVec& k, const std::vector<T>& z, const T& q) {
  size_t s = k.size();
  T c(1);
  for (size_t a = 0; a < s; ++a)
    for (size_t b = a + 1; b < s; ++b)
      c *= frac(ipow(q, m[a]) * z[a] - ipow(q, m[b]) * z[b], z[a] - z[b]);
  for (size_t a = 0; a < s; ++a)
    for (size_t b = a; b < s; ++b) {
      T zz = z[a] * z[b];
      c *= frac(T(1) - ipow(q, m[a] + m[b]) * zz, T(1) - zz);
    }
  for (size_t a = 0; a < s; ++a)
    for (size_t b = 0; b < s; ++b) {
      T r = dv(z[a], z[b]);
      T zz = z[a] * z[b];
      c *= poch(ipow(q, -k[b]) * r, q, m[a]) / poch(q * r, q, m[a]) * poch(zz, q, m[a]) /
           poch(ipow(q, 1 + k[b]) * zz, q, m[a]);
    }
  return c;
}

template <class T>
T thm10_prefactor(int n, const KVec& k, const std::vector<T>& z, const T& q) {
  size_t s = k.size();
  int K = ksum(k);
  T p = ipow(q, -binom2(K)) * minus_poch(n - K, q);
  for (size_t a = 0; a < s; ++a)
    for (size_t b = a + 1; b < s; ++b)
      p *= poch(ipow(q, k[b] + 1) * z[a] * z[b], q, k[a]) / poch(q * z[a] * z[b], q, k[a]);
  for (size_t a = 0; a < s; ++a) {
    T qz2 = q * z[a] * z[a];
    p *= poch(qz2, q * q, k[a]) / poch(qz2, q, k[a]);
  }
  return p;
}

std::vector<std::vector<int>> boxes(const KVec& k) {
  std::vector<std::vector<int>> out{{}};
  for (int kl : k) {
    std::vector<std::vector<int>> next;
    for (const auto& m : out)
      for (int v = 0; v <= kl; ++v) {
        auto e = m;
        e.push_back(v);
        next.push_back(e);
      }
    out = std::move(next);
  }
  return out;
}

// the m-sum of the multiple series; `block(l, m_l)` supplies the
// l-dependent Pochhammer ratios
template <class T>
T m_sum(int n, const KVec& k, const std::vector<T>& z, const T& q,
        const std::function<T(size_t, int)>& block) {
  int K = ksum(k);
  auto ms = boxes(k);
  auto terms = parallel_map<T>(ms.size(), [&](size_t idx) {
    const auto& m = ms[idx];
    int msum = ksum(m);
    T term = c_m(m, k, z, q) * ipow(q, (K - n) * msum);
    if (msum % 2) term = -term;
    for (size_t l = 0; l < k.size(); ++l) term *= block(l, m[l]);
    return term;
  });
  return sum_all(terms);
}

template <class T>
T thm10_left(const std::vector<T>& x, const KVec& k, const std::vector<T>& z, const T& q) {
  return thm6_left(x, multi_principal(k, z, q), q);
}

template <class T>
T thm10_right(const std::vector<T>& x, const KVec& k, const std::vector<T>& z, const T& q) {
  int n = int(x.size());
  T s = m_sum<T>(n, k, z, q, [&](size_t l, int ml) {
    T f(1);
    for (const auto& xi : x) {
      T a = xi * z[l];
      T b = dv(z[l], xi);
      f *= poch(q * a, q, ml) / poch(a, q, ml) * poch(q * b, q, ml) / poch(b, q, ml);
    }
    return f;
  });
  return ipow(q, n * ksum(k)) * thm10_prefactor(n, k, z, q) * s;
}

template <class T>
std::vector<T> thm11_sides(int n, const KVec& k, const T& w, const std::vector<T>& z, const T& q) {
  size_t s = k.size();
  int K = ksum(k);
  T w2 = w * w;
  std::vector<T> up{dv(w2, q), ipow(q, -n)};
  std::vector<T> lo{ipow(q, n) * w2};
  T left = poch(q * w2, q * q, n) / poch(w2, q, n);
  for (size_t l = 0; l < s; ++l) {
    T wz = dv(w, z[l]);
    up.push_back(wz);
    up.push_back(ipow(q, k[l]) * w * z[l]);
    lo.push_back(w * z[l]);
    lo.push_back(ipow(q, -k[l]) * wz);
    left *= poch(ipow(q, -k[l]) * wz, q, n) / poch(wz, q, n);
  }
  left *= phi<T>(up, lo, q, -ipow(q, n - K + 1), n);
  T sum = m_sum<T>(n, k, z, q, [&](size_t l, int ml) {
    T a = w * z[l];
    T b = dv(z[l], w);
    return poch(ipow(q, n) * a, q, ml) / poch(a, q, ml) * poch(q * b, q, ml) /
           poch(ipow(q, 1 - n) * b, q, ml);
  });
  T right = thm10_prefactor(n, k, z, q) * sum;
  std::vector<T> u;
  for (size_t l = 0; l < s; ++l) u.push_back(z[l]);
  // telescoped block form of the sigma-sum
  T sigma = sigma_sum<T>(principal(w, q, n), q, [&](const T& y) {
    T f(1);
    for (size_t l = 0; l < s; ++l) {
      T v = dv(z[l], y);
      f *= frac(T(1) - ipow(q, k[l]) * v, T(1) - v);
    }
    return f;
  });
  return {left, right, sigma};
}

template <class T>
T rosengren(const std::vector<T>& x, const KVec& k, const std::vector<T>& z, const T& q) {
  size_t n = x.size();
  size_t s = k.size();
  int K = ksum(k);
  T pre(1);
  for (size_t i = 0; i < n; ++i) {
    T x2 = x[i] * x[i];
    pre *= frac(T(1) - q * x2, T(1) - x2);
    for (size_t l = 0; l < s; ++l) {
      T v = dv(z[l], x[i]);
      pre *= frac(T(1) - ipow(q, k[l]) * v, T(1) - v);
    }
    for (size_t j = i + 1; j < n; ++j) {
      T p = x[i] * x[j];
      pre *= frac(T(1) - q * p, T(1) - p);
    }
  }
  auto terms = parallel_map<T>(size_t(1) << n, [&](size_t mask) {
    std::vector<int> sg(n);
    int size = 0;
    for (size_t i = 0; i < n; ++i) {
      sg[i] = int((mask >> i) & 1);
      size += sg[i];
    }
    T d(1);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        d *= frac(x[a] * ipow(q, sg[a]) - x[b] * ipow(q, sg[b]), x[a] - x[b]);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a; b < n; ++b) {
        T p = x[a] * x[b];
        d *= frac(T(1) - p * ipow(q, sg[a] + sg[b] - 1), T(1) - dv(p, q));
      }
    for (size_t a = 0; a < n; ++a) {
      T x2 = x[a] * x[a];
      d *= poch(dv(x2, q), q * q, sg[a]) / poch(q * x2, q * q, sg[a]);
    }
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        T p = x[a] * x[b];
        T r = dv(x[a], x[b]);
        d *= poch(dv(p, q), q, sg[a]) / poch(q * r, q, sg[a]) * poch(dv(r, q), q, sg[a]) /
             poch(q * p, q, sg[a]);
      }
    T term = d * ipow(q, (int(n) - K + 1) * size);
    if (size % 2) term = -term;
    for (size_t i = 0; i < n; ++i)
      for (size_t l = 0; l < s; ++l) {
        T a = x[i] * z[l];
        T b = dv(x[i], z[l]);
        term *= poch(ipow(q, k[l]) * a, q, sg[i]) / poch(a, q, sg[i]) * poch(b, q, sg[i]) /
                poch(ipow(q, -k[l]) * b, q, sg[i]);
      }
    return term;
  });
  return pre * sum_all(terms);
}

void check_small(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
  if (n > 3 || r > 3) throw ResourceGuardExceeded("identity checks are limited to n <= 3, r <= 3");
}

void check_kvec(int n, const KVec& k) {
  if (k.empty()) throw std::invalid_argument("empty block vector");
  for (int v : k)
    if (v < 1) throw std::invalid_argument("block sizes must be positive");
  check_small(n, ksum(k));
}

struct ZRing {
  VarList vars;
  std::vector<GenRat> x, z;
  GenRat w, q;
};

ZRing z_ring(int n, size_t s, bool with_x) {
  std::vector<std::string> names;
  if (with_x) names = indexed("x", n);
  else names.push_back("w");
  auto zs = indexed("z", int(s));
  names.insert(names.end(), zs.begin(), zs.end());
  names.push_back("q");
  ZRing R;
  R.vars = make_vars(names);
  if (with_x) R.x = vars_of(R.vars, indexed("x", n));
  else R.w = GenRat::var(R.vars, "w");
  R.z = vars_of(R.vars, zs);
  R.q = GenRat::var(R.vars, "q");
  return R;
}

}  // namespace

// ---- hypergeometric series ----

int terminating_order(const HypergeomSpec& spec, int max_m) {
  int best = -1;
  for (const auto& a : spec.upper) {
    GenRat p(1);
    for (int m = 0; m <= max_m; ++m) {
      if (a == p) {
        if (best < 0 || m < best) best = m;
        break;
      }
      p = p / spec.base;
    }
  }
  return best;
}

HypergeomSpec terminating(HypergeomSpec spec) {
  int m = terminating_order(spec);
  if (m < 0) throw std::invalid_argument("series is not terminating");
  spec.truncation = m;
  return spec;
}

GenRat phi_series(const HypergeomSpec& spec) {
  if (spec.truncation < 0) throw std::invalid_argument("negative truncation");
  return phi(spec.upper, spec.lower, spec.base, spec.argument, spec.truncation);
}

// ---- symmetrized sum ----

VarList thm6_vars(int n, int r) {
  auto names = indexed("x", n);
  auto us = indexed("u", r);
  names.insert(names.end(), us.begin(), us.end());
  names.push_back("t");
  return make_vars(names);
}

GenRat subset_coefficient(int n, int r, unsigned I) {
  Thm6Ring R(n, r);
  return c_subset(n, R.u, R.t, I);
}

GenRat r_function(int n, int r, int k) {
  Thm6Ring R(n, r);
  return r_of(R.x, R.t, R.u.at(size_t(k - 1)));
}

GenRat minus_t_poch(int m, const GenRat& t) { return minus_poch(m, t); }

GenRat thm6_lhs(int n, int r, const IdentityConfig& cfg) {
  check_guard(n, r, cfg);
  Thm6Ring R(n, r);
  return thm6_left(R.x, R.u, R.t);
}

GenRat thm6_rhs(int n, int r, const IdentityConfig& cfg) {
  check_guard(n, r, cfg);
  Thm6Ring R(n, r);
  return thm6_right(R.x, R.u, R.t);
}

GenRat thm6_subset_sum(int n, int r) {
  Thm6Ring R(n, r);
  return thm6_subsets(R.x, R.u, R.t);
}

bool verify_thm6(int n, int r, const IdentityConfig& cfg) {
  return thm6_lhs(n, r, cfg) == thm6_rhs(n, r, cfg);
}

bool verify_thm6_probabilistic(int n, int r, std::uint64_t seed, int points) {
  if (n < 0 || r < 0) throw std::invalid_argument("negative rank or count");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(1, 1L << 20);
  auto draw = [&] {
    Rational r(num(gen), num(gen));
    r.canonicalize();
    return r;
  };
  int done = 0;
  for (int tries = 0; done < points; ++tries) {
    if (tries > 50 * points) throw std::runtime_error("too many pole hits");
    std::vector<Rational> x(static_cast<size_t>(n)), u(static_cast<size_t>(r));
    for (auto& v : x) v = draw();
    for (auto& v : u) v = draw();
    Rational t = draw();
    try {
      if (thm6_left(x, u, t) != thm6_right(x, u, t)) return false;
    } catch (const PoleHit&) {
      continue;
    }
    ++done;
  }
  return true;
}

GenRat cor7_rhs(int n) {
  Thm6Ring R(n, 2);
  const GenRat& t = R.t;
  const GenRat& u = R.u[0];
  const GenRat& v = R.u[1];
  GenRat Ru = r_of(R.x, t, u);
  GenRat Rv = r_of(R.x, t, v);
  GenRat uv = u * v;
  GenRat one(1);
  GenRat body = GenRat::sum({t.pow(2 * n - 1) * (one - t * t * uv) / (one - t * uv),
                             t.pow(n - 1) * (u - t * v) / (u - v) * Ru,
                             t.pow(n - 1) * (v - t * u) / (v - u) * Rv,
                             (one - uv) / (one - t * uv) * Ru * Rv});
  return minus_poch(n - 2, t) * body;
}

bool verify_cor7(int n) { return thm6_lhs(n, 2) == cor7_rhs(n); }

// ---- terminating very-well-poised 6phi5 ----

bool verify_65_summation(int i_max) {
  if (i_max < 0) throw std::invalid_argument("negative index");
  if (i_max > 8) throw ResourceGuardExceeded("i_max is limited to 8");
  VarList vars = make_vars({"c", "q", "t"});  // c^2 = a
  GenRat c = GenRat::var(vars, "c");
  GenRat q = GenRat::var(vars, "q");
  GenRat t = GenRat::var(vars, "t");
  GenRat a = c * c;
  GenRat one(1);
  for (int i = 0; i <= i_max; ++i) {
    HypergeomSpec spec{{a, q * c, -(q * c), q, a * q.pow(i) * t, q.pow(-i)},
                       {c, -c, a, q.pow(1 - i) / t, a * q.pow(i + 1)},
                       q,
                       one / t,
                       i};
    GenRat closed = (one - a * q.pow(i)) / (one - a) * (one - q.pow(-i) / t) / (one - one / t);
    if (phi_series(spec) != closed) return false;
    std::vector<GenRat> terms;
    for (int k = 1; k <= i; ++k)
      terms.push_back(q.pow(i - k) * (one - a * q.pow(2 * k)) * qpoch(q.pow(i - k + 1), q, k) /
                      qpoch(q.pow(i - k) * t, q, k) * qpoch(a * q.pow(i) * t, q, k) /
                      qpoch(a * q.pow(i + 1), q, k));
    if (GenRat::sum(terms) != (one - q.pow(i)) / (one - t) * (one - a * q.pow(i) * t)) return false;
  }
  return true;
}

// ---- multiple series and the symmetric form ----

GenRat thm8_rhs(int n, int r) {
  check_small(n, r);
  ZRing R = z_ring(n, 1, true);
  return thm8_right(R.x, r, R.z[0], R.q);
}

bool verify_thm8(int n, int r) {
  check_small(n, r);
  ZRing R = z_ring(n, 1, true);
  return thm8_left(R.x, r, R.z[0], R.q) == thm8_right(R.x, r, R.z[0], R.q);
}

bool verify_thm9(int n, int r) {
  check_small(n, r);
  ZRing R = z_ring(n, 1, false);
  auto s = thm9_sides(n, r, R.w, R.z[0], R.q);
  return s[0] == s[1] && s[2] == R.q.pow(n * r) * s[0];
}

GenRat thm10_lhs(int n, const KVec& k) {
  check_kvec(n, k);
  ZRing R = z_ring(n, k.size(), true);
  return thm10_left(R.x, k, R.z, R.q);
}

bool verify_thm10(int n, const KVec& k) {
  check_kvec(n, k);
  ZRing R = z_ring(n, k.size(), true);
  return thm10_left(R.x, k, R.z, R.q) == thm10_right(R.x, k, R.z, R.q);
}

bool verify_thm11(int n, const KVec& k) {
  check_kvec(n, k);
  ZRing R = z_ring(n, k.size(), false);
  auto s = thm11_sides(n, k, R.w, R.z, R.q);
  return s[0] == s[1] && s[2] == R.q.pow(n * ksum(k)) * s[0];
}

bool verify_rosengren_form(int n, const KVec& k) {
  check_kvec(n, k);
  ZRing R = z_ring(n, k.size(), true);
  return rosengren(R.x, k, R.z, R.q) == thm10_left(R.x, k, R.z, R.q);
}

}  // namespace cnp
