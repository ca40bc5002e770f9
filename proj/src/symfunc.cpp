#include "cnp/symfunc.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace cnp {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m:
      return "m";
    case Basis::P:
      return "P";
    case Basis::Q:
      return "Q";
    case Basis::chi:
      return "chi";
  }
  return "?";
}

ExactScalar BasisExpansion::coeff(const Partition& p) const {
  auto it = coeffs.find(p);
  return it == coeffs.end() ? ExactScalar(0) : it->second;
}

void BasisExpansion::add(const Partition& p, const ExactScalar& c) {
  if (c.is_zero()) return;
  auto it = coeffs.find(p);
  if (it == coeffs.end()) {
    coeffs.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs.erase(it);
}

std::vector<Partition> BasisExpansion::ordered_keys() const {
  std::vector<Partition> r;
  for (const auto& [p, c] : coeffs) r.push_back(p);
  std::sort(r.begin(), r.end(), [](const Partition& a, const Partition& b) {
    int sa = weight_size(a), sb = weight_size(b);
    if (sa != sb) return sa > sb;
    return a > b;
  });
  return r;
}

BasisExpansion operator+(const BasisExpansion& a, const BasisExpansion& b) {
  BasisExpansion r = a;
  if (r.coeffs.empty()) r.n = b.n;
  for (const auto& [p, c] : b.coeffs) r.add(p, c);
  return r;
}

BasisExpansion operator-(const BasisExpansion& a, const BasisExpansion& b) {
  return a + ExactScalar(-1) * b;
}

BasisExpansion operator*(const ExactScalar& c, const BasisExpansion& a) {
  BasisExpansion r;
  r.basis = a.basis;
  r.n = a.n;
  if (c.is_zero()) return r;
  for (const auto& [p, d] : a.coeffs) r.coeffs.emplace(p, c * d);
  return r;
}

bool operator==(const BasisExpansion& a, const BasisExpansion& b) {
  if (a.basis != b.basis || a.coeffs.size() != b.coeffs.size()) return false;
  for (const auto& [p, c] : a.coeffs) {
    auto it = b.coeffs.find(p);
    if (it == b.coeffs.end() || it->second != c) return false;
  }
  return true;
}

BasisExpansion linear_combination(const std::vector<std::pair<ExactScalar, const BasisExpansion*>>& terms,
                                  Basis basis, int n) {
  std::map<Partition, std::vector<ExactScalar>> acc;
  for (const auto& [c, e] : terms) {
    if (c.is_zero()) continue;
    for (const auto& [p, d] : e->coeffs) acc[p].push_back(c * d);
  }
  BasisExpansion r;
  r.basis = basis;
  r.n = n;
  for (auto& [p, cs] : acc) {
    ExactScalar s = ExactScalar::sum(cs);
    if (!s.is_zero()) r.coeffs.emplace(p, s);
  }
  return r;
}

BasisExpansion m_basis(const Partition& lam, int n) {
  BasisExpansion r;
  r.basis = Basis::m;
  r.n = n;
  r.coeffs.emplace(fit(lam, n), ExactScalar(1));
  return r;
}

namespace {

struct StructCache {
  std::mutex mu;
  std::map<std::tuple<int, Partition, Partition>, std::shared_ptr<const std::map<Partition, long>>> table;
};

StructCache& struct_cache() {
  static StructCache c;
  return c;
}

bool is_dominant(const Exponent& e) {
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0) return false;
    if (i + 1 < e.size() && e[i] < e[i + 1]) return false;
  }
  return true;
}

}  // namespace

const std::map<Partition, long>& m_structure(const Partition& mu, const Partition& kappa, int n) {
  Partition a = fit(mu, n), b = fit(kappa, n);
  if (a < b) std::swap(a, b);
  auto key = std::make_tuple(n, a, b);
  auto& c = struct_cache();
  {
    std::lock_guard<std::mutex> lk(c.mu);
    auto it = c.table.find(key);
    if (it != c.table.end()) return *it->second;
  }
  auto res = std::make_shared<std::map<Partition, long>>();
  auto oa = orbit(a, n);
  auto ob = orbit(b, n);
  Exponent g(static_cast<size_t>(n));
  for (const auto& x : oa)
    for (const auto& y : ob) {
      for (int i = 0; i < n; ++i) g[size_t(i)] = x[size_t(i)] + y[size_t(i)];
      if (is_dominant(g)) ++(*res)[g];
    }
  std::lock_guard<std::mutex> lk(c.mu);
  return *c.table.emplace(key, res).first->second;
}

BasisExpansion m_product(const BasisExpansion& a, const BasisExpansion& b) {
  if (a.basis != Basis::m || b.basis != Basis::m) throw std::invalid_argument("m_product needs m-basis inputs");
  int n = std::max(a.n, b.n);
  std::map<Partition, std::vector<ExactScalar>> acc;
  for (const auto& [p, c] : a.coeffs)
    for (const auto& [r, d] : b.coeffs) {
      ExactScalar cd = c * d;
      for (const auto& [nu, mult] : m_structure(p, r, n)) acc[nu].push_back(ExactScalar(mult) * cd);
    }
  BasisExpansion out;
  out.basis = Basis::m;
  out.n = n;
  for (auto& [p, cs] : acc) {
    ExactScalar s = ExactScalar::sum(cs);
    if (!s.is_zero()) out.coeffs.emplace(p, s);
  }
  return out;
}

LaurentPoly to_laurent(const BasisExpansion& m) {
  if (m.basis != Basis::m) throw std::invalid_argument("to_laurent needs the m basis");
  LaurentPoly r(m.n);
  for (const auto& [p, c] : m.coeffs)
    for (const auto& e : orbit(p, m.n)) r.add_term(e, c);
  return r;
}

BasisExpansion from_laurent(const LaurentPoly& f) {
  if (!f.is_w_invariant()) throw std::invalid_argument("Laurent polynomial is not W-invariant");
  BasisExpansion r;
  r.basis = Basis::m;
  r.n = f.n();
  for (const auto& [e, c] : f.terms())
    if (is_dominant(e)) r.coeffs.emplace(e, c);
  return r;
}

}  // namespace cnp
