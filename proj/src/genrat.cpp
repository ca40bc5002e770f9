#include "cnp/genrat.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cnp/gcd.hpp"

namespace cnp {

namespace {

// Working element of a coprime-base computation. `ex[i]` is the exponent of
// this element in operand i; elements sharing a mask bit come from one
// already pairwise coprime list.
struct Elem {
  AtomPtr a;
  std::vector<int> ex;
  uint64_t mask;
};

std::vector<std::pair<AtomPtr, int>> atom_pieces(const Poly& p) {
  if (p.is_constant()) return {};
  LightFactors f = factor_light(p);
  if (f.unit != 1 || !f.mono.is_one()) {
    // p is primitive with positive leading coefficient and no monomial
    // factor, so this cannot happen
    throw std::logic_error("unexpected unit in atom factorization");
  }
  return f.atoms;
}


// common factor of two atoms as a list of atoms, empty when coprime
bool common_factor(const Elem& x, const Elem& y, std::vector<std::pair<AtomPtr, int>>& g,
                   Poly& xq, Poly& yq) {
  const Atom& X = *x.a;
  const Atom& Y = *y.a;
  if (X.irreducible() && Y.irreducible()) return false;
  if (X.irreducible() || Y.irreducible()) {
    const Atom& irr = X.irreducible() ? X : Y;
    const Atom& op = X.irreducible() ? Y : X;
    auto q = divide_by_atom(op.poly, irr);
    if (!q) return false;
    g = {{X.irreducible() ? x.a : y.a, 1}};
    if (X.irreducible()) {
      xq = Poly::constant(1);
      yq = *q;
    } else {
      xq = *q;
      yq = Poly::constant(1);
    }
    return true;
  }
  Poly h = gcd(X.poly, Y.poly);
  if (h.is_constant()) return false;
  xq = *X.poly.divexact(h);
  yq = *Y.poly.divexact(h);
  g = atom_pieces(h);
  return true;
}

std::vector<int> add_ex(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

std::vector<int> scale_ex(const std::vector<int>& a, int k) {
  std::vector<int> r(a);
  for (auto& v : r) v *= k;
  return r;
}

// Turn the elements into a pairwise coprime family.
std::vector<Elem> refine(std::vector<Elem> todo) {
  std::vector<Elem> done;
  while (!todo.empty()) {
    Elem x = std::move(todo.back());
    todo.pop_back();
    bool consumed = false;
    for (size_t k = 0; k < done.size(); ++k) {
      Elem& y = done[k];
      if (x.mask & y.mask) continue;
      if (same_atom(*x.a, *y.a)) {
        y.ex = add_ex(y.ex, x.ex);
        y.mask |= x.mask;
        consumed = true;
        break;
      }
      std::vector<std::pair<AtomPtr, int>> g;
      Poly xq, yq;
      if (!common_factor(x, y, g, xq, yq)) continue;
      Elem yy = std::move(y);
      done.erase(done.begin() + long(k));
      std::vector<int> both = add_ex(x.ex, yy.ex);
      for (auto& [a, e] : g) todo.push_back({a, scale_ex(both, e), 0});
      for (auto& [a, e] : atom_pieces(xq)) todo.push_back({a, scale_ex(x.ex, e), x.mask});
      for (auto& [a, e] : atom_pieces(yq)) todo.push_back({a, scale_ex(yy.ex, e), yy.mask});
      consumed = true;
      break;
    }
    if (!consumed) done.push_back(std::move(x));
  }
  return done;
}

std::vector<DenFactor> column(const std::vector<Elem>& es, size_t i) {
  std::vector<DenFactor> r;
  for (const auto& e : es)
    if (e.ex[i] != 0) r.push_back({e.a, e.ex[i]});
  return r;
}

// Remove from `num` every factor it shares with the denominator.
void cancel(Poly& num, std::vector<DenFactor>& den) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t k = 0; k < den.size() && !num.is_constant(); ++k) {
      auto& f = den[k];
      if (f.atom->irreducible()) {
        while (f.mult > 0) {
          auto q = divide_by_atom(num, *f.atom);
          if (!q) break;
          num = std::move(*q);
          --f.mult;
        }
        continue;
      }
      Poly g = gcd(num, f.atom->poly);
      if (g.is_constant()) continue;
      auto nq = num.divexact(g);
      auto rq = f.atom->poly.divexact(g);
      if (!nq || !rq) throw std::logic_error("gcd does not divide its arguments");
      num = std::move(*nq);
      Poly rest = std::move(*rq);
      int m = f.mult;
      std::vector<Elem> es;
      uint64_t other = 1;
      for (size_t j = 0; j < den.size(); ++j)
        if (j != k) es.push_back({den[j].atom, {den[j].mult}, other});
      for (auto& [a, e] : atom_pieces(g)) es.push_back({a, {e * (m - 1)}, 0});
      for (auto& [a, e] : atom_pieces(rest)) es.push_back({a, {e * m}, 0});
      den = column(refine(std::move(es)), 0);
      again = true;
      break;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.mult == 0; }),
            den.end());
}

Poly factor_product(const std::vector<std::pair<const Atom*, int>>& fs) {
  Poly r = Poly::constant(1);
  for (const auto& [a, e] : fs)
    if (e > 0) r *= a->poly.pow(e);
  return r;
}

VarList common_vars(const VarList& a, const VarList& b) {
  if (!a) return b;
  if (!b) return a;
  if (same_vars(a, b)) return a;
  throw std::invalid_argument("operands use different indeterminate lists");
}

Integer num_of(const Rational& r) { return r.get_num(); }
Integer den_of(const Rational& r) { return r.get_den(); }

Integer igcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer ilcm(const Integer& a, const Integer& b) {
  Integer g;
  mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string rational_str(const Rational& r) { return r.get_str(); }

std::string poly_str_q(const std::vector<std::pair<Mono, Rational>>& ts,
                       const std::vector<std::string>& names) {
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || m.is_one()) os << rational_str(a);
    bool star = !unit;
    for (size_t i = 0; i < names.size() && i < size_t(kMaxVars); ++i) {
      if (!m[int(i)]) continue;
      if (star) os << "*";
      os << names[i];
      if (m[int(i)] != 1) os << "^" << m[int(i)];
      star = true;
    }
  }
  return os.str();
}

std::vector<std::string> names_or_default(const VarList& v) {
  if (v) return *v;
  return {};
}

// image of a polynomial under x_i -> c_i x^{m_i}
struct LaurentImage {
  Rational factor;
  Poly poly;
  Mono shift;  // may be negative
};

LaurentImage map_poly(const Poly& p, const std::vector<std::pair<Rational, Mono>>& img) {
  std::vector<std::pair<Mono, Rational>> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.c;
    Mono e;
    for (int i = 0; i < kMaxVars; ++i) {
      int k = t.m[i];
      if (!k) continue;
      Rational ci;
      mpz_pow_ui(ci.get_num_mpz_t(), img[size_t(i)].first.get_num_mpz_t(), unsigned(k));
      mpz_pow_ui(ci.get_den_mpz_t(), img[size_t(i)].first.get_den_mpz_t(), unsigned(k));
      ci.canonicalize();
      c *= ci;
      e = e + img[size_t(i)].second.scaled(k);
    }
    raw.push_back({e, c});
  }
  LaurentImage li;
  if (raw.empty()) {
    li.factor = 1;
    return li;
  }
  Integer L = 1;
  Mono mn = raw[0].first;
  for (const auto& [e, c] : raw) {
    L = ilcm(L, den_of(c));
    mn = Mono::min(mn, e);
  }
  std::vector<Poly::Term> ts;
  ts.reserve(raw.size());
  for (const auto& [e, c] : raw) {
    Rational v = c * L;
    ts.push_back({e - mn, v.get_num()});
  }
  li.factor = Rational(1) / Rational(L);
  li.poly = Poly::from_terms(std::move(ts));
  li.shift = mn;
  return li;
}

}  // namespace

GenRat::GenRat(const Rational& c) : scale_(c) {
  scale_.canonicalize();
  if (sgn(scale_) != 0) num_ = Poly::constant(1);
}

GenRat GenRat::make(VarList vars, Rational scale, Poly num, Mono dmono,
                    std::vector<DenFactor> den, bool do_cancel) {
  GenRat r;
  r.vars_ = std::move(vars);
  if (num.is_zero() || sgn(scale) == 0) return r;
  Mono e = num.min_exponents();
  Mono d = dmono - e;
  num = num.shift(d.neg() - e);
  dmono = d.pos();
  if (do_cancel && !den.empty()) cancel(num, den);
  Integer c = num.content();
  if (num.lc_sign() < 0) c = -c;
  if (c != 1) {
    num = num.divexact_int(c);
    scale *= c;
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const DenFactor& f) { return f.mult == 0; }),
            den.end());
  std::sort(den.begin(), den.end(), [](const DenFactor& a, const DenFactor& b) {
    return compare_atoms(*a.atom, *b.atom) < 0;
  });
  r.scale_ = scale;
  r.num_ = std::move(num);
  r.dmono_ = dmono;
  r.den_ = std::move(den);
  return r;
}

GenRat GenRat::var(const VarList& vars, const std::string& name, int k) {
  int i = var_index(vars, name);
  if (i < 0) throw std::invalid_argument("unknown indeterminate " + name);
  return monomial(vars, Mono::var(i, k));
}

GenRat GenRat::monomial(const VarList& vars, const Mono& m, const Rational& c) {
  return make(vars, c, Poly::monomial(m.pos()), m.neg(), {}, false);
}

GenRat GenRat::from_poly(const VarList& vars, const Poly& p, const Rational& c) {
  return make(vars, c, p, Mono(), {}, false);
}

GenRat GenRat::fraction(const VarList& vars, const Poly& num, const Poly& den) {
  return from_poly(vars, num) / from_poly(vars, den);
}

Poly GenRat::den_poly() const {
  Poly r = Poly::monomial(dmono_);
  for (const auto& f : den_) r *= f.atom->poly.pow(f.mult);
  return r;
}

std::vector<std::pair<Mono, Rational>> GenRat::num_terms() const {
  std::vector<std::pair<Mono, Rational>> r;
  for (const auto& t : num_.terms()) r.push_back({t.m, scale_ * Rational(t.c)});
  return r;
}

GenRat GenRat::operator-() const {
  GenRat r = *this;
  r.scale_ = -r.scale_;
  return r;
}

GenRat GenRat::sum(const std::vector<GenRat>& xs) {
  std::vector<const GenRat*> nz;
  VarList v;
  for (const auto& x : xs) {
    v = common_vars(v, x.vars_);
    if (!x.is_zero()) nz.push_back(&x);
  }
  if (nz.empty()) {
    GenRat z;
    z.vars_ = v;
    return z;
  }
  if (nz.size() == 1) {
    GenRat r = *nz[0];
    if (!r.vars_) r.vars_ = v;
    return r;
  }
  if (nz.size() > 60) {
    std::vector<GenRat> parts;
    for (size_t i = 0; i < nz.size(); i += 60) {
      std::vector<GenRat> chunk;
      for (size_t j = i; j < std::min(nz.size(), i + 60); ++j) chunk.push_back(*nz[j]);
      parts.push_back(sum(chunk));
    }
    return sum(parts);
  }
  size_t n = nz.size();
  std::vector<Elem> es;
  for (size_t i = 0; i < n; ++i)
    for (const auto& f : nz[i]->den_) {
      std::vector<int> ex(n, 0);
      ex[i] = f.mult;
      es.push_back({f.atom, ex, uint64_t(1) << i});
    }
  std::vector<Elem> base = refine(std::move(es));
  Mono lm;
  for (size_t i = 0; i < n; ++i) lm = Mono::max(lm, nz[i]->dmono_);
  std::vector<int> L(base.size(), 0);
  for (size_t k = 0; k < base.size(); ++k)
    for (size_t i = 0; i < n; ++i) L[k] = std::max(L[k], base[k].ex[i]);
  Integer g = num_of(nz[0]->scale_), l = den_of(nz[0]->scale_);
  for (size_t i = 1; i < n; ++i) {
    g = igcd(g, num_of(nz[i]->scale_));
    l = ilcm(l, den_of(nz[i]->scale_));
  }
  Rational S(g, l);
  S.canonicalize();
  Poly total;
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::pair<const Atom*, int>> fs;
    for (size_t k = 0; k < base.size(); ++k) fs.push_back({base[k].a.get(), L[k] - base[k].ex[i]});
    Rational m = nz[i]->scale_ / S;
    Poly term = (nz[i]->num_ * factor_product(fs)).shift(lm - nz[i]->dmono_);
    total += term.scaled(m.get_num());
  }
  std::vector<DenFactor> den;
  for (size_t k = 0; k < base.size(); ++k)
    if (L[k]) den.push_back({base[k].a, L[k]});
  return make(v, S, std::move(total), lm, std::move(den), true);
}

GenRat operator+(const GenRat& a, const GenRat& b) { return GenRat::sum({a, b}); }
GenRat operator-(const GenRat& a, const GenRat& b) { return GenRat::sum({a, -b}); }

GenRat operator*(const GenRat& a, const GenRat& b) {
  VarList v = common_vars(a.vars_, b.vars_);
  if (a.is_zero() || b.is_zero()) {
    GenRat z;
    z.vars_ = v;
    return z;
  }
  Poly na = a.num_, nb = b.num_;
  std::vector<DenFactor> da = a.den_, db = b.den_;
  if (!db.empty()) cancel(na, db);
  if (!da.empty()) cancel(nb, da);
  std::vector<DenFactor> den;
  if (da.empty()) {
    den = std::move(db);
  } else if (db.empty()) {
    den = std::move(da);
  } else {
    std::vector<Elem> es;
    for (const auto& f : da) es.push_back({f.atom, {f.mult}, 1});
    for (const auto& f : db) es.push_back({f.atom, {f.mult}, 2});
    den = column(refine(std::move(es)), 0);
  }
  return GenRat::make(v, a.scale_ * b.scale_, na * nb, a.dmono_ + b.dmono_, std::move(den), false);
}

GenRat GenRat::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  LightFactors f = factor_light(num_);
  std::vector<DenFactor> den;
  for (auto& [a, e] : f.atoms) den.push_back({a, e});
  Poly nn = Poly::monomial(dmono_);
  for (const auto& d : den_) nn *= d.atom->poly.pow(d.mult);
  Rational s = Rational(1) / (scale_ * Rational(f.unit));
  return make(vars_, s, std::move(nn), f.mono, std::move(den), false);
}

GenRat operator/(const GenRat& a, const GenRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return a * b.inv();
}

GenRat GenRat::pow(int k) const {
  if (k < 0) return inv().pow(-k);
  if (k == 0) {
    GenRat one(1);
    one.vars_ = vars_;
    return one;
  }
  if (is_zero()) return *this;
  GenRat r;
  r.vars_ = vars_;
  Rational s;
  mpz_pow_ui(s.get_num_mpz_t(), scale_.get_num_mpz_t(), unsigned(k));
  mpz_pow_ui(s.get_den_mpz_t(), scale_.get_den_mpz_t(), unsigned(k));
  r.scale_ = s;
  r.num_ = num_.pow(k);
  r.dmono_ = dmono_.scaled(k);
  r.den_ = den_;
  for (auto& f : r.den_) f.mult *= k;
  return r;
}

GenRat GenRat::product(const std::vector<GenRat>& xs) {
  GenRat r(1);
  for (const auto& x : xs) r *= x;
  return r;
}

std::vector<std::string> GenRat::used_names() const {
  Mono u = Mono::max(num_.used_vars(), dmono_.pos());
  for (const auto& f : den_) u = Mono::max(u, f.atom->poly.used_vars());
  std::vector<std::string> r;
  for (int i = 0; i < kMaxVars; ++i)
    if (u[i] && vars_ && i < int(vars_->size())) r.push_back((*vars_)[size_t(i)]);
  return r;
}

GenRat GenRat::substitute(const std::map<std::string, GenRat>& bindings,
                          const VarList& target) const {
  VarList tgt = target;
  if (!tgt) {
    VarList vv;
    for (const auto& [name, val] : bindings) {
      if (!val.vars_) continue;
      if (vv && !same_vars(vv, val.vars_))
        throw std::invalid_argument("substitution values use different indeterminate lists");
      vv = val.vars_;
    }
    if (!vv) vv = vars_;
    std::vector<std::string> names = vv ? *vv : std::vector<std::string>{};
    for (const auto& nm : used_names())
      if (!bindings.count(nm) && std::find(names.begin(), names.end(), nm) == names.end())
        names.push_back(nm);
    tgt = (vv && names.size() == vv->size()) ? vv : make_vars(names);
  }
  if (!vars_) {
    GenRat r = *this;
    r.vars_ = tgt;
    return r;
  }
  for (const auto& [name, val] : bindings)
    if (var_index(vars_, name) < 0)
      throw std::invalid_argument("substitution binds unknown indeterminate " + name);
  if (is_zero()) {
    GenRat z;
    z.vars_ = tgt;
    return z;
  }
  size_t nv = vars_ ? vars_->size() : 0;
  std::vector<GenRat> img(nv);
  std::vector<bool> missing(nv, false);
  bool mono = true;
  for (size_t i = 0; i < nv; ++i) {
    const std::string& nm = (*vars_)[i];
    auto it = bindings.find(nm);
    if (it != bindings.end()) {
      const GenRat& v = it->second;
      img[i] = (v.vars_ && !same_vars(v.vars_, tgt)) ? v.embed(tgt) : v;
      if (!img[i].vars_) img[i].vars_ = tgt;
    } else {
      int j = var_index(tgt, nm);
      if (j >= 0) {
        img[i] = GenRat::monomial(tgt, Mono::var(j, 1));
      } else {
        missing[i] = true;
        img[i] = GenRat(1);
      }
    }
    const GenRat& g = img[i];
    if (!(g.num_.is_monomial() && g.den_.empty())) mono = false;
  }
  auto pole_error = [&](const Poly& p) {
    std::string msg = "substitution makes a denominator vanish:";
    Mono u = p.used_vars();
    for (size_t i = 0; i < nv; ++i)
      if (u[int(i)] && bindings.count((*vars_)[i]))
        msg += " " + (*vars_)[i] + " -> " + bindings.at((*vars_)[i]).str();
    return std::domain_error(msg);
  };
  {
    Mono u = Mono::max(num_.used_vars(), dmono_.pos());
    for (const auto& f : den_) u = Mono::max(u, f.atom->poly.used_vars());
    for (size_t i = 0; i < nv; ++i)
      if (missing[i] && u[int(i)])
        throw std::invalid_argument("target ring lacks indeterminate " + (*vars_)[i]);
  }

  if (mono) {
    std::vector<std::pair<Rational, Mono>> im(size_t(kMaxVars), {Rational(1), Mono()});
    for (size_t i = 0; i < nv; ++i) {
      const GenRat& g = img[i];
      if (g.is_zero()) {
        im[i] = {Rational(0), Mono()};
      } else {
        im[i] = {g.scale_, g.num_.lt().m - g.dmono_};
      }
    }
    LaurentImage ni = map_poly(num_, im);
    Rational scale = scale_ * ni.factor;
    Mono dm;  // Laurent exponent of the denominator monomial part
    {
      Poly dpm = Poly::monomial(dmono_);
      LaurentImage di = map_poly(dpm, im);
      if (di.poly.is_zero()) throw pole_error(dpm);
      scale /= di.factor * Rational(di.poly.lt().c);
      dm = di.shift + di.poly.lt().m;
    }
    std::vector<Elem> es;
    int bit = 0;
    for (const auto& f : den_) {
      LaurentImage ai = map_poly(f.atom->poly, im);
      if (ai.poly.is_zero()) throw pole_error(f.atom->poly);
      LightFactors lf = factor_light(ai.poly);
      Rational u = ai.factor * Rational(lf.unit);
      Rational up;
      mpz_pow_ui(up.get_num_mpz_t(), u.get_num_mpz_t(), unsigned(f.mult));
      mpz_pow_ui(up.get_den_mpz_t(), u.get_den_mpz_t(), unsigned(f.mult));
      scale /= up;
      dm = dm + (ai.shift + lf.mono).scaled(f.mult);
      uint64_t mask = bit < 64 ? (uint64_t(1) << bit) : 0;
      ++bit;
      for (auto& [a, e] : lf.atoms) es.push_back({a, {e * f.mult}, mask});
    }
    std::vector<DenFactor> den = column(refine(std::move(es)), 0);
    return make(tgt, scale, std::move(ni.poly), dm - ni.shift, std::move(den), true);
  }

  // general images: evaluate numerator and denominator in the target ring
  auto eval_poly = [&](const Poly& p) {
    std::vector<std::map<int, GenRat>> powers(nv);
    std::vector<GenRat> terms;
    terms.reserve(p.size());
    for (const auto& t : p.terms()) {
      GenRat term(Rational(t.c));
      for (size_t i = 0; i < nv; ++i) {
        int k = t.m[int(i)];
        if (!k) continue;
        auto& cache = powers[i];
        auto it = cache.find(k);
        if (it == cache.end()) it = cache.emplace(k, img[i].pow(k)).first;
        term *= it->second;
      }
      terms.push_back(std::move(term));
    }
    GenRat s = GenRat::sum(terms);
    if (!s.vars_) s.vars_ = tgt;
    return s;
  };
  GenRat num = eval_poly(num_) * GenRat(scale_);
  GenRat den = eval_poly(Poly::monomial(dmono_));
  if (den.is_zero()) throw pole_error(Poly::monomial(dmono_));
  for (const auto& f : den_) {
    GenRat a = eval_poly(f.atom->poly);
    if (a.is_zero()) throw pole_error(f.atom->poly);
    den *= a.pow(f.mult);
  }
  GenRat r = num / den;
  if (!r.vars_) r.vars_ = tgt;
  return r;
}

GenRat GenRat::embed(const VarList& target) const {
  if (same_vars(vars_, target)) return *this;
  return substitute({}, target);
}

Rational GenRat::evaluate(const std::map<std::string, Rational>& point) const {
  size_t nv = vars_ ? vars_->size() : 0;
  std::vector<Rational> xs(nv, Rational(0));
  std::vector<bool> have(nv, false);
  for (size_t i = 0; i < nv; ++i) {
    auto it = point.find((*vars_)[i]);
    if (it != point.end()) {
      xs[i] = it->second;
      have[i] = true;
    }
  }
  for (const auto& nm : used_names()) {
    int i = var_index(vars_, nm);
    if (!have[size_t(i)]) throw std::invalid_argument("no value given for " + nm);
  }
  Rational den = Poly::monomial(dmono_).eval_rational(xs);
  for (const auto& f : den_) {
    Rational v = f.atom->poly.eval_rational(xs);
    for (int k = 0; k < f.mult; ++k) den *= v;
  }
  if (sgn(den) == 0) throw std::domain_error("evaluation point is a pole");
  return scale_ * num_.eval_rational(xs) / den;
}

bool operator==(const GenRat& a, const GenRat& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.vars_ && b.vars_ && !same_vars(a.vars_, b.vars_)) return false;
  if (a.scale_ != b.scale_ || a.dmono_ != b.dmono_ || a.num_ != b.num_) return false;
  if (a.den_.size() == b.den_.size()) {
    bool same = true;
    for (size_t i = 0; i < a.den_.size() && same; ++i)
      same = a.den_[i].mult == b.den_[i].mult && same_atom(*a.den_[i].atom, *b.den_[i].atom);
    if (same) return true;
  }
  return a.den_poly() == b.den_poly();
}

std::string GenRat::str() const {
  std::vector<std::string> names = names_or_default(vars_);
  std::string n = poly_str_q(num_terms(), names);
  if (is_polynomial()) return n;
  std::vector<std::pair<Mono, Rational>> dt;
  Poly dp = den_poly();
  for (const auto& t : dp.terms()) dt.push_back({t.m, Rational(t.c)});
  std::string d = poly_str_q(dt, names);
  return "(" + n + ")/(" + d + ")";
}

GenRat qpoch(const GenRat& base, const GenRat& step, int k) {
  if (k < 0) throw std::invalid_argument("qpoch: negative length");
  GenRat r(1);
  GenRat s(1);
  for (int j = 0; j < k; ++j) {
    r *= GenRat(1) - base * s;
    s *= step;
  }
  return r;
}

}  // namespace cnp
