#include "cnp/json_io.hpp"

#include <stdexcept>

namespace cnp {

namespace {

Json exp_json(const Mono& m, size_t nvars) {
  Json e = Json::array();
  for (size_t i = 0; i < nvars; ++i) e.push_back(int(m[int(i)]));
  return e;
}

Mono mono_from(const Json& e) {
  if (!e.is_array() || e.size() > size_t(kMaxVars)) throw std::invalid_argument("bad exponent vector");
  Mono m;
  for (size_t i = 0; i < e.size(); ++i) m[int(i)] = int16_t(e[i].get<int>());
  return m;
}

Rational rational_from(const Json& c) {
  Rational r(c.get<std::string>());
  r.canonicalize();
  return r;
}

GenRat poly_from(const VarList& vars, const Json& terms) {
  std::vector<GenRat> parts;
  for (const auto& t : terms) {
    Rational c = rational_from(t.at("coeff"));
    parts.push_back(vars ? GenRat::monomial(vars, mono_from(t.at("exp")), c) : GenRat(c));
  }
  return GenRat::sum(parts);
}

}  // namespace

Json to_json(const GenRat& g) {
  Json j;
  Json names = Json::array();
  size_t nv = 0;
  if (g.vars()) {
    for (const auto& s : *g.vars()) names.push_back(s);
    nv = g.vars()->size();
  }
  j["vars"] = names;
  Json num = Json::array();
  for (const auto& [m, c] : g.num_terms()) num.push_back({{"exp", exp_json(m, nv)}, {"coeff", c.get_str()}});
  j["num"] = num;
  Json den = Json::array();
  if (g.is_zero()) {
    den.push_back({{"exp", exp_json(Mono(), nv)}, {"coeff", "1"}});
  } else {
    Poly d = g.den_poly();
    for (const auto& t : d.terms())
      den.push_back({{"exp", exp_json(t.m, nv)}, {"coeff", Rational(t.c).get_str()}});
  }
  j["den"] = den;
  return j;
}

GenRat genrat_from_json(const Json& j) {
  std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
  VarList vars = names.empty() ? VarList() : make_vars(names);
  GenRat num = poly_from(vars, j.at("num"));
  GenRat den = poly_from(vars, j.at("den"));
  if (den.is_zero()) throw std::invalid_argument("zero denominator");
  return num / den;
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", to_json(c)}});
  return {{"n", f.n()}, {"terms", terms}};
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly f(j.at("n").get<int>());
  for (const auto& t : j.at("terms")) {
    Exponent e = t.at("exp").get<Exponent>();
    if (int(e.size()) != f.n()) throw std::invalid_argument("exponent length differs from n");
    f.add_term(e, genrat_from_json(t.at("coeff")));
  }
  return f;
}

Json to_json(const BasisExpansion& e) {
  Json coeffs = Json::array();
  for (const auto& p : e.ordered_keys()) coeffs.push_back({{"lambda", p}, {"value", to_json(e.coeff(p))}});
  return {{"basis", basis_name(e.basis)}, {"n", e.n}, {"coeffs", coeffs}};
}

BasisExpansion expansion_from_json(const Json& j) {
  BasisExpansion e;
  std::string b = j.at("basis").get<std::string>();
  bool found = false;
  for (Basis cand : {Basis::m, Basis::P, Basis::Q, Basis::chi})
    if (basis_name(cand) == b) {
      e.basis = cand;
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown basis " + b);
  e.n = j.at("n").get<int>();
  for (const auto& c : j.at("coeffs")) e.add(c.at("lambda").get<Partition>(), genrat_from_json(c.at("value")));
  return e;
}

Json to_json(const PieriExpansion& e) {
  Json terms = Json::array();
  for (const auto& [ij, c] : e.terms) terms.push_back({{"i", ij.first}, {"j", ij.second}, {"coeff", to_json(c)}});
  return {{"n", e.n}, {"lam1", e.lam1}, {"lam2", e.lam2}, {"terms", terms}};
}

PieriExpansion pieri_from_json(const Json& j) {
  PieriExpansion e;
  e.n = j.at("n").get<int>();
  e.lam1 = j.at("lam1").get<int>();
  e.lam2 = j.at("lam2").get<int>();
  for (const auto& t : j.at("terms"))
    e.terms[{t.at("i").get<int>(), t.at("j").get<int>()}] = genrat_from_json(t.at("coeff"));
  return e;
}

}  // namespace cnp
