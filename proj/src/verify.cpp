#include "cnp/verify.hpp"

#include <chrono>
#include <functional>

#include "cnp/btwo.hpp"
#include "cnp/macdonald.hpp"

namespace cnp {

namespace {

using Check = std::function<std::string()>;  // empty on success

struct Case {
  Json params;
  Check run;
};

std::string fail_if(bool ok, const std::string& what = "identity does not hold") { return ok ? "" : what; }

std::vector<int> values(const std::optional<int>& v, int lo, int hi) {
  if (v) return {*v};
  std::vector<int> out;
  for (int i = lo; i <= hi; ++i) out.push_back(i);
  return out;
}

std::vector<int> values(const std::optional<int>& v, std::vector<int> dflt) {
  if (v) return {*v};
  return dflt;
}

std::vector<Partition> lambdas(const VerifyOptions& o, int max_size, int n) {
  if (o.lambda) return {fit(*o.lambda, n)};
  return partitions_up_to(max_size, n);
}

// (n, l1, l2) box with l1 >= l2
std::vector<Case> tworow_box(const VerifyOptions& o, std::vector<int> ns,
                             const std::function<std::string(int, int, int)>& f) {
  std::vector<Case> cs;
  for (int n : values(o.n, ns))
    for (int l1 : values(o.l1, 0, 4))
      for (int l2 : values(o.l2, 0, 3)) {
        if (l2 > l1 && !(o.l1 && o.l2)) continue;
        cs.push_back({{{"n", n}, {"l1", l1}, {"l2", l2}}, [=] { return f(n, l1, l2); }});
      }
  return cs;
}

std::vector<std::pair<int, int>> nr_pairs(const VerifyOptions& o, std::vector<std::pair<int, int>> dflt) {
  if (o.n && o.r) return {{*o.n, *o.r}};
  std::vector<std::pair<int, int>> out;
  for (auto p : dflt)
    if ((!o.n || p.first == *o.n) && (!o.r || p.second == *o.r)) out.push_back(p);
  return out;
}

std::vector<Case> kvec_box(const VerifyOptions& o, const std::function<bool(int, const KVec&)>& f) {
  std::vector<KVec> ks = o.kvec ? std::vector<KVec>{*o.kvec} : std::vector<KVec>{{1}, {2}, {1, 1}, {2, 1}};
  std::vector<Case> cs;
  for (int n : values(o.n, 1, 3))
    for (const auto& k : ks) cs.push_back({{{"n", n}, {"k", k}}, [=] { return fail_if(f(n, k)); }});
  return cs;
}

std::vector<Case> cases_for(const std::string& id, const VerifyOptions& o) {
  std::vector<Case> cs;
  if (id == "thm3") {
    PieriCoeffFn c = pieri_c;
    if (o.perturb)
      c = [](int i, int j, int l1, int l2, int n) {
        ExactScalar v = pieri_c(i, j, l1, l2, n);
        return i == 0 && j == 0 ? v + ExactScalar(1) : v;
      };
    return tworow_box(o, {2, 3}, [c](int n, int l1, int l2) { return thm3_discrepancy(l1, l2, n, c); });
  }
  if (id == "thm4")
    return tworow_box(o, {2, 3}, [](int n, int l1, int l2) { return fail_if(verify_thm4(l1, l2, n)); });
  if (id == "thm5")
    return tworow_box(o, {2, 3}, [](int n, int l1, int l2) {
      if (!verify_thm5(l1, l2, n)) return std::string("two-row expansion does not hold");
      return fail_if(verify_round_trip(l1, l2, n), "round trip is not the identity");
    });
  if (id == "cor6")
    return tworow_box(o, {2, 3}, [](int n, int l1, int l2) { return fail_if(verify_cor6(l1, l2, n)); });
  if (id == "thm6") {
    std::vector<std::pair<int, int>> box;
    if (o.probabilistic) {
      box = nr_pairs(o, {{3, 3}});
    } else {
      for (int n = 0; n <= 3; ++n)
        for (int r = 0; r <= 2; ++r) box.push_back({n, r});
      box.push_back({1, 3});
      box.push_back({0, 3});
      box = nr_pairs(o, box);
    }
    bool explicit_pair = o.n && o.r;
    for (auto [n, r] : box) {
      if (!o.probabilistic && !explicit_pair && n + r > o.guard.guard) continue;
      IdentityConfig g = o.guard;
      std::uint64_t seed = o.seed;
      bool prob = o.probabilistic;
      cs.push_back({{{"n", n}, {"r", r}}, [=] {
                      return fail_if(prob ? verify_thm6_probabilistic(n, r, seed) : verify_thm6(n, r, g));
                    }});
    }
    return cs;
  }
  if (id == "cor7") {
    for (int n : values(o.n, 0, 3)) cs.push_back({{{"n", n}}, [=] { return fail_if(verify_cor7(n)); }});
    return cs;
  }
  if (id == "thm7") {
    for (int l1 : values(o.l1, 0, 4))
      for (int l2 : values(o.l2, 0, 3)) {
        if (l2 > l1 && !(o.l1 && o.l2)) continue;
        cs.push_back({{{"l1", l1}, {"l2", l2}}, [=] { return fail_if(verify_thm7(l1, l2)); }});
      }
    if (!o.l1 && !o.l2)
      for (const auto& lam : partitions_up_to(6, 2))
        cs.push_back({{{"eigen", lam}}, [=] { return fail_if(verify_b2_eigen(lam), "not an eigenvector"); }});
    return cs;
  }
  if (id == "thm8" || id == "thm9") {
    bool eight = id == "thm8";
    for (auto [n, r] : nr_pairs(o, {{1, 1}, {2, 1}, {2, 2}, {3, 2}}))
      cs.push_back({{{"n", n}, {"r", r}}, [=] { return fail_if(eight ? verify_thm8(n, r) : verify_thm9(n, r)); }});
    return cs;
  }
  if (id == "thm10") return kvec_box(o, verify_thm10);
  if (id == "thm11") return kvec_box(o, verify_thm11);
  if (id == "rosengren") return kvec_box(o, verify_rosengren_form);
  if (id == "eq43" || id == "thm2c" || id == "spec-formula") {
    int size = id == "thm2c" ? 4 : 5;
    for (int n : values(o.n, {2, 3}))
      for (const auto& lam : lambdas(o, size, n))
        cs.push_back({{{"n", n}, {"lambda", lam}}, [=] {
                        if (id == "eq43") return fail_if(verify_pieri_minuscule(lam, n));
                        if (id == "thm2c") return fail_if(verify_pieri_quasiminuscule(lam, n));
                        return fail_if(verify_specialization(lam, n));
                      }});
    return cs;
  }
  if (id == "orthogonality") {
    for (int n : values(o.n, {2}))
      for (int k : values(o.k, 1, 2))
        cs.push_back({{{"n", n}, {"k", k}, {"max_size", 3}}, [=] { return fail_if(verify_orthogonality(n, 3, k)); }});
    return cs;
  }
  if (id == "bressoud") {
    cs.push_back({{{"pair", "A"}, {"size", 4}}, [] { return verify_bressoud_1d(4).first_failure; }});
    cs.push_back({{{"pair", "fg"}, {"size", 4}}, [] { return verify_fg_1d(4).first_failure; }});
    cs.push_back({{{"pair", "2d"}, {"size", 3}}, [] { return verify_two_dim(3).first_failure; }});
    return cs;
  }
  if (id == "phi65") {
    int i_max = o.i_max.value_or(6);
    cs.push_back({{{"i_max", i_max}}, [=] { return fail_if(verify_65_summation(i_max)); }});
    return cs;
  }
  if (id == "wsum") {
    for (int n : values(o.n, {2, 3}))
      cs.push_back({{{"n", n}}, [=] {
                      WsumResult w = verify_macdonald_wsum(n);
                      return w.ok ? std::string() : "sides differ: " + w.lhs + " vs " + w.rhs;
                    }});
    return cs;
  }
  throw std::invalid_argument("unknown identity " + id);
}

}  // namespace

Json to_json(const VerificationReport& r) {
  Json j = {{"identity", r.identity}, {"params", r.params}, {"mode", r.mode}, {"ok", r.ok},
            {"elapsed_ms", r.elapsed_ms}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

const std::vector<std::string>& verification_ids() {
  static const std::vector<std::string> ids{
      "thm3", "thm4", "thm5",  "thm6",  "thm7",         "thm8",          "thm9",     "thm10", "thm11", "cor6",
      "cor7", "eq43", "thm2c", "spec-formula", "orthogonality", "bressoud", "phi65", "wsum",  "rosengren"};
  return ids;
}

bool is_verification_id(const std::string& id) {
  for (const auto& s : verification_ids())
    if (s == id) return true;
  return false;
}

VerificationReport run_verification(const std::string& id, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.identity = id;
  rep.mode = opt.probabilistic && id == "thm6" ? "probabilistic" : "exact";
  if (opt.probabilistic && id != "thm6")
    throw std::invalid_argument("probabilistic mode is only available for thm6");
  auto cs = cases_for(id, opt);
  if (cs.empty()) throw std::invalid_argument("no cases selected for " + id);
  if (cs.size() == 1) {
    rep.params = cs.front().params;
  } else {
    rep.params = {{"cases", cs.size()}};
  }
  if (opt.probabilistic) rep.params["seed"] = opt.seed;
  rep.ok = true;
  for (const auto& c : cs) {
    std::string why = c.run();
    if (!why.empty()) {
      rep.ok = false;
      rep.detail = c.params.dump() + ": " + why;
      break;
    }
  }
  rep.elapsed_ms =
      long(std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return rep;
}

std::vector<VerificationReport> verify_all(const VerifyOptions& opt) {
  std::vector<VerificationReport> out;
  VerifyOptions base;
  base.guard = opt.guard;
  base.seed = opt.seed;
  base.perturb = opt.perturb;
  for (const auto& id : verification_ids()) {
    out.push_back(run_verification(id, base));
    if (id == "thm6") {
      VerifyOptions p = base;
      p.probabilistic = true;
      out.push_back(run_verification(id, p));
    }
  }
  return out;
}

}  // namespace cnp
