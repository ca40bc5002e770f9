#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cnp/btwo.hpp"
#include "cnp/macdonald.hpp"
#include "cnp/verify.hpp"

using namespace cnp;

namespace {

enum Exit { ok = 0, failed = 1, usage = 2, guard = 3 };

struct Global {
  std::string format = "json";
  int max_rank = 4;
  int max_size = 10;
};

KVec parse_ints(const std::string& s) {
  KVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer list " + s);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

Partition parse_lambda(const std::string& s, int n) {
  Partition p = parse_ints(s);
  if (!is_partition(p)) throw std::invalid_argument("lambda must be weakly decreasing and nonnegative: " + s);
  return fit(p, n);
}

void check_size(const Global& g, int n, int size) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (n > g.max_rank || size > g.max_size)
    throw ResourceGuardExceeded("rank " + std::to_string(n) + " and size " + std::to_string(size) +
                                " exceed the guard (rank <= " + std::to_string(g.max_rank) +
                                ", size <= " + std::to_string(g.max_size) + ")");
}

void print(const Global& g, const Json& j, const std::string& text) {
  if (g.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string expansion_text(const BasisExpansion& e) {
  std::string s;
  for (const auto& p : e.ordered_keys()) s += "m" + partition_str(p) + "\t" + e.coeff(p).str() + "\n";
  return s;
}

std::string table_text(const PieriExpansion& e) {
  std::string s;
  for (const auto& [ij, c] : e.terms)
    s += std::to_string(ij.first) + "\t" + std::to_string(ij.second) + "\t" + c.str() + "\n";
  return s;
}

std::string report_line(const VerificationReport& r) {
  std::string s = r.identity + " " + r.params.dump() + " " + r.mode + " " +
                  (r.ok ? (r.mode == "probabilistic" ? "probabilistically verified" : "verified") : "FAILED");
  if (!r.detail.empty()) s += " (" + r.detail + ")";
  return s + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Macdonald polynomials of type C_n: Pieri expansions and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-rank", g.max_rank, "largest rank accepted by compute commands");
  app.add_option("--max-size", g.max_size, "largest |lambda| accepted by compute commands");

  int n = 2, l1 = 0, l2 = 0, r = 0;
  std::string lambda = "0";

  auto* cp = app.add_subcommand("compute-p", "monic P_lambda in the orbit-sum basis");
  auto* cq = app.add_subcommand("compute-q", "Q_lambda in the orbit-sum basis");
  auto* pm = app.add_subcommand("pieri-minuscule", "P_e1 P_lambda expansion coefficients");
  auto* pq = app.add_subcommand("pieri-quasi", "quasi-minuscule Pieri coefficients");
  for (auto* sc : {cp, cq, pm, pq}) {
    sc->add_option("--n", n, "rank")->required();
    sc->add_option("--lambda", lambda, "partition, e.g. 3,1")->required();
  }
  auto* pi = app.add_subcommand("pieri", "c_ij in Q_(l1) Q_(l2) = sum c_ij Q_(l1+i-j, l2-i-j)");
  auto* ip = app.add_subcommand("inverse-pieri", "C_ij in Q_(l1,l2) = sum C_ij Q_(l1+i-j) Q_(l2-i-j)");
  for (auto* sc : {pi, ip}) {
    sc->add_option("--n", n, "rank")->required();
    sc->add_option("--l1", l1)->required();
    sc->add_option("--l2", l2)->required();
  }
  auto* os = app.add_subcommand("onerow-series", "Q_(0), ..., Q_(R) from the generating product");
  os->add_option("--n", n, "rank")->required();
  os->add_option("--r", r, "largest row length")->required();

  auto* b2 = app.add_subcommand("b2", "type B_2 via the C_2 correspondence");
  b2->require_subcommand(1);
  auto* b2c = b2->add_subcommand("compute", "B_2 polynomial of the C_2 partition (doubled weights)");
  b2c->add_option("--lambda", lambda, "C_2 partition, e.g. 2,1")->required();
  auto* b2v = b2->add_subcommand("verify-thm7", "B_2 product and inverse expansions");
  b2v->add_option("--l1", l1)->required();
  b2v->add_option("--l2", l2)->required();

  auto* ver = app.add_subcommand("verify", "check an identity over its default box or given parameters");
  std::string id;
  VerifyOptions vo;
  std::string kvec, vlambda;
  int vn = 0, vl1 = 0, vl2 = 0, vr = 0, vk = 0, vimax = 0;
  ver->add_option("id", id, "identity id or 'all'")->required();
  auto* o_n = ver->add_option("--n", vn);
  auto* o_l1 = ver->add_option("--l1", vl1);
  auto* o_l2 = ver->add_option("--l2", vl2);
  auto* o_r = ver->add_option("--r", vr);
  auto* o_k = ver->add_option("--k", vk, "t = q^k for orthogonality");
  auto* o_im = ver->add_option("--i-max", vimax);
  auto* o_lam = ver->add_option("--lambda", vlambda);
  auto* o_kv = ver->add_option("--kvec", kvec, "block sizes, e.g. 2,1");
  ver->add_flag("--probabilistic", vo.probabilistic, "random evaluation instead of exact");
  ver->add_option("--seed", vo.seed, "seed for probabilistic mode");
  ver->add_option("--guard", vo.guard.guard, "bound on n + r for exact symmetrized sums");
  ver->add_flag("--perturb", vo.perturb, "perturb c_00 (negative control)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::usage;
  }

  try {
    if (cp->parsed() || cq->parsed() || pm->parsed() || pq->parsed()) {
      Partition lam = parse_lambda(lambda, n);
      check_size(g, n, weight_size(lam));
      if (cp->parsed() || cq->parsed()) {
        BasisExpansion e = cp->parsed() ? compute_P(lam, n) : compute_Q(lam, n);
        print(g, to_json(e), expansion_text(e));
      } else if (pm->parsed()) {
        Json rows = Json::array();
        std::string text;
        for (const auto& [key, c] : pieri_minuscule(lam, n)) {
          rows.push_back({{"k", key.first}, {"sign", key.second}, {"coeff", to_json(c)}});
          text += std::to_string(key.first) + "\t" + (key.second > 0 ? "+" : "-") + "\t" + c.str() + "\n";
        }
        print(g, {{"n", n}, {"lambda", lam}, {"terms", rows}}, text);
      } else {
        Json rows = Json::array();
        std::string text;
        for (const auto& [tau, cd] : pieri_quasiminuscule(lam, n)) {
          rows.push_back({{"tau", tau}, {"C", to_json(cd.C)}, {"D", to_json(cd.D)}});
          text += partition_str(tau) + "\t" + cd.C.str() + "\t" + cd.D.str() + "\n";
        }
        print(g, {{"n", n}, {"lambda", lam}, {"terms", rows}}, text);
      }
      return Exit::ok;
    }
    if (pi->parsed() || ip->parsed()) {
      if (l2 < 0 || l1 < l2) throw std::invalid_argument("need l1 >= l2 >= 0");
      check_size(g, n, l1 + l2);
      PieriExpansion e = pi->parsed() ? expand_tworow_product(l1, l2, n) : expand_tworow_inverse(l1, l2, n);
      print(g, to_json(e), table_text(e));
      return Exit::ok;
    }
    if (os->parsed()) {
      if (r < 0) throw std::invalid_argument("negative row length");
      check_size(g, n, r);
      auto series = onerow_Q_series(r, n);
      Json arr = Json::array();
      std::string text;
      for (size_t k = 0; k < series.size(); ++k) {
        arr.push_back(to_json(series[k]));
        text += "Q_(" + std::to_string(k) + ")\n" + expansion_text(series[k]);
      }
      print(g, arr, text);
      return Exit::ok;
    }
    if (b2c->parsed()) {
      Partition lam = parse_lambda(lambda, 2);
      check_size(g, 2, weight_size(lam));
      BasisExpansion e = b2_from_c2(lam);
      Json j = to_json(e);
      j["weight"] = b2_weight_of_c2(lam).str();
      j["coordinates"] = "doubled";
      print(g, j, "weight " + b2_weight_of_c2(lam).str() + " (doubled coordinates below)\n" + expansion_text(e));
      return Exit::ok;
    }
    if (b2v->parsed()) {
      VerifyOptions o;
      o.l1 = l1;
      o.l2 = l2;
      VerificationReport rep = run_verification("thm7", o);
      print(g, to_json(rep), report_line(rep));
      return rep.ok ? Exit::ok : Exit::failed;
    }
    if (ver->parsed()) {
      if (o_n->count()) vo.n = vn;
      if (o_l1->count()) vo.l1 = vl1;
      if (o_l2->count()) vo.l2 = vl2;
      if (o_r->count()) vo.r = vr;
      if (o_k->count()) vo.k = vk;
      if (o_im->count()) vo.i_max = vimax;
      if (o_kv->count()) vo.kvec = parse_ints(kvec);
      if (o_lam->count()) {
        Partition p = parse_ints(vlambda);
        if (!is_partition(p)) throw std::invalid_argument("lambda must be weakly decreasing and nonnegative");
        vo.lambda = p;
      }
      std::vector<VerificationReport> reps;
      if (id == "all") {
        reps = verify_all(vo);
      } else {
        if (!is_verification_id(id)) throw std::invalid_argument("unknown identity " + id);
        reps.push_back(run_verification(id, vo));
      }
      bool all_ok = true;
      for (const auto& rep : reps) {
        all_ok = all_ok && rep.ok;
        std::cout << report_line(rep);
        if (g.format == "json") std::cout << to_json(rep).dump() << "\n";
      }
      return all_ok ? Exit::ok : Exit::failed;
    }
  } catch (const ResourceGuardExceeded& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return Exit::guard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return Exit::usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::failed;
  }
  return Exit::usage;
}
