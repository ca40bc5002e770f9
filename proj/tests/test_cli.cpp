#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(CNPIERI_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, got);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("verify thm3 --n 2 --l1 3 --l2 2").code == 0);
  CHECK(run("verify thm3 --n 2 --l1 1 --l2 1 --perturb").code == 1);
  CHECK(run("compute-p --n 2 --lambda 1,2").code == 2);
  CHECK(run("verify nosuch").code == 2);
  CHECK(run("pieri --n 2 --l1 1").code == 2);
  CHECK(run("compute-p --n 5 --lambda 1").code == 3);
  CHECK(run("verify thm6 --n 4 --r 3").code == 3);
  CHECK(run("verify thm6 --n 3 --r 3 --probabilistic --seed 7").code == 0);
}

TEST_CASE("json output is deterministic") {
  Run a = run("pieri --n 2 --l1 2 --l2 1");
  Run b = run("pieri --n 2 --l1 2 --l2 1");
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["lam1"] == 2);
  CHECK(j["terms"].size() > 0);
}

TEST_CASE("text output") {
  Run t = run("compute-p --n 2 --lambda 1 --format text");
  REQUIRE(t.code == 0);
  CHECK(t.out.find("m(1,0)") != std::string::npos);
  Run v = run("verify cor7 --n 2 --format text");
  CHECK(v.code == 0);
  CHECK(v.out.find("verified") != std::string::npos);
}

TEST_CASE("b2 subcommands") {
  Run c = run("b2 compute --lambda 1");
  REQUIRE(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["weight"] == "1/2,1/2");
  CHECK(run("b2 verify-thm7 --l1 2 --l2 1").code == 0);
}
