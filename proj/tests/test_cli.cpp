#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_binary() {
  const char* p = std::getenv("CKGEOM_CLI");
  REQUIRE_MESSAGE(p != nullptr, "CKGEOM_CLI must point at the built binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = cli_binary() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli: eval spot values") {
  CHECK(run("eval embed1d --k1l2 0 --a 2 --ell 1").out ==
        "stilde = (0, 1)\n");
  CHECK(run("eval distance --space E2 --p 0 0 --q 3 4").out ==
        "distance = 5\n");
  const RunResult ck = run("eval ck --kappa 1 --x 0.5");
  CHECK(ck.exit_code == 0);
  CHECK(ck.out == "ck(1, 0.5) = 0.87758256189037276\n");
  CHECK(run("eval lambda-ext --kappa 1 --x 0.3").out.find(
            "branch=principal") != std::string::npos);
}

TEST_CASE("cli: sampled tables carry the versioned schema") {
  const RunResult r =
      run("sample cycle --space S2 --c1 0.2 --c2 0.1 --rho 0.4 --n 16");
  REQUIRE(r.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(r.out);
  CHECK(doc.at("schema") == "ckgeom.v1");
  CHECK(doc.at("space").at("k1") == 1.0);
  CHECK(doc.at("space").at("k2") == 1.0);
  CHECK(doc.at("chart") == "polar");
  CHECK(doc.at("columns").size() == 5);
  CHECK(doc.at("rows").size() > 8);
  for (const auto& row : doc.at("rows"))
    CHECK(row.size() == doc.at("columns").size());

  const RunResult g = run("sample embedding --space NH+ --n 8");
  REQUIRE(g.exit_code == 0);
  const nlohmann::json gd = nlohmann::json::parse(g.out);
  CHECK(gd.at("columns").back() == "at_infinity");
  CHECK(gd.at("rows").size() == 64);

  const RunResult c =
      run("sample cycle --space E2 --c1 0 --c2 0 --rho 1 --n 8 --format csv");
  REQUIRE(c.exit_code == 0);
  CHECK(c.out.substr(0, c.out.find('\n')) == "r,phi,x0,x1,x2");
}

TEST_CASE("cli: outputs are byte-identical across runs") {
  for (const char* cmd :
       {"verify lambda --seed 3",
        "sample cycle --space H2 --c1 0.1 --c2 0.2 --rho 0.5 --n 32",
        "plot embed1d", "plot cycle --space AdS --c1 0.1 --c2 0 --rho 0.3"}) {
    const RunResult a = run(cmd), b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
  }
}

TEST_CASE("cli: svg output is well formed") {
  const RunResult r = run("plot embed1d");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("viewBox") != std::string::npos);
  CHECK(r.out.find("</svg>") != std::string::npos);
}

TEST_CASE("cli: exit codes") {
  CHECK(run("eval nonsense").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("eval distance --space E2 --p 0 0").exit_code == 2);
  CHECK(run("sample cycle --space S2 --rho 0.4 "
            "--out /nonexistent-dir/x.json").exit_code == 3);
  CHECK(run("verify lambda --seed 5").exit_code == 0);
  // shrinking every tolerance by 1e9 must make the checks fail loudly
  CHECK(run("verify lambda --seed 5 --tol 1e-9").exit_code == 1);
}
