#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dtrip/cli/cli.hpp"
#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = dtrip::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli examples") {
  auto c = run({"pisot", "certify", "--poly", "x^3-x-1"});
  CHECK(c.code == 0);
  CHECK(c.out.find("accepted: true") != std::string::npos);
  CHECK(c.out.find("1.3247179572") != std::string::npos);

  auto e = run({"rec", "eval", "--poly", "x^3-x^2-x-1", "--init", "0,0,1", "--range", "0,9"});
  CHECK(e.code == 0);
  CHECK(e.out == "0,0,1,1,2,4,7,13,24,44\n");

  auto d = run({"quad", "dplus", "1", "3", "8"});
  CHECK(d.code == 0);
  CHECK(d.out == "120\n");
}

TEST_CASE("cli json schema") {
  auto r = run({"--format", "json", "quad", "euler", "1", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "quad euler");
  CHECK(j["status"] == "ok");
  CHECK(j["input"]["a"] == "1");
  CHECK(j["result"]["quadruple"] == nlohmann::json({"1", "3", "8", "120"}));

  // large values stay exact strings
  auto big = run({"rec", "eval", "--coeffs", "-1,-1,1", "--init", "0,1", "--n", "300", "--format", "json"});
  REQUIRE(big.code == 0);
  auto jb = nlohmann::json::parse(big.out);
  CHECK(jb["result"]["values"][0] == "222232244629420445529739893461909967206666939096499764990979600");
}

TEST_CASE("cli coefficient list and polynomial give identical output") {
  auto a = run({"--format", "json", "pisot", "certify", "--poly", "x^3-x-1"});
  auto b = run({"--format", "json", "pisot", "certify", "--coeffs", "-1,-1,0,1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto h1 = run({"hyp", "check", "--poly", "x^2-x-1", "--init", "-1,2"});
  auto h2 = run({"hyp", "check", "--coeffs=-1,-1,1", "--init=-1,2"});
  CHECK(h1.code == 0);
  CHECK(h1.out == h2.out);
}

TEST_CASE("cli exit codes") {
  auto bad = run({"pisot", "certify", "--poly", "x^3-x-@"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("@") != std::string::npos);

  auto rej = run({"pisot", "certify", "--poly", "x^2-2"});
  CHECK(rej.code == 0);
  CHECK(rej.out.find("reason: conjugate-outside-unit-disk") != std::string::npos);
  CHECK(rej.out.find("status: rejected") != std::string::npos);

  auto dom = run({"quad", "dplus", "1", "2", "4"});
  CHECK(dom.code == 2);
  CHECK(dom.err.find("pair (1,2)") != std::string::npos);

  auto trace = run({"rec", "from-trace", "--poly", "x^2-x-1", "--f", "-1,2", "--d", "7"});
  CHECK(trace.code == 2);
  CHECK(trace.err.find("5/7") != std::string::npos);

  auto capped = run({"hyp", "check", "--poly", "x^3-x-1", "--init", "6,-9,2", "--cap", "2"});
  CHECK(capped.code == 3);
  CHECK(capped.out.find("status: undecided") != std::string::npos);

  std::stop_source src;
  src.request_stop();
  std::ostringstream out;
  std::ostringstream err;
  int cancelled = dtrip::cli::run({"search", "triples", "--poly", "x^2-x-1", "--init", "0,1", "--cmax", "300"}, out, err,
                                  src.get_token());
  CHECK(cancelled == 3);
  CHECK(err.str().find("checkpoint") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"pisot", "family", "--family", "tower-c", "--k", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("cli csv tables have a fixed header") {
  auto t = run({"--format", "csv", "search", "triples", "--poly", "x^2-x-1", "--init", "2,1", "--cmax", "300"});
  REQUIRE(t.code == 0);
  CHECK(t.out.rfind("a,b,c,x,y,z,increasing_witness\n", 0) == 0);
  CHECK(t.out.find("\n1,2,3,") != std::string::npos);

  auto g = run({"--format", "csv", "search", "gcd-scan", "--poly", "x^2-x-1", "--init", "0,1", "--ylo", "10", "--zhi",
                "30"});
  REQUIRE(g.code == 0);
  CHECK(g.out.rfind("y,z,g,ratio\n", 0) == 0);
}

TEST_CASE("cli output is deterministic") {
  std::vector<std::string> cmd{"--format", "json", "search", "triples", "--poly", "x^3-x^2-x-1",
                               "--init",   "0,0,1",  "--cmax", "300", "--workers", "4"};
  auto a = run(cmd);
  auto b = run(cmd);
  cmd.back() = "1";
  auto c = run(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("cli --out writes the file") {
  std::string path = "dtrip_cli_out_test.txt";
  auto r = run({"--out", path, "quad", "dplus", "2", "4", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  CHECK(line == "420");
  std::remove(path.c_str());
}

TEST_CASE("cli honours the degree cap environment variable") {
  setenv("DTRIP_DEGREE_CAP", "2", 1);
  auto r = run({"hyp", "check", "--poly", "x^3-x-1", "--init", "6,-9,2"});
  CHECK(r.code == 3);
  auto flag = run({"hyp", "check", "--poly", "x^3-x-1", "--init", "6,-9,2", "--cap", "64"});
  CHECK(flag.code == 0);
  CHECK(flag.out.find("verdict: unknown") != std::string::npos);
  unsetenv("DTRIP_DEGREE_CAP");
}
