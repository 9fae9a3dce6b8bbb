#include <doctest.h>

#include <sstream>

#include "weylstat/cli.hpp"

using namespace weylstat;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s, const std::string& prefix = "") {
  int n = 0;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(prefix, 0) == 0) ++n;
  }
  return n;
}
}  // namespace

TEST_CASE("genfun") {
  CHECK(cli({"genfun", "--family", "A", "--n", "3", "--stats", "omaj:q1,emaj:q2"}).out == "1 + 2*q1 + 2*q2 + q1*q2\n");
  CHECK(cli({"genfun", "--family", "B", "--n", "2", "--stats", "ofmaj:x,odes:y,oneg:z"}).out ==
        "1 + 3*x*z + 3*x^2*y + x^3*y*z\n");
  CHECK(cli({"genfun", "--family", "A", "--n", "1", "--stats", "maj:q"}).out == "1\n");
  CHECK(cli({"genfun", "--n", "4", "--quotient", "{2}", "--stats", "omaj:q"}).out == "1 + 3*q + 3*q^2 + 5*q^3\n");
  CHECK(cli({"genfun", "--family", "B", "--n", "3", "--filter", "neg={1,3}"}).out == "6\n");
  CHECK(cli({"genfun", "--family", "A", "--n", "4", "--filter", "domino"}).out == "8\n");
  const auto j = cli({"genfun", "--n", "2", "--stats", "des:t", "--json"});
  CHECK(j.out.find("\"poly\": \"1 + t\"") != std::string::npos);
  CHECK(j.out.find("\"count\": 2") != std::string::npos);

  const auto ceiling = cli({"genfun", "--family", "B", "--n", "9"});
  CHECK(ceiling.code == kExitUsage);
  CHECK(ceiling.err.find("error") != std::string::npos);
  CHECK(cli({"genfun", "--family", "A", "--n", "3", "--stats", "neg:z"}).code == kExitUsage);
  CHECK(cli({"genfun", "--family", "A", "--n", "3", "--filter", "nonsense"}).code == kExitUsage);
}

TEST_CASE("stats") {
  const auto b = cli({"stats", "--family", "B", "[-2,5,3,1,-4]"});
  CHECK(b.code == 0);
  CHECK(b.out.find("ofmaj=6\n") != std::string::npos);
  CHECK(b.out.find("efmaj=6\n") != std::string::npos);
  CHECK(b.out.find("Des: {0,2,3,4}\n") != std::string::npos);
  CHECK(b.out.find("Neg: {1,5}\n") != std::string::npos);

  const auto id = cli({"stats", "[1,2,3]"});
  CHECK(id.code == 0);
  CHECK(count_lines(id.out) == 3 + 8);
  CHECK(id.out.find("=1") == std::string::npos);

  const auto a = cli({"stats", "81725634"});
  CHECK(a.out.find("omaj=3\n") != std::string::npos);
  CHECK(a.out.find("emaj=3\n") != std::string::npos);

  CHECK(cli({"stats", "--family", "A", "[-1,2]"}).code == kExitUsage);
  CHECK(cli({"stats", "--family", "D", "[-1,2]"}).code == kExitUsage);
  const auto bad = cli({"stats", "[1,2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("at ") != std::string::npos);
}

TEST_CASE("verify") {
  const auto r = cli({"verify", "thm-trivial-B-odd", "--n-max", "6", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out, "PASS thm-trivial-B-odd") == 5);
  CHECK(r.out.find("PASS thm-trivial-B-odd n=2 {} count=8\n") != std::string::npos);

  CHECK(cli({"verify", "cor-gessel-simion-odd", "--n-max", "9", "--jobs", "2"}).code == 0);

  const auto bogus = cli({"verify", "bogus-id"});
  CHECK(bogus.code == kExitUsage);
  CHECK(bogus.err.find("unknown identity") != std::string::npos);

  CHECK(cli({"verify", "lemma-bmaxred", "--n", "4"}).code == kExitUsage);
  CHECK(cli({"verify"}).code == kExitUsage);
  CHECK(cli({"verify", "thm-trivial-B-odd", "--n-max", "9"}).code == kExitUsage);

  const auto fail = cli({"verify", "search-descent-neg-major-b2", "--no-timing"});
  CHECK(fail.code == kExitFailure);
  CHECK(fail.out.rfind("FAIL search-descent-neg-major-b2 n=2", 0) == 0);

  const auto json = cli({"verify", "s3-bivariate", "--json", "-", "--no-timing"});
  CHECK(json.out.find("\"id\": \"s3-bivariate\"") != std::string::npos);
}

TEST_CASE("search, overpartitions, list") {
  CHECK(cli({"search", "descent-major", "--n", "5", "--target", "oddlen"}).out == "NONE\n");
  CHECK(cli({"search", "descent-major", "--n", "3", "--target", "1+2q+2q^2+q^3"}).out == "j=(1,2)\n");
  CHECK(cli({"search", "descent-neg-major", "--n", "1", "--target", "1+x"}).out == "j=(0) k=(1)\n");
  CHECK(cli({"search", "sideways", "--n", "3"}).code == kExitUsage);

  CHECK(count_lines(cli({"overpartitions", "--max-part", "2", "--weight", "3"}).out) == 6);
  CHECK(count_lines(cli({"overpartitions", "--max-part", "3", "--weight", "3"}).out) == 8);
  CHECK(cli({"overpartitions", "--max-part", "2", "--length", "2", "--poly"}).out == "2*q^2 + 4*q^3 + 2*q^4\n");
  CHECK(cli({"overpartitions", "--max-part", "2"}).code == kExitUsage);

  const auto list = cli({"list"});
  CHECK(count_lines(list.out) >= 30);
  CHECK(list.out.find("thm-odd-eulerian") != std::string::npos);

  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"--help"}).code == 0);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
}
