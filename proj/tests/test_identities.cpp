#include <doctest.h>

#include <json.hpp>
#include <set>

#include "weylstat/identities.hpp"
#include "weylstat/polynomial.hpp"

using namespace weylstat;

namespace {
std::vector<IdentityReport> run(const char* id, int n) { return verify(id, n, VerifyOptions{1, false}); }

bool all_equal(const std::vector<IdentityReport>& rs) {
  for (const auto& r : rs) {
    if (!r.equal) return false;
  }
  return !rs.empty();
}

const IdentityReport& with_params(const std::vector<IdentityReport>& rs, const std::string& text) {
  for (const auto& r : rs) {
    if (format_params(r.params) == text) return r;
  }
  throw std::runtime_error("no report with " + text);
}
}  // namespace

TEST_CASE("registry shape") {
  const auto& reg = identity_registry();
  CHECK(reg.size() >= 30);
  std::set<std::string> ids;
  for (const auto& s : reg) {
    CHECK(ids.insert(s.id).second);
    CHECK(!s.formula.empty());
    CHECK(s.n_min <= s.n_max);
    CHECK(s.n_max <= s.n_limit);
  }
  CHECK_THROWS_AS(find_identity("bogus-id"), UnknownIdentity);
}

TEST_CASE("domains") {
  const auto& bmax = find_identity("lemma-bmaxred");
  CHECK(domain_ranks(bmax, 7) == std::vector<int>{1, 3, 5, 7});
  CHECK_FALSE(rank_in_domain(bmax, 4));
  CHECK_THROWS_AS(run("lemma-bmaxred", 4), std::invalid_argument);
  CHECK(domain_ranks(find_identity("lemma-evenneg"), 7) == std::vector<int>{2, 4, 6});
  CHECK_THROWS(run("thm-trivial-B-odd", 9));
  CHECK(rank_in_domain(find_identity("thm-trivial-B-odd"), 9, true));
  CHECK_FALSE(rank_in_domain(find_identity("s3-bivariate"), 4, true));
}

TEST_CASE("base cases") {
  const auto odd = run("thm-odd-eulerian", 2);
  REQUIRE(odd.size() == 1);
  CHECK(odd[0].equal);
  // cross-multiplied by (1+y)
  CHECK(odd[0].lhs == "1 + y + q*x*y + q*x*y^2");
  CHECK(odd[0].count == 2);

  const auto ell = run("cor-ell-odd", 2);
  CHECK(ell[0].equal);
  CHECK(ell[0].lhs == ell[0].rhs);
  CHECK(parse_poly(ell[0].lhs) == parse_poly("(1-x*z)(1-y*x^2)"));

  const auto corners = run("thm-fourcorners", 3);
  REQUIRE(corners.size() == 4);
  CHECK(all_equal(corners));
  CHECK(with_params(corners, "{sign=+ eps=1}").lhs == "0");

  const auto evenneg = run("lemma-evenneg", 4);
  CHECK(evenneg.size() == 32);
  CHECK(all_equal(evenneg));
  for (const auto& r : evenneg) {
    if (format_params(r.params).find("form=even") != std::string::npos) CHECK(r.lhs == "0");
  }
}

TEST_CASE("small ranks of every identity") {
  for (const auto& s : identity_registry()) {
    if (s.id == "search-descent-neg-major-b2") continue;
    for (int n : domain_ranks(s, std::min(s.n_max, s.rank_name == "m" ? 2 : 4))) {
      INFO(s.id << " " << s.rank_name << "=" << n);
      const auto reports = verify(s.id, n, VerifyOptions{2, false});
      for (const auto& r : reports) {
        INFO(report_line(r, false));
        CHECK(r.equal);
      }
    }
  }
}

TEST_CASE("the B_2 weight search has a witness") {
  const auto rs = run("search-descent-neg-major-b2", 2);
  REQUIRE(rs.size() == 1);
  CHECK_FALSE(rs[0].equal);
  CHECK(rs[0].lhs == "1 + 3*x + 3*x^2 + x^3");
  CHECK(rs[0].note.find("j=(0,1) k=(1,1)") != std::string::npos);
}

TEST_CASE("involution dumps are folded into reports") {
  const auto rs = run("prop-domino-reduction-A", 4);
  CHECK(rs.size() == 8);
  CHECK(all_equal(rs));
  CHECK(rs[0].note.find("involution ok") == 0);
}

TEST_CASE("reports serialize") {
  const auto rs = run("s3-bivariate", 3);
  const auto j = nlohmann::json::parse(reports_to_json(rs, false));
  REQUIRE(j.size() == 1);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j[0].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"count", "equal", "id", "lhs", "ms", "params", "rank", "rhs"});
  CHECK(j[0]["lhs"] == "1 + 2*q1 + 2*q2 + q1*q2");
  CHECK(j[0]["ms"] == 0);
  CHECK(j[0]["equal"] == true);
  CHECK(report_line(rs[0], false) == "PASS s3-bivariate n=3 {} count=6");

  const auto q = run("thm-parabolic-signed", 1);
  const auto jq = nlohmann::json::parse(reports_to_json(q, false));
  CHECK(jq[1]["params"]["J"] == std::vector<int>{1});
  CHECK(report_line(q[1], false) == "PASS thm-parabolic-signed m=1 {J={1}} count=1");
}

TEST_CASE("a false claim is reported as such") {
  // verify never throws for a failed comparison; it returns equal=false
  const auto rs = run("search-descent-neg-major-b2", 2);
  CHECK(report_line(rs[0], false).rfind("FAIL ", 0) == 0);
}
