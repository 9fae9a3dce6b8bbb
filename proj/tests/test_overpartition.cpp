#include <doctest.h>

#include "weylstat/overpartition.hpp"

using namespace weylstat;

namespace {
std::vector<std::string> listing(const OverpartitionQuery& q) {
  std::vector<std::string> out;
  for (const auto& p : overpartitions(q)) out.push_back(format(p));
  return out;
}
}  // namespace

TEST_CASE("overpartitions of 3") {
  OverpartitionQuery q;
  q.max_part = 2;
  q.weight = 3;
  // the six with parts at most 2
  CHECK(listing(q) == std::vector<std::string>{"(1,1,1)", "(1,1,1')", "(2,1)", "(2,1')", "(2',1)", "(2',1')"});
  q.max_part = 3;
  // all eight, (3) and (3') included
  CHECK(listing(q).size() == 8);
  for (const auto& p : overpartitions(q)) {
    CHECK(p.valid());
    CHECK(p.weight() == 3);
  }
}

TEST_CASE("degenerate queries") {
  OverpartitionQuery q;
  q.max_part = 0;
  CHECK(listing(q) == std::vector<std::string>{"()"});
  OverpartitionQuery unbounded;
  unbounded.max_part = 2;
  CHECK_THROWS_AS(overpartitions(unbounded), std::invalid_argument);
}

TEST_CASE("validity") {
  CHECK(Overpartition{{2, 1}, {true, false}}.valid());
  CHECK_FALSE(Overpartition{{1, 1}, {true, false}}.valid());  // only the last 1 may be overlined
  CHECK_FALSE(Overpartition{{1, 2}, {false, false}}.valid());
  CHECK(format(Overpartition{{2, 1}, {true, false}}) == "(2',1)");
}

TEST_CASE("length polynomials") {
  // lambda_1 <= 2, two parts: 11, 11', 21, 21', 2'1, 2'1', 22, 22'
  CHECK(to_string(overpartition_length_poly(2, 2)) == "2*q^2 + 4*q^3 + 2*q^4");
  CHECK(is_symmetric(overpartition_length_poly(2, 2), 6));
  const MultiPoly p32 = overpartition_length_poly(3, 2);
  CHECK(is_symmetric(p32, 8));
  CHECK(is_unimodal(p32));
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 5; ++m) {
      INFO("n=" << n << " m=" << m);
      REQUIRE(overpartition_length_poly(n, m) == overpartition_length_closed(n, m));
    }
  }
}
