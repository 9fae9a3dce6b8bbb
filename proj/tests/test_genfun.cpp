#include <doctest.h>

#include "weylstat/genfun.hpp"

using namespace weylstat;

namespace {
std::string gf(Family f, int n, Character c, const char* binding) {
  return to_string(twisted_genfun(GroupSpec::full(f, n), c, StatBinding::parse(binding), 1));
}
}  // namespace

TEST_CASE("small generating functions") {
  CHECK(gf(Family::A, 2, Character::trivial, "omaj:q,odes:x,lenA:y") == "1 + q*x*y");
  CHECK(gf(Family::B, 2, Character::trivial, "ofmaj:x,odes:y,oneg:z") == "1 + 3*x*z + 3*x^2*y + x^3*y*z");
  CHECK(gf(Family::A, 3, Character::trivial, "omaj:q1,emaj:q2") == "1 + 2*q1 + 2*q2 + q1*q2");
  CHECK(gf(Family::A, 1, Character::trivial, "maj:q") == "1");
  CHECK(gf(Family::A, 4, Character::trivial, "") == "24");
  CHECK(gf(Family::A, 4, Character::sign_length, "") == "0");
  CHECK(gf(Family::D, 3, Character::trivial, "") == "24");
  CHECK(gf(Family::B, 3, Character::sign_neg, "") == "0");
  // sum over S_3 of (-1)^l q^maj
  CHECK(gf(Family::A, 3, Character::sign_length, "maj:q") == "1 - q^3");
}

TEST_CASE("quotient regression") {
  GroupSpec g = GroupSpec::full(Family::A, 4);
  g.quotient = IndexSet({2}, Interval{1, 3});
  CHECK(to_string(twisted_genfun(g, Character::trivial, StatBinding::parse("omaj:q"))) == "1 + 3*q + 3*q^2 + 5*q^3");
  GroupSpec h = GroupSpec::full(Family::A, 5);
  h.quotient = IndexSet({1, 3}, Interval{1, 4});
  CHECK(to_string(twisted_genfun(h, Character::trivial, StatBinding::parse("emaj:q"))) == "1 + 9*q + 4*q^2 + 16*q^3");
}

TEST_CASE("descent-set generating function") {
  CHECK(to_string(descent_set_genfun(2)) == "1 + x1");
  CHECK(to_string(descent_set_genfun(3)) == "1 + 2*x1 + 2*x2 + x1*x2");
  const MultiPoly five = descent_set_genfun(5);
  CHECK(five.term_count() == 16);
  CHECK(five.coefficient({{"x2", 1}, {"x4", 1}}) == 16);
  CHECK(five.coefficient({{"x1", 1}, {"x3", 1}}) == 16);
  CHECK(five.coefficient({{"x2", 1}, {"x3", 1}}) == 11);
  CHECK(five.at_ones() == 120);
}

TEST_CASE("job count does not change the result") {
  GroupSpec g = GroupSpec::full(Family::B, 5);
  const auto b = StatBinding::parse("omaj:x,odes:y,oneg:z1,eneg:z2");
  const auto one = twisted_genfun_counted(g, Character::sign_length, b, 1);
  for (int jobs : {2, 3, 8}) {
    const auto many = twisted_genfun_counted(g, Character::sign_length, b, jobs);
    CHECK(many.cells[0] == one.cells[0]);
    CHECK(many.count == one.count);
  }
  CHECK(one.count == 3840);
}

TEST_CASE("classified sweeps split the sum") {
  GroupSpec g = GroupSpec::full(Family::B, 3);
  const auto b = StatBinding::parse("fmaj:q");
  const auto split = classified_genfun(
      g, Character::trivial, b, 2, [](std::span<const int> w) { return w[0] < 0 ? 1 : 0; }, 2);
  CHECK(split.cells[0] + split.cells[1] == twisted_genfun(g, Character::trivial, b));
  CHECK(split.cell_counts[0] == 24);
  CHECK(split.cell_counts[1] == 24);
  const auto dropped = classified_genfun(
      g, Character::trivial, b, 1, [](std::span<const int>) { return -1; }, 1);
  CHECK(dropped.cells[0].is_zero());
  CHECK(dropped.count == 0);
}

TEST_CASE("bindings and characters are validated") {
  CHECK(StatBinding::parse("omaj:q1,emaj:q2").to_string() == "omaj:q1,emaj:q2");
  CHECK(StatBinding::parse("").terms.empty());
  CHECK_THROWS(StatBinding::parse("omaj"));
  CHECK_THROWS(StatBinding::parse("bogus:q"));
  CHECK_THROWS(check_binding(StatBinding::parse("neg:z"), Family::A));
  CHECK_NOTHROW(check_binding(StatBinding::parse("neg:z"), Family::B));
  CHECK_THROWS(check_character(Character::sign_neg, Family::A));
  CHECK_THROWS(check_character(Character::sign_neg, Family::D));
  CHECK(parse_character("length") == Character::sign_length);
  CHECK_THROWS(parse_character("bogus"));
  CHECK_THROWS(twisted_genfun(GroupSpec::full(Family::A, 3), Character::trivial, StatBinding::parse("neg:z")));
}
