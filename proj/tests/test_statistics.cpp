#include <doctest.h>

#include <cstdlib>

#include "weylstat/enumeration.hpp"
#include "weylstat/genfun.hpp"
#include "weylstat/statistics.hpp"

using namespace weylstat;

namespace {

int odd_major_of(const IndexSet& d) {
  int s = 0;
  for (int i : d.members()) {
    if (i % 2 == 1) s += (i + 1) / 2;
  }
  return s;
}

int even_major_of(const IndexSet& d) {
  int s = 0;
  for (int i : d.members()) {
    if (i % 2 == 0) s += i / 2;
  }
  return s;
}

int count_of_parity(const IndexSet& d, int parity) {
  int c = 0;
  for (int i : d.members()) c += (i % 2 == parity) ? 1 : 0;
  return c;
}

}  // namespace

TEST_CASE("type A statistics on the worked example") {
  const Perm p = parse_perm("81725634");
  CHECK(eval_stat(Stat::des, p) == 3);
  CHECK(eval_stat(Stat::maj, p) == 10);
  CHECK(eval_stat(Stat::omaj, p) == 3);
  CHECK(eval_stat(Stat::emaj, p) == 3);
  CHECK(eval_stat(Stat::odes, p) == 2);
  CHECK(eval_stat(Stat::edes, p) == 1);
}

TEST_CASE("type B statistics on the worked example") {
  const SignedPerm s = parse_signed_perm("[-2,5,3,1,-4]");
  CHECK(eval_stat(Stat::ofmaj, s) == 6);
  CHECK(eval_stat(Stat::efmaj, s) == 6);
  CHECK(eval_stat(Stat::neg, s) == 2);
  CHECK(eval_stat(Stat::oneg, s) == 2);
  CHECK(eval_stat(Stat::eneg, s) == 0);
  CHECK(eval_stat(Stat::fmaj, s) == 2 * 9 + 2);
  CHECK(eval_stat(Stat::lenB, s) == 13);
  CHECK(eval_stat(Stat::lenA, s) == 7);
}

TEST_CASE("identity has every statistic zero") {
  const Perm p = Perm::identity(5);
  const SignedPerm s = SignedPerm::identity(5);
  for (Stat t : all_stats()) {
    if (legal_on_perm(t)) CHECK(eval_stat(t, p) == 0);
    if (legal_on_signed(t)) CHECK(eval_stat(t, s) == 0);
  }
}

TEST_CASE("odd and even variants agree with their definitions") {
  for (const auto& p : elements_A(GroupSpec::full(Family::A, 5))) {
    const IndexSet d = descent_set_A(p);
    REQUIRE(eval_stat(Stat::omaj, p) == odd_major_of(d));
    REQUIRE(eval_stat(Stat::emaj, p) == even_major_of(d));
    REQUIRE(eval_stat(Stat::odes, p) == count_of_parity(d, 1));
    REQUIRE(eval_stat(Stat::edes, p) == count_of_parity(d, 0));
  }
  for (const auto& s : elements_B(GroupSpec::full(Family::B, 4))) {
    const IndexSet d = descent_set_B(s);
    const IndexSet neg = neg_set(s);
    const int oneg = count_of_parity(neg, 1);
    const int eneg = count_of_parity(neg, 0);
    REQUIRE(eval_stat(Stat::omaj, s) == odd_major_of(d));
    REQUIRE(eval_stat(Stat::emaj, s) == even_major_of(d));
    REQUIRE(eval_stat(Stat::ofmaj, s) == 2 * odd_major_of(d) + oneg);
    REQUIRE(eval_stat(Stat::efmaj, s) == 2 * even_major_of(d) + eneg);
    REQUIRE(eval_stat(Stat::fmaj, s) == 2 * d.sum() + neg.size());
    // D statistics are the B statistics of [sigma(1), ..., |sigma(n)|]
    const SignedPerm t = abs_last(s);
    const IndexSet dt = descent_set_B(t);
    const IndexSet nt = neg_set(t);
    REQUIRE(eval_stat(Stat::dmaj, s) == 2 * dt.sum() + nt.size());
    REQUIRE(eval_stat(Stat::odmaj, s) == 2 * odd_major_of(dt) + count_of_parity(nt, 1));
    REQUIRE(eval_stat(Stat::edmaj, s) == 2 * even_major_of(dt) + count_of_parity(nt, 0));
    REQUIRE(eval_stat(Stat::odesD, s) == count_of_parity(dt, 1));
    REQUIRE(eval_stat(Stat::edesD, s) == count_of_parity(dt, 0));
    REQUIRE(eval_stat(Stat::onegD, s) == count_of_parity(nt, 1));
    REQUIRE(eval_stat(Stat::enegD, s) == count_of_parity(nt, 0));
  }
}

TEST_CASE("odd length") {
  CHECK(odd_length_A(Perm::identity(4)) == 0);
  CHECK(odd_length_A(parse_perm("21")) == 1);
  CHECK(odd_length_A(parse_perm("321")) == 2);
  CHECK(to_string(odd_length_distribution_A(5)) == "1 + 12*x + 23*x^2 + 48*x^3 + 23*x^4 + 12*x^5 + x^6");
  CHECK(odd_length_B(SignedPerm::identity(3)) == 0);
  CHECK(odd_length_B(parse_signed_perm("[-1]")) == 1);
  CHECK(odd_length_B(parse_signed_perm("[2,1]")) == 1);
  CHECK(to_string(odd_length_distribution_B(1)) == "1 + x");
  CHECK(to_string(odd_length_distribution_B(2)) == "1 + 3*x + 3*x^2 + x^3");
  CHECK(to_string(odd_length_distribution_B(3)) == "1 + 7*x + 11*x^2 + 10*x^3 + 11*x^4 + 7*x^5 + x^6");
}

TEST_CASE("evaluator agrees with eval_stat") {
  for (const auto& s : elements_B(GroupSpec::full(Family::B, 3))) {
    StatEvaluator ev(s.window(), true);
    for (Stat t : all_stats()) {
      if (!legal_on_signed(t)) {
        CHECK_THROWS(ev(t));
        continue;
      }
      if (t == Stat::lenD && !s.in_D()) {
        CHECK_THROWS(ev(t));
        continue;
      }
      REQUIRE(ev(t) == eval_stat(t, s));
    }
  }
  const Perm p = parse_perm("3142");
  StatEvaluator ev(p.entries(), false);
  CHECK_THROWS(ev(Stat::neg));
  CHECK(ev(Stat::lenA) == 3);
}

TEST_CASE("names round-trip") {
  for (Stat t : all_stats()) CHECK(parse_stat(stat_name(t)) == t);
  CHECK(all_stats().size() == 24);
  CHECK_THROWS_AS(parse_stat("bogus"), std::invalid_argument);
  CHECK(mask_sum(0b1011) == 4);
  CHECK(odd_major(0b1010) == 1 + 2);
  CHECK(even_major(0b10101) == 0 + 1 + 2);
}
