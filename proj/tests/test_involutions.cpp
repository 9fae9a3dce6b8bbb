#include <doctest.h>

#include "weylstat/enumeration.hpp"
#include "weylstat/involutions.hpp"
#include "weylstat/statistics.hpp"

using namespace weylstat;

TEST_CASE("iota_A pairs the non-domino quotient elements") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& J : all_subsets(1, n - 1)) {
      const auto c = check_iota_A(n, J);
      INFO("n=" << n << " J=" << J.to_string() << " " << c.first_failure);
      REQUIRE(c.ok);
      REQUIRE(c.pairs * 2 == c.domain_size);
    }
  }
  const Perm p = parse_perm("23541");
  CHECK(iota_A(iota_A(p)) == p);
  CHECK((length_A(iota_A(p)) - length_A(p)) % 2 != 0);
  CHECK_THROWS_AS(iota_A(parse_perm("21534")), OutsideDomain);
}

TEST_CASE("phi_B") {
  for (int n = 1; n <= 5; ++n) {
    const auto c = check_phi_B(n);
    INFO(c.first_failure);
    CHECK(c.ok);
    CHECK(c.domain_size + count_elements([&] {
            GroupSpec g = GroupSpec::full(Family::B, n);
            g.domino = true;
            return g;
          }()) ==
          group_order(Family::B, n));
  }
  CHECK_THROWS_AS(phi_B(parse_signed_perm("[-3,-4,5,2,1]")), OutsideDomain);
}

TEST_CASE("psi_B") {
  for (int n = 1; n <= 5; ++n) {
    const auto even = check_psi_B(n, Side::even);
    INFO(even.first_failure);
    CHECK(even.ok);
  }
  for (int n : {1, 3, 5}) {
    const auto odd = check_psi_B(n, Side::odd);
    INFO(odd.first_failure);
    CHECK(odd.ok);
  }
  // the odd side only makes sense for odd rank
  CHECK_THROWS_AS(psi_B(parse_signed_perm("[2,1]"), Side::odd), OutsideDomain);
  const SignedPerm s = parse_signed_perm("[-2,3,1]");
  const SignedPerm t = psi_B(s, Side::odd);
  CHECK(psi_B(t, Side::odd) == s);
  CHECK(neg_set(t) == neg_set(s));
}

TEST_CASE("tilde_neg") {
  for (int n = 2; n <= 5; ++n) {
    for (Side side : {Side::odd, Side::even}) {
      const auto c = check_tilde_neg(n, side);
      INFO(c.first_failure);
      CHECK(c.ok);
    }
  }
  const SignedPerm s = parse_signed_perm("[3,1,2]");
  CHECK(format(tilde_neg(s, Side::odd)) == "[3,-1,2]");
  CHECK_THROWS_AS(tilde_neg(parse_signed_perm("[1,2,3]"), Side::odd), OutsideDomain);
}
