#include <doctest.h>

#include <set>

#include "weylstat/enumeration.hpp"

using namespace weylstat;

TEST_CASE("group orders and counts") {
  CHECK(group_order(Family::A, 5) == 120);
  CHECK(group_order(Family::B, 4) == 384);
  CHECK(group_order(Family::D, 4) == 192);
  CHECK(count_elements(GroupSpec::full(Family::A, 6)) == 720);
  CHECK(count_elements(GroupSpec::full(Family::B, 5)) == 3840);
  CHECK(count_elements(GroupSpec::full(Family::D, 5)) == 1920);
  CHECK(count_elements(GroupSpec::full(Family::A, 1)) == 1);
}

TEST_CASE("type A order is lexicographic") {
  const auto els = elements_A(GroupSpec::full(Family::A, 4));
  REQUIRE(els.size() == 24);
  for (std::size_t i = 1; i < els.size(); ++i) REQUIRE(els[i - 1] < els[i]);
  CHECK(format(els.front()) == "[1,2,3,4]");
  CHECK(format(els.back()) == "[4,3,2,1]");
}

TEST_CASE("type B order: |sigma| first, then sign mask") {
  const auto els = elements_B(GroupSpec::full(Family::B, 2));
  std::vector<std::string> got;
  for (const auto& s : els) got.push_back(format(s));
  CHECK(got == std::vector<std::string>{"[1,2]", "[-1,2]", "[1,-2]", "[-1,-2]", "[2,1]", "[-2,1]", "[2,-1]", "[-2,-1]"});
  std::set<SignedPerm> unique(els.begin(), els.end());
  CHECK(unique.size() == 8);
}

TEST_CASE("quotients") {
  GroupSpec g = GroupSpec::full(Family::A, 4);
  g.quotient = IndexSet({2}, Interval{1, 3});
  CHECK(count_elements(g) == 12);
  g.quotient = IndexSet({1, 2, 3}, Interval{1, 3});
  CHECK(count_elements(g) == 1);
  GroupSpec h = GroupSpec::full(Family::A, 5);
  h.quotient = IndexSet({1, 3}, Interval{1, 4});
  CHECK(count_elements(h) == 30);
  for (const auto& p : elements_A(h)) {
    REQUIRE(p(1) < p(2));
    REQUIRE(p(3) < p(4));
  }
  GroupSpec b = GroupSpec::full(Family::B, 3);
  b.quotient = IndexSet({1}, Interval{1, 2});
  CHECK_THROWS(validate(b));
}

TEST_CASE("Neg and sign filters") {
  GroupSpec g = GroupSpec::full(Family::B, 4);
  g.neg_exact = IndexSet({1, 3}, Interval{1, 4});
  CHECK(count_elements(g) == 24);
  for (const auto& s : elements_B(g)) REQUIRE(neg_set(s).to_string() == "{1,3}");

  GroupSpec odd = GroupSpec::full(Family::B, 4);
  odd.neg_odd_exact = IndexSet({3}, Interval{1, 4});
  CHECK(count_elements(odd) == 24 * 4);

  GroupSpec par = GroupSpec::full(Family::B, 3);
  par.neg_parity = 1;
  CHECK(count_elements(par) == 24);

  GroupSpec last = GroupSpec::full(Family::B, 3);
  last.position_signs = {{3, -1}};
  CHECK(count_elements(last) == 24);
  last.abs_values = {{3, 3}};
  CHECK(count_elements(last) == 8);

  GroupSpec noodd = GroupSpec::full(Family::B, 3);
  noodd.no_abs_descents_of_parity = 1;
  // |sigma|(1) < |sigma|(2): half of S_3, all sign masks
  CHECK(count_elements(noodd) == 3 * 8);

  GroupSpec d = GroupSpec::full(Family::D, 4);
  for (const auto& s : elements_B(d)) REQUIRE(s.in_D());
}

TEST_CASE("ceilings") {
  CHECK(rank_ceiling(Family::A) == 10);
  CHECK(rank_ceiling(Family::B) == 8);
  CHECK(rank_ceiling(Family::D) == 8);
  CHECK_THROWS_AS(validate(GroupSpec::full(Family::A, 11)), CeilingExceeded);
  CHECK_THROWS_AS(validate(GroupSpec::full(Family::B, 9)), CeilingExceeded);
  GroupSpec forced = GroupSpec::full(Family::B, 9);
  forced.force = true;
  CHECK_NOTHROW(validate(forced));
  CHECK_THROWS(validate(GroupSpec::full(Family::A, 0)));
}

TEST_CASE("chunks cover the range exactly once") {
  for (int pieces : {1, 3, 7, 50}) {
    const auto chunks = make_chunks(5, pieces);
    std::uint64_t next = 0;
    for (const auto& c : chunks) {
      REQUIRE(c.begin == next);
      next = c.end;
    }
    CHECK(next == 120);
  }
  int out[4];
  unrank_permutation(4, 0, out);
  CHECK(std::vector<int>(out, out + 4) == std::vector<int>{1, 2, 3, 4});
  unrank_permutation(4, 23, out);
  CHECK(std::vector<int>(out, out + 4) == std::vector<int>{4, 3, 2, 1});
  unrank_permutation(4, 7, out);
  CHECK(std::vector<int>(out, out + 4) == std::vector<int>{2, 1, 4, 3});
}

TEST_CASE("domino permutations") {
  CHECK(is_domino_A(parse_perm("21534")));
  CHECK_FALSE(is_domino_A(parse_perm("23541")));
  CHECK(is_domino_B(parse_signed_perm("[-3,-4,5,2,1]")));
  CHECK_FALSE(is_domino_B(parse_signed_perm("[3,-4,1,2]")));
  const std::uint64_t expected_A[] = {1, 2, 4, 8, 24, 48, 192};
  for (int n = 1; n <= 7; ++n) {
    GroupSpec g = GroupSpec::full(Family::A, n);
    g.domino = true;
    CHECK(count_elements(g) == expected_A[n - 1]);
  }
  // |D(B_2m)| = 4^m m!
  for (int m = 1; m <= 3; ++m) {
    GroupSpec g = GroupSpec::full(Family::B, 2 * m);
    g.domino = true;
    CHECK(count_elements(g) == (std::uint64_t{1} << (2 * m)) * factorial(m));
  }
}

TEST_CASE("domino bijections") {
  CHECK(format(domino_bij_A(parse_perm("4213"), IndexSet({2, 3}, Interval{1, 4}))) == "[7,8,4,3,2,1,5,6]");
  CHECK(domino_bij_A(Perm::identity(3), IndexSet(Interval{1, 3})) == Perm::identity(6));
  CHECK(format(domino_bij_B(parse_signed_perm("[3,-1,-2,5,-4]"), IndexSet({1, 4, 5}, Interval{1, 5}))) ==
        "[6,5,-2,-1,-4,-3,10,9,-7,-8]");
  CHECK(domino_bij_B(SignedPerm::identity(2), IndexSet(Interval{1, 2})) == SignedPerm::identity(4));

  for (const auto& p : elements_A(GroupSpec::full(Family::A, 3))) {
    for (const auto& S : all_subsets(1, 3)) {
      const auto [q, T] = domino_bij_A_inverse(domino_bij_A(p, S));
      REQUIRE(q == p);
      REQUIRE(T == S);
    }
  }
  for (const auto& s : elements_B(GroupSpec::full(Family::B, 2))) {
    for (const auto& S : all_subsets(1, 2)) {
      const auto [q, T] = domino_bij_B_inverse(domino_bij_B(s, S));
      REQUIRE(q == s);
      REQUIRE(T == S);
    }
  }
  CHECK_THROWS(domino_bij_A_inverse(parse_perm("1324")));
}
