#include <doctest.h>

#include <map>
#include <queue>
#include <vector>

#include "weylstat/enumeration.hpp"
#include "weylstat/permutation.hpp"

using namespace weylstat;

namespace {

using Window = std::vector<int>;

// Word length by breadth-first search from the identity; generators act on
// positions (right multiplication).
std::map<Window, int> cayley_lengths(int n, char family) {
  Window id(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) id[static_cast<std::size_t>(i)] = i + 1;
  std::map<Window, int> dist{{id, 0}};
  std::queue<Window> todo;
  todo.push(id);
  while (!todo.empty()) {
    Window w = todo.front();
    todo.pop();
    std::vector<Window> next;
    for (int i = 0; i + 1 < n; ++i) {
      Window v = w;
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i + 1)]);
      next.push_back(v);
    }
    if (family == 'B') {
      Window v = w;
      v[0] = -v[0];
      next.push_back(v);
    }
    if (family == 'D' && n >= 2) {
      Window v = w;
      std::swap(v[0], v[1]);
      v[0] = -v[0];
      v[1] = -v[1];
      next.push_back(v);
    }
    for (auto& v : next) {
      if (dist.emplace(v, dist[w] + 1).second) todo.push(v);
    }
  }
  return dist;
}

IndexSet brute_descents(const Window& w, int zero_value) {
  Window v{zero_value};
  v.insert(v.end(), w.begin(), w.end());
  IndexSet d(Interval{0, static_cast<int>(w.size())});
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) d.insert(static_cast<int>(i));
  }
  return d;
}

}  // namespace

TEST_CASE("parsing and formatting") {
  CHECK(format(parse_perm("81725634")) == "[8,1,7,2,5,6,3,4]");
  CHECK(format(parse_perm("[3, 1, 2]")) == "[3,1,2]");
  CHECK(format(parse_signed_perm("[-2,5,3,1,-4]")) == "[-2,5,3,1,-4]");
  CHECK_THROWS_AS(parse_perm("[1,1]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_perm("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_signed_perm("[0,1]"), std::invalid_argument);
  try {
    parse_perm("12x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("descent sets") {
  CHECK(descent_set_A(parse_perm("81725634")).to_string() == "{1,3,6}");
  CHECK(descent_set_A(parse_perm("1234")).empty());
  CHECK(descent_set_A(parse_perm("21")).to_string() == "{1}");

  CHECK(descent_set_B(parse_signed_perm("[-2,5,3,1,-4]")).to_string() == "{0,2,3,4}");
  CHECK(descent_set_B(parse_signed_perm("[1,2,3]")).empty());
  CHECK(descent_set_B(parse_signed_perm("[-2,-1]")).to_string() == "{0}");

  CHECK(descent_set_D(parse_signed_perm("[-2,5,3,1,-4]")).to_string() == "{2,3,4}");
  CHECK(descent_set_D(parse_signed_perm("[1,2,3]")).empty());
  CHECK(descent_set_D(parse_signed_perm("[-1,-2]")).to_string() == "{0,1}");

  CHECK(neg_set(parse_signed_perm("[-2,5,3,1,-4]")).to_string() == "{1,5}");
  CHECK(neg_set(parse_signed_perm("[-1,-2]")).to_string() == "{1,2}");

  for (const auto& s : elements_B(GroupSpec::full(Family::B, 4))) {
    const Window w(s.window().begin(), s.window().end());
    REQUIRE(descent_set_B(s) == brute_descents(w, 0));
    REQUIRE(descent_set_D(s) == brute_descents(w, -w[1]));
  }
}

TEST_CASE("lengths match the Cayley graph") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [w, d] : cayley_lengths(n, 'A')) REQUIRE(length_A(Perm(w)) == d);
    for (const auto& [w, d] : cayley_lengths(n, 'B')) REQUIRE(length_B(SignedPerm(w)) == d);
  }
  for (int n = 2; n <= 5; ++n) {
    const auto lengths = cayley_lengths(n, 'D');
    CHECK(lengths.size() == group_order(Family::B, n) / 2);
    for (const auto& [w, d] : lengths) REQUIRE(length_D(SignedPerm(w)) == d);
  }
  CHECK(length_A(parse_perm("21")) == 1);
  CHECK(length_A(parse_signed_perm("[-2,5,3,1,-4]")) == 7);
  CHECK(length_B(parse_signed_perm("[-1]")) == 1);
  CHECK(length_B(parse_signed_perm("[-2,5,3,1,-4]")) == 13);
  CHECK(length_D(parse_signed_perm("[-2,-1]")) == 1);
  CHECK_THROWS(length_D(parse_signed_perm("[-1,2]")));
}

TEST_CASE("star map") {
  CHECK(star(2, 5) == 1);
  CHECK(star(5, 5) == 5);
  CHECK(star(-3, 5) == -4);
  CHECK(star(1, 4) == 2);
  CHECK(star(-2, 4) == -1);
  CHECK_THROWS(star(0, 3));
  CHECK_THROWS(star(4, 3));
  for (int n = 1; n <= 7; ++n) {
    for (int i = -n; i <= n; ++i) {
      if (i != 0) REQUIRE(star(star(i, n), n) == i);
    }
  }
}

TEST_CASE("star transpositions") {
  CHECK(format(star_transpose(1, parse_perm("12"))) == "[2,1]");
  CHECK(format(star_transpose(2, parse_perm("1234"))) == "[2,1,3,4]");
  CHECK(format(star_transpose(3, parse_signed_perm("[-3,1,4,-2]"))) == "[-4,1,3,-2]");
  for (const auto& p : elements_A(GroupSpec::full(Family::A, 5))) {
    for (int i = 1; i < 5; ++i) REQUIRE(star_transpose(i, star_transpose(i, p)) == p);
  }
  CHECK_THROWS(star_transpose(4, parse_perm("1234")));
}

TEST_CASE("flatten and absolute values") {
  const int a[] = {9, 2, 5};
  const int b[] = {7, 3};
  const int c[] = {1, 4, 8};
  CHECK(format(flatten(a)) == "[3,1,2]");
  CHECK(format(flatten(b)) == "[2,1]");
  CHECK(format(flatten(c)) == "[1,2,3]");
  const auto s = parse_signed_perm("[-2,5,3,1,-4]");
  CHECK(format(abs_last(s)) == "[-2,5,3,1,4]");
  CHECK(format(abs_all(s)) == "[2,5,3,1,4]");
  CHECK(abs_last(parse_signed_perm("[-1,2]")) == parse_signed_perm("[-1,2]"));
}

TEST_CASE("index sets") {
  const IndexSet J({2, 6}, Interval{1, 7});
  CHECK(J.even_part().halved().to_string() == "{1,3}");
  CHECK(J.size() == 2);
  CHECK(J.sum() == 8);
  CHECK(IndexSet({1, 2, 3}, Interval{1, 4}).odd_part().to_string() == "{1,3}");
  CHECK(IndexSet({1, 4}, Interval{1, 4}).star_image(4).to_string() == "{2,3}");
  CHECK_THROWS(IndexSet({3}, Interval{1, 4}).halved());
  CHECK_THROWS(IndexSet({5}, Interval{1, 4}));
  CHECK(all_subsets(1, 3).size() == 8);
  CHECK(all_subsets(1, 0).size() == 1);
}
