#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "groth/core.hpp"

using namespace groth;

TEST_CASE("permutation construction and parsing") {
  Permutation w({2, 1, 4, 3});
  CHECK(w.size() == 4);
  CHECK(w(1) == 2);
  CHECK(w(4) == 3);
  CHECK(w.to_string() == "2143");

  CHECK(Permutation::identity(3).oneline() == std::vector<int>{1, 2, 3});
  CHECK(Permutation::longest(4).oneline() == std::vector<int>{4, 3, 2, 1});

  CHECK(Permutation::parse("1423").oneline() == std::vector<int>{1, 4, 2, 3});
  Permutation big = Permutation::parse("2168534(10)79");
  CHECK(big.size() == 10);
  CHECK(big(8) == 10);
  CHECK(big.to_string() == "2168534(10)79");
  CHECK(Permutation::parse(big.to_string()) == big);

  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("12x"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(12"), std::invalid_argument);
}

TEST_CASE("inverse, length, ascents") {
  Permutation w = Permutation::parse("1423");
  CHECK(w.inverse() == Permutation::parse("1342"));
  CHECK(w.length() == 2);
  CHECK(Permutation::longest(4).length() == 6);
  CHECK(w.ascents() == std::vector<int>{1, 3});
  CHECK(w.descents() == std::vector<int>{2});
  CHECK(w.swap(2) == Permutation::parse("1243"));
}

TEST_CASE("length and inverse agree on all small permutations") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& w : all_permutations(n)) {
      CHECK(w.length() == w.inverse().length());
      CHECK(w.inverse().inverse() == w);
    }
  }
}

namespace {

// Direct scan for the 2143 pattern.
bool vexillary_bruteforce(const Permutation& w) {
  int n = w.size();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
          if (w(b) < w(a) && w(a) < w(d) && w(d) < w(c)) return false;
  return true;
}

}  // namespace

TEST_CASE("vexillary examples") {
  CHECK_FALSE(Permutation::parse("2143").is_vexillary());
  CHECK(Permutation::parse("14253").is_vexillary());
  CHECK(Permutation::parse("1423").is_vexillary());
  CHECK(Permutation::identity(5).is_vexillary());
  CHECK(Permutation::longest(6).is_vexillary());
  CHECK_FALSE(Permutation::parse("2168534(10)79").is_vexillary());
}

TEST_CASE("vexillary matches pattern scan on all small permutations") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n))
      CHECK(w.is_vexillary() == vexillary_bruteforce(w));
}

TEST_CASE("rothe diagram examples") {
  auto [d, r] = rothe_diagram(Permutation::parse("1423"));
  CHECK(d.n == 4);
  CHECK(d.k == 4);
  CHECK(d.cells == std::set<Cell>{{2, 2}, {2, 3}});
  CHECK(r.at({2, 2}) == 1);
  CHECK(r.at({2, 3}) == 1);

  auto [d0, r0] = rothe_diagram(Permutation::identity(3));
  CHECK(d0.cells.empty());

  auto [d1, r1] = rothe_diagram(Permutation::parse("321"));
  CHECK(d1.cells == std::set<Cell>{{1, 1}, {1, 2}, {2, 1}});
  CHECK(r1.at({1, 1}) == 0);
  CHECK(r1.at({1, 2}) == 0);
  CHECK(r1.at({2, 1}) == 0);
}

TEST_CASE("rothe diagram size equals length") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& w : all_permutations(n))
      CHECK(rothe_diagram(w).first.size() == w.length());
}

TEST_CASE("diagram helpers") {
  CHECK(subset_leq({1, 3}, {2, 3}));
  CHECK(subset_leq({1, 3}, {1, 3}));
  CHECK_FALSE(subset_leq({2, 3}, {1, 3}));
  CHECK_FALSE(subset_leq({1}, {1, 2}));  // unequal sizes never compare

  Diagram a{3, 3, {{1, 1}, {2, 2}}};
  Diagram b{3, 3, {{2, 1}, {2, 2}}};
  CHECK(a.column(1) == std::vector<int>{1});
  CHECK(diagram_leq(a, b));
  CHECK_FALSE(diagram_leq(b, a));
  CHECK(weight(a) == std::vector<int>{1, 1, 0});
  CHECK(weight(b) == std::vector<int>{0, 2, 0});
}

// For a vexillary w, linked cells (i1,j1), (i2,j2) of D(w) with j1 < j2
// satisfy i1 <= i2; and when neither has a cell directly above, the two
// columns agree (cells and ranks) in rows < i1.
TEST_CASE("linked cells of vexillary diagrams are column-ordered") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      if (!w.is_vexillary()) continue;
      auto [d, r] = rothe_diagram(w);
      for (const auto& c1 : d.cells) {
        for (const auto& c2 : d.cells) {
          if (c1.second >= c2.second) continue;
          if (c1.first - r.at(c1) != c2.first - r.at(c2)) continue;
          auto [i1, j1] = c1;
          auto [i2, j2] = c2;
          REQUIRE(i1 <= i2);
          if (d.contains(i1 - 1, j1) || d.contains(i2 - 1, j2)) continue;
          for (int i = 1; i < i1; ++i) {
            REQUIRE(d.contains(i, j1) == d.contains(i, j2));
            if (d.contains(i, j1)) REQUIRE(r.at({i, j1}) == r.at({i, j2}));
          }
        }
      }
    }
  }
}
