#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "groth/bubbling.hpp"
#include "groth/weyl.hpp"

using namespace groth;

TEST_CASE("schubert matroid bases") {
  CHECK(bases(SchubertMatroid(2, {2})) ==
        std::set<std::vector<int>>{{1}, {2}});
  CHECK(bases(SchubertMatroid(3, {1, 2, 3})) ==
        std::set<std::vector<int>>{{1, 2, 3}});
  CHECK(bases(SchubertMatroid(3, {2, 3})).size() == 3);

  CHECK_THROWS_AS(SchubertMatroid(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(SchubertMatroid(3, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(SchubertMatroid(3, {4}), std::invalid_argument);
}

TEST_CASE("basis exchange axiom on random instances") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    std::vector<int> gens;
    for (int i = 1; i <= n; ++i)
      if (rng() % 2) gens.push_back(i);
    if (gens.empty()) gens.push_back(n);
    auto bs = bases(SchubertMatroid(n, gens));
    for (const auto& b1 : bs) {
      for (const auto& b2 : bs) {
        std::set<int> s1(b1.begin(), b1.end()), s2(b2.begin(), b2.end());
        for (int x : s1) {
          if (s2.count(x)) continue;
          bool exchanged = false;
          for (int y : s2) {
            if (s1.count(y)) continue;
            std::set<int> cand = s1;
            cand.erase(x);
            cand.insert(y);
            if (bs.count(std::vector<int>(cand.begin(), cand.end())))
              exchanged = true;
          }
          REQUIRE(exchanged);
        }
      }
    }
  }
}

TEST_CASE("rank by brute force") {
  SchubertMatroid m(3, {1, 2, 3});
  CHECK(rank_bruteforce(m, 0) == 0);
  CHECK(rank_bruteforce(m, mask_of({1, 3})) == 2);
  for (int n = 2; n <= 5; ++n) {
    SchubertMatroid top(n, {n});
    for (unsigned j = 1; j < (1u << n); ++j)
      CHECK(rank_bruteforce(top, j) == 1);
  }
}

TEST_CASE("word and theta examples") {
  CHECK(word(mask_of({1, 2}), mask_of({1, 2}), 2) == "**");
  CHECK(theta(mask_of({1, 2}), mask_of({1, 2}), 2) == 2);

  unsigned i14 = mask_of({2, 4, 6, 9, 10, 11, 12, 13});
  unsigned j14 = mask_of({3, 4, 5, 8, 9, 12, 14});
  CHECK(theta(i14, j14, 14) == 6);
  CHECK(theta(i14, j14, 14) == rank_bruteforce(SchubertMatroid(14, mask_elems(i14)), j14));

  // SM_n({n}): everything in J before position n opens a parenthesis
  CHECK(word(mask_of({3}), mask_of({1, 2}), 3) == "(()");
  CHECK(word(mask_of({3}), mask_of({1, 3}), 3) == "(_*");
  CHECK(theta(mask_of({3}), mask_of({1, 2}), 3) == 1);
  CHECK(theta(mask_of({3}), mask_of({1, 3}), 3) == 1);
}

TEST_CASE("theta equals matroid rank exhaustively") {
  for (int n = 1; n <= 5; ++n) {
    for (unsigned i = 1; i < (1u << n); ++i) {
      SchubertMatroid m(n, mask_elems(i));
      for (unsigned j = 0; j < (1u << n); ++j)
        CHECK(theta(i, j, n) == rank_bruteforce(m, j));
    }
  }
}

TEST_CASE("rank shift identities") {
  // behavior of r_{SM_n(I)}(J) when n enters or leaves I and J
  for (int n = 2; n <= 6; ++n) {
    unsigned nb = 1u << (n - 1);
    for (unsigned i = 1; i < (1u << n); ++i) {
      for (unsigned j = 0; j < (1u << n); ++j) {
        int r = theta(i, j, n);
        if (!(i & nb) && !(j & nb)) CHECK(r == theta(i, j, n - 1));
        if (!(i & nb) && (j & nb)) CHECK(r == theta(i, j & ~nb, n));
        if ((i & nb) && (j & nb) && i != nb)
          CHECK(r == theta(i & ~nb, j & ~nb, n - 1) + 1);
      }
    }
  }
}

TEST_CASE("schubitope supports") {
  Diagram one{2, 1, {{1, 1}}};
  CHECK(schubitope_support(one) ==
        std::set<std::vector<int>>{{1, 0}});

  Diagram dt{4, 4, d_top(Permutation::parse("1423")).cells().cells};
  CHECK(schubitope_support(dt) ==
        std::set<std::vector<int>>{{1, 2, 0, 0}, {2, 1, 0, 0}});

  Diagram rothe = rothe_diagram(Permutation::parse("1423")).first;
  CHECK(schubitope_support(rothe) ==
        std::set<std::vector<int>>{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}});
}

TEST_CASE("y minors") {
  YPolynomial m = y_minor({1}, {1});
  CHECK(m.size() == 1);
  CHECK(m.begin()->first == YMonomial{{1, 1}});
  CHECK(m.begin()->second == 1);

  // rows above the diagonal of the column force zero entries
  CHECK(y_minor({2}, {1}).empty());

  YPolynomial d2 = y_minor({1, 2}, {2, 3});
  CHECK(d2.size() == 2);  // y12 y23 - y13 y22
}

TEST_CASE("dual characters") {
  Diagram one{2, 1, {{1, 1}}};
  MultiPoly chi = dual_character(one);
  CHECK(chi == MultiPoly::monomial({1, 0}, 1));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + trial % 3;
    int k = 1 + static_cast<int>(rng() % 2);
    Diagram d{n, k, {}};
    for (int j = 1; j <= k; ++j)
      for (int i = 1; i <= n; ++i)
        if (rng() % 2) d.cells.insert({i, j});
    MultiPoly chi2 = dual_character(d);
    std::set<std::vector<int>> supp;
    for (const auto& e : chi2.support()) supp.insert(e);
    CHECK(supp == schubitope_support(d));
    for (const auto& [e, c] : chi2.terms()) CHECK(c > 0);
  }

  CHECK_THROWS_AS(dual_character(Diagram{7, 1, {{1, 1}}}, 6), BoundExceeded);
}

TEST_CASE("dual character of a rothe diagram covers the schubert support") {
  for (const auto& w : all_permutations(4)) {
    if (!w.is_vexillary()) continue;
    Diagram d = rothe_diagram(w).first;
    const MultiPoly& g = grothendieck(w);
    CHECK(dual_character(d).support() ==
          homogeneous_component(g, w.length()).support());
  }
}

TEST_CASE("top component proportionality") {
  auto rid = conjecture1_check(Permutation::identity(3));
  CHECK(rid.ok);
  CHECK(rid.multiple == 1);

  auto r1423 = conjecture1_check(Permutation::parse("1423"));
  CHECK(r1423.ok);
  CHECK(r1423.multiple >= 1);

  for (const auto& w : all_permutations(4)) {
    if (!w.is_vexillary()) continue;
    auto r = conjecture1_check(w);
    CHECK(r.ok);
    CHECK(r.multiple >= 1);
  }
}
