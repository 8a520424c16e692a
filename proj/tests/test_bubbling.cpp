#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>

#include "groth/bubbling.hpp"
#include "groth/json_io.hpp"
#include "groth/poly.hpp"

using namespace groth;

namespace {

const Permutation& w1423() {
  static Permutation w = Permutation::parse("1423");
  return w;
}

std::vector<Permutation> vexillary(int n) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n))
    if (w.is_vexillary()) out.push_back(w);
  return out;
}

Exponent padded(std::vector<int> v, size_t n) {
  v.resize(n, 0);
  return v;
}

}  // namespace

TEST_CASE("rothe seeds") {
  BubblingDiagram d = rothe_bubbling(w1423());
  CHECK(d.n == 4);
  CHECK(d.squares.size() == 2);
  CHECK(d.is_live(2, 2));
  CHECK(d.is_live(2, 3));
  CHECK(d.rank(2, 2) == 1);
  CHECK(d.rank(2, 3) == 1);
  CHECK(d.dead_cells().cells.empty());
  d.validate();

  CHECK(rothe_bubbling(Permutation::identity(3)).squares.empty());

  BubblingDiagram t = rothe_bubbling(Permutation::parse("321"));
  CHECK(t.squares.size() == 3);
  for (const auto& [c, s] : t.squares) {
    CHECK(s.rank == 0);
    CHECK_FALSE(s.dead);
  }
}

TEST_CASE("bubble moves") {
  BubblingDiagram d = rothe_bubbling(w1423());
  BubblingDiagram b = bubble(d, 2, 3);
  CHECK(b.is_live(1, 3));
  CHECK(b.rank(1, 3) == 0);
  CHECK(b.is_live(2, 2));
  CHECK(b.rank(2, 2) == 1);
  CHECK(b.squares.size() == 2);
  b.validate();

  BubblingDiagram b2 = bubble(bubble(d, 2, 2), 2, 3);
  CHECK(b2.is_live(1, 2));
  CHECK(b2.is_live(1, 3));
  CHECK(b2.rank(1, 2) == 0);
  CHECK(b2.rank(1, 3) == 0);

  CHECK_FALSE(can_bubble(b2, 1, 2));  // top row
  CHECK_THROWS_AS(bubble(b2, 1, 2), IllegalMove);
  // stacked squares: target occupied
  BubblingDiagram t = rothe_bubbling(Permutation::parse("321"));
  CHECK_THROWS_AS(bubble(t, 2, 1), IllegalMove);
  // source must be live
  BubblingDiagram kd = k_bubble(d, 2, 3);
  CHECK_THROWS_AS(bubble(kd, 2, 3), IllegalMove);
}

TEST_CASE("k-bubble moves") {
  BubblingDiagram d = rothe_bubbling(w1423());
  BubblingDiagram kd = k_bubble(d, 2, 3);
  CHECK(kd.is_live(1, 3));
  CHECK(kd.rank(1, 3) == 0);
  CHECK(kd.is_dead(2, 3));
  CHECK(kd.rank(2, 3) == 1);
  CHECK(kd.is_live(2, 2));
  CHECK(kd.rank(2, 2) == 1);
  kd.validate();

  // (2,2) and (2,3) have equal rank, so they cannot both leave dead copies.
  CHECK_FALSE(can_k_bubble(kd, 2, 2));
  CHECK_THROWS_AS(k_bubble(kd, 2, 2), IllegalMove);
  // plain bubbling (2,2) is still fine
  bubble(kd, 2, 2).validate();

  CHECK_THROWS_AS(k_bubble(bubble(d, 2, 3), 1, 3), IllegalMove);  // top row
}

TEST_CASE("bd enumeration of 1423") {
  auto bd = enumerate_bd(rothe_bubbling(w1423()));
  CHECK(bd.size() == 8);
  std::set<Exponent> weights;
  for (const auto& d : bd) {
    d.validate();
    weights.insert(padded(weight(d), 4));
  }
  CHECK(weights == std::set<Exponent>{padded({0, 2}, 4), padded({1, 1}, 4),
                                      padded({2, 0}, 4), padded({1, 2}, 4),
                                      padded({2, 1}, 4)});
  CHECK(weights == grothendieck(w1423()).support());

  auto trivial = enumerate_bd(rothe_bubbling(Permutation::identity(3)));
  CHECK(trivial.size() == 1);
  CHECK(trivial.begin()->squares.empty());
}

TEST_CASE("linking") {
  CHECK(linking_key(2, 1) == linking_key(2, 1));
  CHECK(linking_key(3, 0) == linking_key(5, 2));
  CHECK(linking_key(2, 0) != linking_key(2, 1));

  BubblingDiagram big = rothe_bubbling(Permutation::parse("178925(10)346"));
  auto classes = linking_classes(big);
  std::set<Cell> expect{{6, 3}, {6, 4}, {7, 6}};
  bool found = false;
  for (const auto& [key, cells] : classes)
    if (std::set<Cell>(cells.begin(), cells.end()) == expect) found = true;
  CHECK(found);
}

TEST_CASE("admissibility") {
  BubblingDiagram seed = rothe_bubbling(w1423());

  for (const auto& d : enumerate_bd(seed)) {
    auto a = is_admissible(seed, d.cells(), d.dead_cells());
    CHECK(a.ok);
  }

  // all squares dead: nothing live remains above them
  Diagram dead_only{4, 4, {{2, 2}, {2, 3}}};
  CHECK_FALSE(is_admissible(seed, dead_only, dead_only).ok);

  // dead square with its live square below it
  Diagram dp3{4, 4, {{1, 3}, {2, 3}, {2, 2}}};
  Diagram fp3{4, 4, {{1, 3}}};
  auto a3 = is_admissible(seed, dp3, fp3);
  CHECK_FALSE(a3.ok);
  CHECK(a3.failed_condition == 3);

  // both columns K-bubbled: the governing squares are linked
  Diagram dp5{4, 4, {{1, 2}, {1, 3}, {2, 2}, {2, 3}}};
  Diagram fp5{4, 4, {{2, 2}, {2, 3}}};
  auto a5 = is_admissible(seed, dp5, fp5);
  CHECK_FALSE(a5.ok);
  CHECK(a5.failed_condition == 5);
}

TEST_CASE("canonical sequence") {
  BubblingDiagram seed = rothe_bubbling(w1423());

  auto constant = canonical_sequence(seed, seed.cells(), seed.dead_cells());
  CHECK(constant.size() == 5);
  for (const auto& d : constant) CHECK(d == seed);

  BubblingDiagram kd = k_bubble(seed, 2, 3);
  auto seq = canonical_sequence(seed, kd.cells(), kd.dead_cells());
  CHECK(seq.front() == seed);
  CHECK(seq.back() == kd);

  CHECK_THROWS_AS(
      canonical_sequence(seed, Diagram{4, 4, {{2, 2}, {2, 3}}},
                         Diagram{4, 4, {{2, 2}, {2, 3}}}),
      std::invalid_argument);
}

TEST_CASE("canonical sequence reproduces every member, S4") {
  for (const auto& w : vexillary(4)) {
    BubblingDiagram seed = rothe_bubbling(w);
    for (const auto& d : enumerate_bd(seed)) {
      auto seq = canonical_sequence(seed, d.cells(), d.dead_cells());
      CHECK(seq.back() == d);
    }
  }
}

TEST_CASE("distinguished squares") {
  auto aw = distinguished_squares(w1423());
  CHECK(aw.cells == std::vector<Cell>{{2, 2}});
  CHECK(aw.live_index == std::vector<int>{1});

  CHECK(distinguished_squares(Permutation::identity(4)).cells.empty());
  CHECK_THROWS_AS(distinguished_squares(Permutation::parse("2143")),
                  std::invalid_argument);

  // entries have distinct columns and distinct linking keys
  auto big = distinguished_squares(Permutation::parse("178925(10)346"));
  std::set<int> cols, keys;
  for (size_t t = 0; t < big.cells.size(); ++t) {
    cols.insert(big.cells[t].second);
    keys.insert(big.keys[t]);
  }
  CHECK(cols.size() == big.cells.size());
  CHECK(keys.size() == big.cells.size());
}

TEST_CASE("top diagram") {
  BubblingDiagram top = d_top(w1423());
  CHECK(top.squares.size() == 3);
  CHECK(top.is_live(1, 2));
  CHECK(top.rank(1, 2) == 0);
  CHECK(top.is_dead(2, 2));
  CHECK(top.rank(2, 2) == 1);
  CHECK(top.is_live(2, 3));
  CHECK(top.rank(2, 3) == 1);
  CHECK(weight(top) == std::vector<int>{1, 2, 0, 0});
  top.validate();

  CHECK(d_top(Permutation::identity(3)).squares.empty());
}

TEST_CASE("golden regression: distinguished set and top diagram") {
  Permutation w = Permutation::parse("178925(10)346");
  std::string dir = GROTH_GOLDEN_DIR "/v1/";

  std::ifstream fa(dir + "distinguished_178925-10-346.json");
  REQUIRE(fa.good());
  nlohmann::json ja = nlohmann::json::parse(fa);
  auto aw = distinguished_squares(w);
  REQUIRE(ja["cells"].size() == aw.cells.size());
  for (size_t t = 0; t < aw.cells.size(); ++t) {
    CHECK(ja["cells"][t][0].get<int>() == aw.cells[t].first);
    CHECK(ja["cells"][t][1].get<int>() == aw.cells[t].second);
    CHECK(ja["live_index"][t].get<int>() == aw.live_index[t]);
  }

  std::ifstream ft(dir + "dtop_178925-10-346.json");
  REQUIRE(ft.good());
  BubblingDiagram want =
      bubbling_from_json(nlohmann::json::parse(ft));
  CHECK(d_top(w) == want);
}

TEST_CASE("sbd enumeration") {
  auto sbd = enumerate_sbd(w1423());
  CHECK(sbd.size() == 6);
  auto bd = enumerate_bd(rothe_bubbling(w1423()));
  for (const auto& d : sbd) CHECK(bd.count(d) == 1);

  auto trivial = enumerate_sbd(Permutation::identity(3));
  CHECK(trivial.size() == 1);

  for (const auto& w : vexillary(4)) {
    auto s = enumerate_sbd(w);
    auto b = enumerate_bd(rothe_bubbling(w));
    std::set<std::vector<int>> sw, bw;
    for (const auto& d : s) {
      CHECK(b.count(d) == 1);
      sw.insert(weight(d));
    }
    for (const auto& d : b) bw.insert(weight(d));
    CHECK(sw == bw);
  }
}

TEST_CASE("column fills of the rothe diagram") {
  CHECK(f_top(w1423()) == std::vector<int>{0, 1, 0, 0});
  CHECK(d_f(w1423(), {0, 0, 0, 0}) == rothe_diagram(w1423()).first);
  Diagram full = d_f(w1423(), f_top(w1423()));
  CHECK(full.cells == std::set<Cell>{{1, 2}, {2, 2}, {2, 3}});
  CHECK_THROWS_AS(d_f(w1423(), {1, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("removing one row of weight") {
  BubblingDiagram seed = rothe_bubbling(w1423());
  BubblingDiagram kd = k_bubble(seed, 2, 3);
  BubblingDiagram witness = remove_dead_check(w1423(), kd, 2);
  CHECK(weight(witness) == std::vector<int>{1, 1, 0, 0});
  CHECK(witness.dead_cells().cells.empty());

  // weight(seed) - e_2 = (0,1) is not in the support
  CHECK_THROWS_AS(remove_dead_check(w1423(), seed, 2), std::invalid_argument);
}

TEST_CASE("witnesses exist everywhere, S4") {
  for (const auto& w : vexillary(4)) {
    auto bd = enumerate_bd(rothe_bubbling(w));
    const MultiPoly& g = grothendieck(w);
    for (const auto& d : bd) {
      std::vector<int> wt = weight(d);
      wt.resize(w.size(), 0);
      for (int i = 1; i <= w.size(); ++i) {
        Exponent e = wt;
        if (e[i - 1] == 0) continue;
        e[i - 1]--;
        if (!g.coeff(e)) continue;
        BubblingDiagram witness = remove_dead_check(w, d, i, bd);
        CHECK(weight(witness) == std::vector<int>(e.begin(), e.begin() + witness.n));
      }
    }
  }
}

TEST_CASE("random move sequences stay valid") {
  std::mt19937 rng(20240816);
  auto perms = vexillary(5);
  std::uniform_int_distribution<size_t> dw(0, perms.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    BubblingDiagram d = rothe_bubbling(perms[dw(rng)]);
    for (int step = 0; step < 12; ++step) {
      std::vector<std::pair<Cell, bool>> moves;
      for (const auto& [c, s] : d.squares) {
        if (can_bubble(d, c.first, c.second)) moves.push_back({c, false});
        if (can_k_bubble(d, c.first, c.second)) moves.push_back({c, true});
      }
      if (moves.empty()) break;
      auto [c, k] = moves[std::uniform_int_distribution<size_t>(
          0, moves.size() - 1)(rng)];
      d = k ? k_bubble(d, c.first, c.second) : bubble(d, c.first, c.second);
      d.validate();
    }
  }
}

TEST_CASE("links between live squares persist back to the seed") {
  for (const auto& w : vexillary(4)) {
    BubblingDiagram seed = rothe_bubbling(w);
    for (const auto& d : enumerate_bd(seed)) {
      for (int j = 1; j <= d.k; ++j) {
        auto lj = d.live_rows(j), sj = seed.live_rows(j);
        for (int h = j + 1; h <= d.k; ++h) {
          auto lh = d.live_rows(h), sh = seed.live_rows(h);
          for (size_t a = 0; a < lj.size(); ++a) {
            for (size_t b = 0; b < lh.size(); ++b) {
              bool linked_now = linking_key(lj[a], d.rank(lj[a], j)) ==
                                linking_key(lh[b], d.rank(lh[b], h));
              if (!linked_now) continue;
              CHECK(linking_key(sj[a], seed.rank(sj[a], j)) ==
                    linking_key(sh[b], seed.rank(sh[b], h)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("every diagram divides some top-dead diagram, S4") {
  for (const auto& w : vexillary(4)) {
    auto bd = enumerate_bd(rothe_bubbling(w));
    std::set<Cell> ftop = d_top(w).dead_cells().cells;
    for (const auto& d : bd) {
      std::vector<int> wd = weight(d);
      bool found = false;
      for (const auto& c : bd) {
        if (c.dead_cells().cells != ftop) continue;
        std::vector<int> wc = weight(c);
        bool divides = true;
        for (size_t i = 0; i < wd.size(); ++i)
          if (wd[i] > wc[i]) divides = false;
        if (divides) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("support is closed under divisibility intervals, S5") {
  for (const auto& w : vexillary(5)) {
    std::set<Exponent> supp = grothendieck(w).support();
    // scan the bounding box; any beta between two support points must be in
    std::vector<int> hi(w.size(), 0);
    for (const auto& e : supp)
      for (int i = 0; i < w.size(); ++i) hi[i] = std::max(hi[i], e[i]);
    Exponent beta(w.size(), 0);
    auto leq = [&](const Exponent& a, const Exponent& b) {
      for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
      return true;
    };
    std::function<void(int)> scan = [&](int pos) {
      if (pos == w.size()) {
        if (supp.count(beta)) return;
        bool below = false, above = false;
        for (const auto& e : supp) {
          if (leq(e, beta)) below = true;
          if (leq(beta, e)) above = true;
        }
        CHECK_FALSE((below && above));
        return;
      }
      for (beta[pos] = 0; beta[pos] <= hi[pos]; ++beta[pos]) scan(pos + 1);
      beta[pos] = 0;
    };
    scan(0);
  }
}
