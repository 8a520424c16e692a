#include "groth/bubbling.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "groth/poly.hpp"
#include "groth/polyhedra.hpp"

namespace groth {

bool BubblingDiagram::is_live(int i, int j) const {
  auto it = squares.find({i, j});
  return it != squares.end() && !it->second.dead;
}

bool BubblingDiagram::is_dead(int i, int j) const {
  auto it = squares.find({i, j});
  return it != squares.end() && it->second.dead;
}

int BubblingDiagram::rank(int i, int j) const {
  auto it = squares.find({i, j});
  if (it == squares.end())
    throw std::invalid_argument("rank of an empty square");
  return it->second.rank;
}

std::vector<int> BubblingDiagram::rows(int j) const {
  std::vector<int> out;
  for (const auto& [cell, st] : squares)
    if (cell.second == j) out.push_back(cell.first);
  return out;  // map order: already ascending
}

std::vector<int> BubblingDiagram::live_rows(int j) const {
  std::vector<int> out;
  for (const auto& [cell, st] : squares)
    if (cell.second == j && !st.dead) out.push_back(cell.first);
  return out;
}

std::vector<int> BubblingDiagram::dead_rows(int j) const {
  std::vector<int> out;
  for (const auto& [cell, st] : squares)
    if (cell.second == j && st.dead) out.push_back(cell.first);
  return out;
}

Diagram BubblingDiagram::cells() const {
  Diagram d{n, k, {}};
  for (const auto& [cell, st] : squares) d.cells.insert(cell);
  return d;
}

Diagram BubblingDiagram::dead_cells() const {
  Diagram d{n, k, {}};
  for (const auto& [cell, st] : squares)
    if (st.dead) d.cells.insert(cell);
  return d;
}

void BubblingDiagram::validate() const {
  for (const auto& [cell, st] : squares) {
    const auto [i, j] = cell;
    if (i < 1 || i > n || j < 1 || j > k)
      throw std::invalid_argument("square outside the grid");
    if (st.rank < 0) throw std::invalid_argument("negative rank");
  }
  std::map<int, std::set<int>> row_dead_ranks;
  for (const auto& [cell, st] : squares) {
    if (!st.dead) continue;
    const auto [i, j] = cell;
    int above = 0;  // maximal live row < i in column j
    for (const auto& [c2, s2] : squares)
      if (c2.second == j && !s2.dead && c2.first < i)
        above = std::max(above, c2.first);
    if (above == 0)
      throw std::invalid_argument("dead square with no live square above");
    if (st.rank - rank(above, j) != i - above)
      throw std::invalid_argument("dead-square rank mismatch");
    if (!row_dead_ranks[i].insert(st.rank).second)
      throw std::invalid_argument("equal-rank dead squares in one row");
  }
}

std::vector<int> weight(const BubblingDiagram& d) {
  std::vector<int> wt(d.n, 0);
  for (const auto& [cell, st] : d.squares) ++wt[cell.first - 1];
  return wt;
}

BubblingDiagram rothe_bubbling(const Permutation& w) {
  auto [dg, ranks] = rothe_diagram(w);
  BubblingDiagram d{dg.n, dg.k, {}};
  for (const Cell& c : dg.cells) d.squares[c] = {ranks.at(c), false};
  return d;
}

bool can_bubble(const BubblingDiagram& d, int i, int j) {
  return i >= 2 && d.is_live(i, j) && !d.occupied(i - 1, j);
}

namespace {

// Shared preconditions of both moves; returns a reason or nullptr.
const char* move_obstruction(const BubblingDiagram& d, int i, int j) {
  if (!d.is_live(i, j)) return "no live square at the source";
  if (i < 2) return "source in the top row";
  if (d.occupied(i - 1, j)) return "target square occupied";
  return nullptr;
}

}  // namespace

bool can_k_bubble(const BubblingDiagram& d, int i, int j) {
  if (!can_bubble(d, i, j)) return false;
  const int r = d.rank(i, j);
  for (const auto& [cell, st] : d.squares)
    if (st.dead && cell.first == i && st.rank == r) return false;
  return true;
}

BubblingDiagram bubble(const BubblingDiagram& d, int i, int j) {
  if (const char* why = move_obstruction(d, i, j))
    throw IllegalMove(std::string("bubble: ") + why);
  BubblingDiagram out = d;
  const int r = out.squares.at({i, j}).rank;
  out.squares.erase({i, j});
  out.squares[{i - 1, j}] = {r - 1, false};
  return out;
}

BubblingDiagram k_bubble(const BubblingDiagram& d, int i, int j) {
  if (const char* why = move_obstruction(d, i, j))
    throw IllegalMove(std::string("k_bubble: ") + why);
  if (!can_k_bubble(d, i, j))
    throw IllegalMove("k_bubble: equal-rank dead square in the row");
  BubblingDiagram out = d;
  const int r = out.squares.at({i, j}).rank;
  out.squares[{i, j}].dead = true;
  out.squares[{i - 1, j}] = {r - 1, false};
  return out;
}

std::set<BubblingDiagram> enumerate_bd(const BubblingDiagram& seed) {
  std::set<BubblingDiagram> visited{seed};
  std::deque<BubblingDiagram> frontier{seed};
  while (!frontier.empty()) {
    BubblingDiagram d = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& [cell, st] : d.squares) {
      if (st.dead) continue;
      const auto [i, j] = cell;
      if (can_bubble(d, i, j)) {
        if (auto nd = bubble(d, i, j); visited.insert(nd).second)
          frontier.push_back(std::move(nd));
      }
      if (can_k_bubble(d, i, j)) {
        if (auto nd = k_bubble(d, i, j); visited.insert(nd).second)
          frontier.push_back(std::move(nd));
      }
    }
  }
  return visited;
}

std::map<int, std::vector<Cell>> linking_classes(const BubblingDiagram& d) {
  std::map<int, std::vector<Cell>> classes;
  for (const auto& [cell, st] : d.squares)
    classes[linking_key(cell.first, st.rank)].push_back(cell);
  return classes;
}

namespace {

std::vector<int> column_rows(const std::set<Cell>& cells, int j) {
  std::vector<int> out;
  for (const Cell& c : cells)
    if (c.second == j) out.push_back(c.first);
  std::sort(out.begin(), out.end());
  return out;
}

// Index (1-based, from the top) of the largest element of `rows` below i,
// or 0 when none exists.
int nearest_above_index(const std::vector<int>& rows, int i) {
  int idx = 0;
  for (size_t t = 0; t < rows.size(); ++t)
    if (rows[t] < i) idx = static_cast<int>(t) + 1;
  return idx;
}

Admissibility fail(int cond, std::string detail) {
  return {false, cond, std::move(detail)};
}

std::string cell_str(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Admissibility is_admissible(const BubblingDiagram& seed, const Diagram& dp,
                            const Diagram& fp) {
  for (const Cell& c : fp.cells)
    if (!dp.cells.count(c))
      throw std::invalid_argument("dead target cell outside the diagram");

  const Diagram seed_dead = seed.dead_cells();
  // (1) F' contains F.
  for (const Cell& c : seed_dead.cells)
    if (!fp.cells.count(c))
      return fail(1, "dead square " + cell_str(c.first, c.second) +
                         " lost from the target");

  const int kmax = std::max(seed.k, dp.k);
  std::map<int, std::vector<int>> live_dp;  // per column, (D' \ F') rows
  for (int j = 1; j <= kmax; ++j) {
    std::vector<int> lv;
    for (int i : dp.column(j))
      if (!fp.contains(i, j)) lv.push_back(i);
    live_dp[j] = lv;
    // (2) columnwise domination of live squares.
    if (!subset_leq(lv, seed.live_rows(j)))
      return fail(2, "live squares of column " + std::to_string(j) +
                         " not dominated");
  }

  // (3) every new dead square sits below enough live squares.
  for (const Cell& c : fp.cells) {
    if (seed_dead.cells.count(c)) continue;
    const auto [i, j] = c;
    const int m = nearest_above_index(live_dp[j], i);
    if (m == 0)
      return fail(3, "new dead square " + cell_str(i, j) +
                         " has no live square above");
    const std::vector<int> seed_live = seed.live_rows(j);
    if (static_cast<int>(seed_live.size()) < m || seed_live[m - 1] < i)
      return fail(3, "live square governing " + cell_str(i, j) +
                         " started above row " + std::to_string(i));
  }

  // (4) live counts around pre-existing dead squares are preserved.
  for (const Cell& c : seed_dead.cells) {
    const auto [i, j] = c;
    const std::vector<int> before = seed.live_rows(j);
    const std::vector<int>& after = live_dp[j];
    auto above = [i](const std::vector<int>& v) {
      return std::count_if(v.begin(), v.end(), [i](int r) { return r < i; });
    };
    auto below = [i](const std::vector<int>& v) {
      return std::count_if(v.begin(), v.end(), [i](int r) { return r > i; });
    };
    if (above(before) != above(after) || below(before) != below(after))
      return fail(4, "live counts around dead square " + cell_str(i, j) +
                         " changed");
  }

  // (5) same-row dead squares are not governed by linked seed squares.
  std::map<int, std::vector<int>> by_row;  // row -> columns with dead squares
  for (const Cell& c : fp.cells) by_row[c.first].push_back(c.second);
  for (const auto& [i, cols] : by_row) {
    for (size_t a = 0; a < cols.size(); ++a)
      for (size_t b = a + 1; b < cols.size(); ++b) {
        const int j = cols[a], h = cols[b];
        const int mj = nearest_above_index(live_dp[j], i);
        const int mh = nearest_above_index(live_dp[h], i);
        if (mj == 0 || mh == 0) continue;  // condition 3 reports these
        const std::vector<int> sj = seed.rows(j), sh = seed.rows(h);
        if (static_cast<int>(sj.size()) < mj ||
            static_cast<int>(sh.size()) < mh)
          continue;
        const int rj = sj[mj - 1], rh = sh[mh - 1];
        if (linking_key(rj, seed.rank(rj, j)) ==
            linking_key(rh, seed.rank(rh, h)))
          return fail(5, "dead squares " + cell_str(i, j) + " and " +
                             cell_str(i, h) + " governed by linked squares");
      }
  }
  return {};
}

namespace {

// Minimal s so that column j of d and of the target weakly agree below s.
int weak_agreement_row(const BubblingDiagram& d, const Diagram& dp,
                       const Diagram& fp, int j) {
  for (int t = d.n; t >= 1; --t) {
    const bool in_d = d.occupied(t, j), in_dp = dp.contains(t, j);
    const bool dead_d = d.is_dead(t, j), dead_dp = fp.contains(t, j);
    if (in_d != in_dp || dead_d != dead_dp) return t + 1;
  }
  return 1;
}

}  // namespace

std::vector<BubblingDiagram> canonical_sequence(const BubblingDiagram& seed,
                                                const Diagram& dp,
                                                const Diagram& fp) {
  if (Admissibility a = is_admissible(seed, dp, fp); !a.ok)
    throw std::invalid_argument("target not admissible (condition " +
                                std::to_string(a.failed_condition) +
                                "): " + a.detail);
  std::vector<BubblingDiagram> stages{seed};
  BubblingDiagram cur = seed;
  for (int m = cur.n; m >= 1; --m) {
    // Columns act independently, so the stage can visit them in any order.
    for (int j = 1; j <= cur.k; ++j) {
      if (cur.occupied(m, j) || !cur.is_live(m + 1, j)) continue;
      const int kj = weak_agreement_row(cur, dp, fp, j);
      if (kj <= m + 1) continue;
      if (!dp.contains(kj - 1, j)) {
        for (int t = m + 1; t <= kj - 1; ++t) cur = bubble(cur, t, j);
      } else if (fp.contains(kj - 1, j)) {
        for (int t = m + 1; t <= kj - 2; ++t) cur = bubble(cur, t, j);
        cur = k_bubble(cur, kj - 1, j);
      }
    }
    stages.push_back(cur);
  }
  if (!(cur.cells() == dp) || !(cur.dead_cells() == fp))
    throw std::logic_error("canonical sequence missed its target");
  return stages;
}

DistinguishedSet distinguished_squares(const Permutation& w) {
  if (!w.is_vexillary())
    throw std::invalid_argument("vexillary permutation required");
  auto [dg, ranks] = rothe_diagram(w);
  std::vector<Cell> order(dg.cells.begin(), dg.cells.end());
  auto squares_below = [&dg](const Cell& c) {
    int cnt = 0;
    for (int r : dg.column(c.second))
      if (r > c.first) ++cnt;
    return cnt;
  };
  std::sort(order.begin(), order.end(), [&](const Cell& a, const Cell& b) {
    if (a.first != b.first) return a.first > b.first;
    const int ba = squares_below(a), bb = squares_below(b);
    if (ba != bb) return ba < bb;
    return a.second < b.second;
  });
  DistinguishedSet out;
  std::set<int> used_cols, used_keys;
  for (const Cell& c : order) {
    const int key = linking_key(c.first, ranks.at(c));
    if (used_cols.count(c.second) || used_keys.count(key)) continue;
    used_cols.insert(c.second);
    used_keys.insert(key);
    const std::vector<int> col = dg.column(c.second);
    const int m = static_cast<int>(std::find(col.begin(), col.end(),
                                             c.first) -
                                   col.begin()) +
                  1;
    out.cells.push_back(c);
    out.live_index.push_back(m);
    out.keys.push_back(key);
  }
  return out;
}

std::vector<Cell> distinguished_in(const DistinguishedSet& aw,
                                   const BubblingDiagram& d) {
  std::vector<Cell> out;
  for (size_t t = 0; t < aw.cells.size(); ++t) {
    const int j = aw.cells[t].second, m = aw.live_index[t];
    const std::vector<int> lv = d.live_rows(j);
    if (static_cast<int>(lv.size()) < m)
      throw std::logic_error("column lost a tracked live square");
    out.push_back({lv[m - 1], j});
  }
  return out;
}

BubblingDiagram d_top(const Permutation& w) {
  const DistinguishedSet aw = distinguished_squares(w);
  BubblingDiagram d = rothe_bubbling(w);
  // Compact everything above a distinguished square, then K-bubble the
  // distinguished squares until they jam against the compacted block.
  for (bool moved = true; moved;) {
    moved = false;
    for (const Cell& a : distinguished_in(aw, d))
      for (int r : d.live_rows(a.second))
        if (r < a.first && can_bubble(d, r, a.second)) {
          d = bubble(d, r, a.second);
          moved = true;
        }
  }
  for (bool moved = true; moved;) {
    moved = false;
    for (const Cell& a : distinguished_in(aw, d))
      if (can_k_bubble(d, a.first, a.second)) {
        d = k_bubble(d, a.first, a.second);
        moved = true;
      }
  }
  return d;
}

namespace {

struct ColumnState {
  std::vector<int> live;  // ascending rows
  std::vector<int> dead;
  auto operator<=>(const ColumnState&) const = default;
};

// States one column can reach: bubble any live row; K-bubble the m-th
// highest live row when m > 0.  Rank bookkeeping is deferred to the
// reassembly step since keys are invariant under both moves.
std::set<ColumnState> column_states(const std::vector<int>& seed, int m) {
  const ColumnState start{seed, {}};
  std::set<ColumnState> visited{start};
  std::deque<ColumnState> frontier{start};
  auto empty_at = [](const ColumnState& s, int r) {
    return !std::binary_search(s.live.begin(), s.live.end(), r) &&
           !std::binary_search(s.dead.begin(), s.dead.end(), r);
  };
  while (!frontier.empty()) {
    ColumnState s = std::move(frontier.front());
    frontier.pop_front();
    for (size_t t = 0; t < s.live.size(); ++t) {
      const int r = s.live[t];
      if (r < 2 || !empty_at(s, r - 1)) continue;
      ColumnState up = s;
      up.live[t] = r - 1;
      if (visited.insert(up).second) frontier.push_back(up);
      if (static_cast<int>(t) + 1 == m) {
        ColumnState kup = s;
        kup.live[t] = r - 1;
        kup.dead.insert(
            std::lower_bound(kup.dead.begin(), kup.dead.end(), r), r);
        if (visited.insert(kup).second) frontier.push_back(kup);
      }
    }
  }
  return visited;
}

}  // namespace

std::set<BubblingDiagram> enumerate_sbd(const Permutation& w) {
  const DistinguishedSet aw = distinguished_squares(w);
  auto [dg, ranks] = rothe_diagram(w);
  const int n = dg.n;

  std::vector<std::vector<ColumnState>> per_col(n + 1);
  std::vector<std::vector<int>> keys(n + 1);  // t-th live square's key
  for (int j = 1; j <= n; ++j) {
    const std::vector<int> seed = dg.column(j);
    for (int r : seed) keys[j].push_back(linking_key(r, ranks.at({r, j})));
    int m = 0;
    for (size_t t = 0; t < aw.cells.size(); ++t)
      if (aw.cells[t].second == j) m = aw.live_index[t];
    auto states = column_states(seed, m);
    per_col[j].assign(states.begin(), states.end());
  }

  std::set<BubblingDiagram> out;
  BubblingDiagram scratch{n, n, {}};
  // Depth-first product over columns; ranks recovered from invariant keys.
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      BubblingDiagram d = scratch;
      d.validate();
      out.insert(std::move(d));
      return;
    }
    for (const ColumnState& s : per_col[j]) {
      for (size_t t = 0; t < s.live.size(); ++t)
        scratch.squares[{s.live[t], j}] = {s.live[t] - keys[j][t], false};
      int m = 0;
      for (size_t t = 0; t < aw.cells.size(); ++t)
        if (aw.cells[t].second == j) m = aw.live_index[t];
      for (int r : s.dead)
        scratch.squares[{r, j}] = {r - keys[j][m - 1], true};
      self(self, j + 1);
      for (size_t t = 0; t < s.live.size(); ++t)
        scratch.squares.erase({s.live[t], j});
      for (int r : s.dead) scratch.squares.erase({r, j});
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> f_top(const Permutation& w) {
  const BubblingDiagram d = d_top(w);
  std::vector<int> f(d.k, 0);
  for (const auto& [cell, st] : d.squares)
    if (st.dead) ++f[cell.second - 1];
  return f;
}

Diagram d_f(const Permutation& w, const std::vector<int>& f) {
  const std::vector<int> ft = f_top(w);
  if (f.size() != ft.size())
    throw std::invalid_argument("fill vector has the wrong length");
  for (size_t j = 0; j < f.size(); ++j)
    if (f[j] < 0 || f[j] > ft[j])
      throw std::invalid_argument("fill count exceeds the maximum");
  const DistinguishedSet aw = distinguished_squares(w);
  auto [dg, ranks] = rothe_diagram(w);
  Diagram out{dg.n, dg.k, {}};
  for (int j = 1; j <= dg.k; ++j) {
    std::vector<int> rows = dg.column(j);
    if (f[j - 1] > 0) {
      int s = 0;
      for (size_t t = 0; t < aw.cells.size(); ++t)
        if (aw.cells[t].second == j) s = aw.cells[t].first;
      rows = column_fill(rows, s, f[j - 1]);
    }
    for (int r : rows) out.cells.insert({r, j});
  }
  return out;
}

BubblingDiagram remove_dead_check(const Permutation& w,
                                  const BubblingDiagram& d, int i) {
  return remove_dead_check(w, d, i, enumerate_bd(rothe_bubbling(w)));
}

BubblingDiagram remove_dead_check(const Permutation& w,
                                  const BubblingDiagram& d, int i,
                                  const std::set<BubblingDiagram>& bd) {
  std::vector<int> target = weight(d);
  if (i < 1 || i > d.n || target[i - 1] == 0)
    throw std::invalid_argument("row has no square to remove");
  --target[i - 1];
  Exponent e(w.size(), 0);
  for (size_t t = 0; t < target.size() && t < e.size(); ++t) e[t] = target[t];
  if (!grothendieck(w).coeff(e))
    throw std::invalid_argument("reduced weight not in the support");

  const Diagram dead = d.dead_cells();
  for (const BubblingDiagram& c : bd) {
    if (weight(c) != target) continue;
    const Diagram cdead = c.dead_cells();
    if (cdead.cells.size() >= dead.cells.size()) continue;
    bool sub = true;
    for (const Cell& cell : cdead.cells)
      if (!dead.cells.count(cell) ||
          c.rank(cell.first, cell.second) != d.rank(cell.first, cell.second)) {
        sub = false;
        break;
      }
    if (sub) return c;
  }
  throw NoWitness("no dead-square removal witness for row " +
                  std::to_string(i));
}

std::string render_svg(const BubblingDiagram& d) {
  const int s = 30;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << d.k * s
      << "\" height=\"" << d.n * s << "\" viewBox=\"0 0 " << d.k * s << " "
      << d.n * s << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& [cell, st] : d.squares) {
    const int x = (cell.second - 1) * s, y = (cell.first - 1) * s;
    svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << s
        << "\" height=\"" << s << "\" fill=\""
        << (st.dead ? "#bbb" : "#7c5") << "\" stroke=\"#555\"/>\n";
    svg << "<text x=\"" << x + s / 2 << "\" y=\"" << y + s / 2 + 5
        << "\" text-anchor=\"middle\" font-size=\"14\">" << st.rank
        << "</text>\n";
  }
  for (int g = 0; g <= d.n; ++g)
    svg << "<line x1=\"0\" y1=\"" << g * s << "\" x2=\"" << d.k * s
        << "\" y2=\"" << g * s << "\" stroke=\"#ddd\"/>\n";
  for (int g = 0; g <= d.k; ++g)
    svg << "<line y1=\"0\" x1=\"" << g * s << "\" y2=\"" << d.n * s
        << "\" x2=\"" << g * s << "\" stroke=\"#ddd\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace groth
