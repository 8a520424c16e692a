#include "groth/bpd.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace groth {

namespace {
constexpr std::array<Tile, 6> kTiles = {Tile::Blank,    Tile::Horizontal,
                                        Tile::Vertical, Tile::Crossing,
                                        Tile::DownElbow, Tile::UpElbow};
}

bool tile_north(Tile t) {
  return t == Tile::Vertical || t == Tile::Crossing || t == Tile::UpElbow;
}
bool tile_south(Tile t) {
  return t == Tile::Vertical || t == Tile::Crossing || t == Tile::DownElbow;
}
bool tile_east(Tile t) {
  return t == Tile::Horizontal || t == Tile::Crossing || t == Tile::DownElbow;
}
bool tile_west(Tile t) {
  return t == Tile::Horizontal || t == Tile::Crossing || t == Tile::UpElbow;
}

std::vector<Cell> Bpd::blanks() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (at(i, j) == Tile::Blank) out.push_back({i, j});
  return out;
}

std::vector<Cell> Bpd::up_elbows() const {
  std::vector<Cell> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (at(i, j) == Tile::UpElbow) out.push_back({i, j});
  return out;
}

void enumerate_all(int n, const std::function<void(const Bpd&)>& emit,
                   int bound) {
  if (n < 1) throw std::invalid_argument("enumerate_all: n must be positive");
  const int cap = std::min(bound, kMaxBpdBound);
  if (n > cap)
    throw BoundExceeded("enumerate_all: n=" + std::to_string(n) +
                        " exceeds bound " + std::to_string(cap));
  Bpd b;
  b.n = n;
  b.tiles.assign(static_cast<size_t>(n) * n, Tile::Blank);

  // Fill cells in row-major order; west/north edges are already fixed by
  // placed neighbors (or the empty top/left boundary), east/south are forced
  // on the right/bottom boundaries.
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == n * n) {
      emit(b);
      return;
    }
    const int i = idx / n + 1, j = idx % n + 1;
    const bool west = (j > 1) && tile_east(b.at(i, j - 1));
    const bool north = (i > 1) && tile_south(b.at(i - 1, j));
    for (Tile t : kTiles) {
      if (tile_west(t) != west || tile_north(t) != north) continue;
      if (j == n && !tile_east(t)) continue;
      if (i == n && !tile_south(t)) continue;
      b.at(i, j) = t;
      self(self, idx + 1);
    }
  };
  rec(rec, 0);
}

namespace {
// One pass of pipe tracing, bottom row to top row.  Pipes are labeled by
// their entry column.  `bounce` selects the semantics at a repeated
// crossing; `cell_mask` (optional) collects, per cell, the labels present.
std::vector<int> trace(const Bpd& b, bool bounce, bool* repeated_crossing,
                       std::vector<unsigned>* cell_mask) {
  const int n = b.n;
  std::vector<int> col(n + 1, 0);  // label on the north edge below row i
  for (int j = 1; j <= n; ++j) col[j] = j;
  std::vector<int> exit_at(n + 1, 0);
  std::set<std::pair<int, int>> crossed;
  if (repeated_crossing) *repeated_crossing = false;
  for (int i = n; i >= 1; --i) {
    int row = 0;  // label traveling east
    for (int j = 1; j <= n; ++j) {
      const Tile t = b.at(i, j);
      int in_s = tile_south(t) ? col[j] : 0;
      int in_w = tile_west(t) ? row : 0;
      int out_n = 0, out_e = 0;
      switch (t) {
        case Tile::Blank:
          break;
        case Tile::Horizontal:
          out_e = in_w;
          break;
        case Tile::Vertical:
          out_n = in_s;
          break;
        case Tile::DownElbow:
          out_e = in_s;
          break;
        case Tile::UpElbow:
          out_n = in_w;
          break;
        case Tile::Crossing: {
          auto key = std::minmax(in_s, in_w);
          if (crossed.count(key)) {
            if (repeated_crossing) *repeated_crossing = true;
            if (bounce) {
              out_e = in_s;
              out_n = in_w;
            } else {
              out_n = in_s;
              out_e = in_w;
            }
          } else {
            crossed.insert(key);
            out_n = in_s;
            out_e = in_w;
          }
          break;
        }
      }
      if (cell_mask) {
        unsigned m = 0;
        for (int lab : {in_s, in_w, out_n, out_e})
          if (lab) m |= 1u << (lab - 1);
        (*cell_mask)[(i - 1) * n + (j - 1)] = m;
      }
      col[j] = out_n;
      row = out_e;
    }
    exit_at[i] = row;
  }
  return exit_at;
}
}  // namespace

Permutation decode_permutation(const Bpd& b) {
  std::vector<int> exit_at = trace(b, /*bounce=*/true, nullptr, nullptr);
  std::vector<int> w(exit_at.begin() + 1, exit_at.end());
  return Permutation(std::move(w));
}

bool is_reduced(const Bpd& b) {
  bool rep = false;
  trace(b, /*bounce=*/true, &rep, nullptr);
  return !rep;
}

Bpd rothe_bpd(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  Bpd b;
  b.n = n;
  b.tiles.assign(static_cast<size_t>(n) * n, Tile::Blank);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const bool vert = i > winv(j);
      const bool horiz = j > w(i);
      if (j == w(i))
        b.at(i, j) = Tile::DownElbow;
      else if (vert && horiz)
        b.at(i, j) = Tile::Crossing;
      else if (vert)
        b.at(i, j) = Tile::Vertical;
      else if (horiz)
        b.at(i, j) = Tile::Horizontal;
    }
  return b;
}

int blank_rank(const Bpd& b, Cell cell) {
  if (b.at(cell.first, cell.second) != Tile::Blank)
    throw std::invalid_argument("blank_rank: tile is not blank");
  std::vector<unsigned> mask(static_cast<size_t>(b.n) * b.n, 0);
  trace(b, /*bounce=*/true, nullptr, &mask);
  unsigned seen = 0;
  for (int i = 1; i <= cell.first; ++i)
    for (int j = 1; j <= cell.second; ++j)
      seen |= mask[(i - 1) * b.n + (j - 1)];
  return __builtin_popcount(seen);
}

void enumerate_mbpds(const Permutation& w,
                      const std::function<void(const MarkedBpd&)>& emit,
                      int bound) {
  enumerate_all(w.size(), [&](const Bpd& b) {
    if (decode_permutation(b) != w) return;
    const std::vector<Cell> ups = b.up_elbows();
    const size_t u = ups.size();
    MarkedBpd m{b, {}};
    for (size_t s = 0; s < (1ull << u); ++s) {
      m.marks.clear();
      for (size_t t = 0; t < u; ++t)
        if (s >> t & 1) m.marks.insert(ups[t]);
      emit(m);
    }
  }, bound);
}

std::vector<int> weight(const MarkedBpd& m) {
  std::vector<int> wt(m.bpd.n, 0);
  for (const auto& [i, j] : m.bpd.blanks()) wt[i - 1] += 1;
  for (const auto& [i, j] : m.marks) wt[i - 1] += 1;
  return wt;
}

namespace {
// Contribution of a single diagram: each blank in row i contributes a factor
// x_i, each up-elbow a factor (1 - x_i); the sign regroups the subset sum
// sum_S (-1)^{|S|} x^{e(S)} over mark sets S.
MultiPoly bpd_contribution(const Bpd& b, int len) {
  const int n = b.n;
  Exponent e(n, 0);
  for (const auto& [i, j] : b.blanks()) e[i - 1] += 1;
  const int blanks = std::accumulate(e.begin(), e.end(), 0);
  MultiPoly p = MultiPoly::monomial(e, (blanks - len) % 2 == 0 ? 1 : -1);
  for (const auto& [i, j] : b.up_elbows()) {
    MultiPoly f = MultiPoly::monomial(Exponent(n, 0), 1);
    Exponent xi(n, 0);
    xi[i - 1] = 1;
    f.add_term(xi, -1);
    p = p * f;
  }
  return p;
}
}  // namespace

MultiPoly weigandt_sum(const Permutation& w, int bound) {
  const int len = w.length();
  MultiPoly sum(w.size());
  enumerate_all(w.size(), [&](const Bpd& b) {
    if (decode_permutation(b) == w) sum = sum + bpd_contribution(b, len);
  }, bound);
  return sum;
}

std::map<std::vector<int>, MultiPoly> weigandt_all(int n, int bound) {
  std::map<std::vector<int>, MultiPoly> out;
  std::map<std::vector<int>, int> len;
  for (const Permutation& w : all_permutations(n))
    len[w.oneline()] = w.length();
  enumerate_all(n, [&](const Bpd& b) {
    const std::vector<int> key = decode_permutation(b).oneline();
    auto [it, fresh] = out.try_emplace(key, MultiPoly(n));
    it->second = it->second + bpd_contribution(b, len.at(key));
  }, bound);
  return out;
}

std::string render_text(const Bpd& b) {
  std::string out;
  for (int i = 1; i <= b.n; ++i) {
    for (int j = 1; j <= b.n; ++j) {
      switch (b.at(i, j)) {
        case Tile::Blank: out += " "; break;
        case Tile::Horizontal: out += "─"; break;
        case Tile::Vertical: out += "│"; break;
        case Tile::Crossing: out += "┼"; break;
        case Tile::DownElbow: out += "┌"; break;
        case Tile::UpElbow: out += "┘"; break;
      }
    }
    out += "\n";
  }
  return out;
}

std::string render_svg(const MarkedBpd& m) {
  const int n = m.bpd.n, s = 30;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << n * s
      << "\" height=\"" << n * s << "\" viewBox=\"0 0 " << n * s << " "
      << n * s << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int g = 0; g <= n; ++g) {
    svg << "<line x1=\"0\" y1=\"" << g * s << "\" x2=\"" << n * s
        << "\" y2=\"" << g * s << "\" stroke=\"#ddd\"/>\n";
    svg << "<line y1=\"0\" x1=\"" << g * s << "\" y2=\"" << n * s
        << "\" x2=\"" << g * s << "\" stroke=\"#ddd\"/>\n";
  }
  auto line = [&](int x1, int y1, int x2, int y2) {
    svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2
        << "\" stroke=\"#1a6\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const int cx = (j - 1) * s + s / 2, cy = (i - 1) * s + s / 2;
      const Tile t = m.bpd.at(i, j);
      if (tile_north(t)) line(cx, cy, cx, cy - s / 2);
      if (tile_south(t)) line(cx, cy, cx, cy + s / 2);
      if (tile_east(t)) line(cx, cy, cx + s / 2, cy);
      if (tile_west(t)) line(cx, cy, cx - s / 2, cy);
      if (m.marks.count({i, j}))
        svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
            << "\" r=\"5\" fill=\"#c33\"/>\n";
    }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace groth
