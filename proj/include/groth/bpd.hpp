#pragma once
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "groth/core.hpp"
#include "groth/poly.hpp"

namespace groth {

// The six tiles, named by which of their edges carry a pipe:
//   Blank: none            Horizontal: W,E        Vertical: N,S
//   Crossing: N,S,E,W      DownElbow: S,E (elbow opens down-right)
//   UpElbow: W,N (elbow opens up-left)
enum class Tile : char {
  Blank = 'B',
  Horizontal = 'H',
  Vertical = 'V',
  Crossing = 'X',
  DownElbow = 'D',
  UpElbow = 'U',
};

bool tile_north(Tile t);
bool tile_south(Tile t);
bool tile_east(Tile t);
bool tile_west(Tile t);

struct Bpd {
  int n = 0;
  std::vector<Tile> tiles;  // row-major, n*n

  Tile at(int i, int j) const { return tiles[(i - 1) * n + (j - 1)]; }
  Tile& at(int i, int j) { return tiles[(i - 1) * n + (j - 1)]; }
  std::vector<Cell> blanks() const;
  std::vector<Cell> up_elbows() const;
  bool operator==(const Bpd& o) const { return n == o.n && tiles == o.tiles; }
  bool operator<(const Bpd& o) const {
    return std::tie(n, tiles) < std::tie(o.n, o.tiles);
  }
};

inline constexpr int kDefaultBpdBound = 7;
inline constexpr int kMaxBpdBound = 8;

// All n x n grids where n pipes enter along the bottom edge, exit along the
// right edge, and tiles are edge-consistent.  Throws BoundExceeded if
// n > bound (and always if n > kMaxBpdBound).
void enumerate_all(int n, const std::function<void(const Bpd&)>& emit,
                   int bound = kDefaultBpdBound);

// Pipe entering at bottom column j exits at row w^{-1}(j); at a crossing
// where the two pipes have crossed before, they bounce instead.
Permutation decode_permutation(const Bpd& b);
// True iff no pair of pipes meets at more than one crossing tile.
bool is_reduced(const Bpd& b);
Bpd rothe_bpd(const Permutation& w);

// Number of distinct pipes passing through the closed rectangle
// [1..i] x [1..j]; defined for blank tiles (i,j).
int blank_rank(const Bpd& b, Cell cell);

struct MarkedBpd {
  Bpd bpd;
  std::set<Cell> marks;  // subset of up_elbows
};

void enumerate_mbpds(const Permutation& w,
                      const std::function<void(const MarkedBpd&)>& emit,
                      int bound = kDefaultBpdBound);

// Row weight: e_i for every blank in row i and every marked up-elbow in row i.
std::vector<int> weight(const MarkedBpd& m);

// Signed generating function over marked diagrams of w:
// sum (-1)^{#blanks + #marks - length(w)} x^{weight}.
MultiPoly weigandt_sum(const Permutation& w, int bound = kDefaultBpdBound);
// Same sums for every permutation of S_n in one sweep, keyed by one-line word.
std::map<std::vector<int>, MultiPoly> weigandt_all(int n,
                                                   int bound = kDefaultBpdBound);

std::string render_text(const Bpd& b);
std::string render_svg(const MarkedBpd& m);

}  // namespace groth
