#pragma once
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groth/errors.hpp"

namespace groth {

// Matrix cell (row, column), both 1-indexed.
using Cell = std::pair<int, int>;

class Permutation {
 public:
  explicit Permutation(std::vector<int> oneline);
  static Permutation identity(int n);
  static Permutation longest(int n);
  // Parses one-line notation: single digits juxtaposed, multi-digit
  // values parenthesized, e.g. "2168534(10)79".
  static Permutation parse(const std::string& s);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& oneline() const { return w_; }
  std::string to_string() const;

  Permutation inverse() const;
  int length() const;  // number of inversions
  // Right multiplication by the simple transposition s_j.
  Permutation swap(int j) const;
  std::vector<int> ascents() const;   // j with w(j) < w(j+1)
  std::vector<int> descents() const;  // j with w(j) > w(j+1)
  // True iff no indices a<b<c<d with w(b)<w(a)<w(d)<w(c).
  bool is_vexillary() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

struct Diagram {
  int n = 0;  // rows
  int k = 0;  // columns
  std::set<Cell> cells;

  std::vector<int> column(int j) const;  // sorted rows occupied in column j
  bool contains(int i, int j) const { return cells.count({i, j}) > 0; }
  int size() const { return static_cast<int>(cells.size()); }
  bool operator==(const Diagram& o) const {
    return n == o.n && k == o.k && cells == o.cells;
  }
};

using RankTable = std::map<Cell, int>;

// R <= S elementwise after sorting; requires |R| == |S|.
bool subset_leq(const std::vector<int>& r, const std::vector<int>& s);
// C <= D columnwise via subset_leq on every column.
bool diagram_leq(const Diagram& c, const Diagram& d);
// Row counts (# cells in row 1, ..., row n).
std::vector<int> weight(const Diagram& d);

// Rothe diagram { (i,j) : j < w(i), i < w^{-1}(j) } together with
// rank(i,j) = #{ k < i : w(k) < j }.
std::pair<Diagram, RankTable> rothe_diagram(const Permutation& w);

std::vector<Permutation> all_permutations(int n);

}  // namespace groth
