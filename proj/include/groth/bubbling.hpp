#pragma once
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "groth/core.hpp"

namespace groth {

struct SquareState {
  int rank = 0;
  bool dead = false;
  auto operator<=>(const SquareState&) const = default;
};

// A triple (D, r, F): cells with ranks, a subset of which are dead.
struct BubblingDiagram {
  int n = 0;  // rows
  int k = 0;  // columns
  std::map<Cell, SquareState> squares;

  bool occupied(int i, int j) const { return squares.count({i, j}) > 0; }
  bool is_live(int i, int j) const;
  bool is_dead(int i, int j) const;
  int rank(int i, int j) const;  // throws if absent
  std::vector<int> rows(int j) const;       // all occupied rows of column j
  std::vector<int> live_rows(int j) const;  // sorted ascending
  std::vector<int> dead_rows(int j) const;
  Diagram cells() const;       // live + dead
  Diagram dead_cells() const;  // F only

  // Checks grid bounds, nonnegative ranks, the dead-square support equality
  // r(i,j) - r(i',j) = i - i' against the nearest live square above, and
  // distinctness of same-row dead ranks.  Throws std::invalid_argument.
  void validate() const;

  auto operator<=>(const BubblingDiagram&) const = default;
};

std::vector<int> weight(const BubblingDiagram& d);

BubblingDiagram rothe_bubbling(const Permutation& w);

bool can_bubble(const BubblingDiagram& d, int i, int j);
bool can_k_bubble(const BubblingDiagram& d, int i, int j);
// Move the live square (i,j) to the empty cell (i-1,j), decrementing rank.
// Throws IllegalMove with the failing precondition.
BubblingDiagram bubble(const BubblingDiagram& d, int i, int j);
// Same, but leaves a dead copy at (i,j); illegal when some dead square in
// row i has the same rank as (i,j).
BubblingDiagram k_bubble(const BubblingDiagram& d, int i, int j);

// BFS closure of the seed under both moves, deduplicated by full state.
std::set<BubblingDiagram> enumerate_bd(const BubblingDiagram& seed);

// Two squares are linked iff their keys agree.
inline int linking_key(int i, int rank) { return i - rank; }
std::map<int, std::vector<Cell>> linking_classes(const BubblingDiagram& d);

struct Admissibility {
  bool ok = true;
  int failed_condition = 0;  // 1..5 when !ok
  std::string detail;
};

// Conditions (1)-(5) for (Dp, Fp) to be reachable from the seed.
// Requires Fp's cells to be a subset of Dp's.
Admissibility is_admissible(const BubblingDiagram& seed, const Diagram& dp,
                            const Diagram& fp);

// The row sweep m = n..1 realizing an admissible target; returns the n+1
// stage snapshots, last of which has cells Dp and dead set Fp.
std::vector<BubblingDiagram> canonical_sequence(const BubblingDiagram& seed,
                                                const Diagram& dp,
                                                const Diagram& fp);

struct DistinguishedSet {
  std::vector<Cell> cells;      // k-th distinguished square (i_k, j_k)
  std::vector<int> live_index;  // m_k: index from the top within its column
  std::vector<int> keys;        // linking key of each entry
};

// Greedy selection through the order (lower rows first; fewer squares below
// first; then left to right), skipping any square whose column or linking
// class is already represented.  Requires w vexillary.
DistinguishedSet distinguished_squares(const Permutation& w);
// A(d): the m_k-th highest live square of column j_k, per entry.
std::vector<Cell> distinguished_in(const DistinguishedSet& aw,
                                   const BubblingDiagram& d);

// Bubble everything above distinguished squares to exhaustion, then K-bubble
// the distinguished squares to exhaustion.
BubblingDiagram d_top(const Permutation& w);

// Diagrams generated by bubbling any live square and K-bubbling distinguished
// squares only; computed as a product of independent per-column state sets.
std::set<BubblingDiagram> enumerate_sbd(const Permutation& w);

// Per-column dead counts of d_top(w).
std::vector<int> f_top(const Permutation& w);
// Column k of the result is the f_k-fold fill of D(w)_k toward the
// distinguished row i_k.  Requires 0 <= f <= f_top(w) componentwise.
Diagram d_f(const Permutation& w, const std::vector<int>& f);

// A witness for weight(d) - e_i: some member of BD(w) with that weight whose
// dead set is a strict subset of d's, ranks agreeing on it.  Requires
// weight(d) - e_i in supp(grothendieck(w)); throws NoWitness if the search
// fails (which would refute the underlying theorem).
BubblingDiagram remove_dead_check(const Permutation& w,
                                  const BubblingDiagram& d, int i);
BubblingDiagram remove_dead_check(const Permutation& w,
                                  const BubblingDiagram& d, int i,
                                  const std::set<BubblingDiagram>& bd);

std::string render_svg(const BubblingDiagram& d);

}  // namespace groth
