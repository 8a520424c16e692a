#pragma once
#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "groth/core.hpp"
#include "groth/poly.hpp"

namespace groth {

// SM_n(s_1 < ... < s_r): bases are the r-subsets {a_1 < ... < a_r} of [n]
// with a_i <= s_i.
struct SchubertMatroid {
  int n = 0;
  std::vector<int> gens;  // strictly increasing, nonempty, within [n]

  SchubertMatroid(int ground, std::vector<int> generators);
};

std::set<std::vector<int>> bases(const SchubertMatroid& m);
// max |J ∩ B| over bases B; J given as a bitmask over [n].
int rank_bruteforce(const SchubertMatroid& m, unsigned j_mask);

// Position k reads: '_' if k in neither set, '(' if only in J, ')' if only
// in I, '*' if in both.
std::string word(unsigned i_mask, unsigned j_mask, int n);
// Matched () pairs (left-to-right stack matching) plus stars; equals the
// Schubert matroid rank of J.
int theta(unsigned i_mask, unsigned j_mask, int n);

inline unsigned mask_of(const std::vector<int>& elems) {
  unsigned m = 0;
  for (int e : elems) m |= 1u << (e - 1);
  return m;
}
std::vector<int> mask_elems(unsigned mask);

// { wt(C) : C <= D columnwise }, vectors of length D.n.
std::set<std::vector<int>> schubitope_support(const Diagram& d);

// Monomials in the upper-triangular indeterminates y_{ij}, i <= j, as
// sorted (i,j)-multisets with rational coefficients.
using YMonomial = std::vector<std::pair<int, int>>;
using YPolynomial = std::map<YMonomial, mpq_class>;

// det of the submatrix of the generic upper-triangular Y on rows `rows`
// and columns `cols` (equal sizes, both ascending).
YPolynomial y_minor(const std::vector<int>& rows, const std::vector<int>& cols);

// Dual character of the flagged Weyl module of D: the coefficient of x^a is
// the dimension of span{ prod_j det(Y^{C_j}_{D_j}) : C <= D, wt(C) = a }.
MultiPoly dual_character(const Diagram& d, int bound = 6);

struct Conjecture1Result {
  bool ok = false;
  mpz_class multiple;     // the observed integer factor when ok
  Exponent disagreement;  // first weight breaking proportionality
};
// Tests whether the top component of the Grothendieck polynomial, signs
// stripped, is a single positive integer multiple of the dual character of
// the top diagram's cells.
Conjecture1Result conjecture1_check(const Permutation& w, int bound = 6);

}  // namespace groth
