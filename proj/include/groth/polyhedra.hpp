#pragma once
#include <gmpxx.h>

#include <map>
#include <set>
#include <vector>

#include "groth/core.hpp"

namespace groth {

// A function 2^[n] -> Q tabulated over bitmasks; values[0] must be 0.
struct SetFunction {
  int n = 0;
  std::vector<mpq_class> values;  // size 2^n, indexed by subset mask

  explicit SetFunction(int nvars)
      : n(nvars), values(size_t{1} << nvars, mpq_class(0)) {}
  mpq_class& operator[](unsigned mask) { return values[mask]; }
  const mpq_class& operator[](unsigned mask) const { return values[mask]; }
};

using Point = std::vector<int>;

struct PointSet {
  int dim = 0;
  std::set<Point> points;
};

// Local criterion: z(I+a) + z(I+b) >= z(I+a+b) + z(I) for all I and a,b not
// in I.  Equivalent to the all-pairs inequality.
bool is_submodular(const SetFunction& z);

// z(I) = max over points of the sum of I-coordinates.
SetFunction z_from_points(const PointSet& p);

struct MConvexResult {
  bool ok = true;
  Point x, y;  // a violating pair when !ok
  int i = 0;   // the index with x_i > y_i admitting no exchange
};
// Exchange axiom, checked literally over all pairs of points.
MConvexResult m_convex_check(const PointSet& p);

// Integer points of { t : sum_{i in I} t_i <= z(I), sum t_i = z([n]) }.
// Requires z submodular.
PointSet lattice_points(const SetFunction& z);

// All nonempty subsets of [n] ordered by I < J iff max(I \ J) <= max(J \ I);
// coincides with increasing bitmask order.
std::vector<unsigned> vn_order(int n);

// Matrix (r_{SM_n(I)}(J)) with rows and columns in vn_order.
std::vector<std::vector<int>> a_matrix(int n);
// Exact determinant (Bareiss); n <= 8.
mpz_class a_matrix_det(int n);

// The unique coefficients c with z = sum_I c_I r_{SM_n(I)}, indexed by
// subset mask; all 2^n - 1 entries present.  n <= 10.
std::map<unsigned, mpq_class> basis_expansion(const SetFunction& z);

struct SchubitopeResult {
  bool ok = true;
  std::map<unsigned, mpq_class> expansion;  // nonzero coefficients only
};
// True iff every expansion coefficient is a nonnegative integer.  The
// all-zero expansion (empty diagram) counts as a Schubitope.
SchubitopeResult is_schubitope(const SetFunction& z);

// k-fold fill of the one-column diagram S toward the distinguished row s:
// each step adds the highest empty row below s.  Requires s in S and
// k <= d where d = s - #{i in S : i <= s}.
std::vector<int> column_fill(const std::vector<int>& s_rows, int s, int k);

// { (zeta^B, d - k) : B <= S^(k,s), 0 <= k <= d } in dimension n + 1.
PointSet lifted_column_points(const std::vector<int>& s_rows, int s, int n);

}  // namespace groth
