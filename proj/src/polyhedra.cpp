#include "groth/polyhedra.hpp"

#include <algorithm>
#include <functional>

#include "groth/errors.hpp"
#include "groth/weyl.hpp"

namespace groth {

bool is_submodular(const SetFunction& z) {
  const unsigned full = (1u << z.n) - 1;
  for (unsigned i = 0; i <= full; ++i) {
    for (int a = 0; a < z.n; ++a) {
      if (i & (1u << a)) continue;
      for (int b = a + 1; b < z.n; ++b) {
        if (i & (1u << b)) continue;
        if (z[i | (1u << a)] + z[i | (1u << b)] <
            z[i | (1u << a) | (1u << b)] + z[i])
          return false;
      }
    }
  }
  return true;
}

SetFunction z_from_points(const PointSet& p) {
  if (p.points.empty()) throw std::invalid_argument("empty point set");
  SetFunction z(p.dim);
  for (unsigned mask = 1; mask < (1u << p.dim); ++mask) {
    bool first = true;
    mpq_class best;
    for (const Point& pt : p.points) {
      long s = 0;
      for (int i = 0; i < p.dim; ++i)
        if (mask & (1u << i)) s += pt[i];
      if (first || s > best) best = s, first = false;
    }
    z[mask] = best;
  }
  return z;
}

MConvexResult m_convex_check(const PointSet& p) {
  if (p.points.empty()) return {};
  long sum0 = 0;
  for (int v : *p.points.begin()) sum0 += v;
  for (const Point& x : p.points) {
    long s = 0;
    for (int v : x) s += v;
    if (s != sum0) return {false, x, *p.points.begin(), 0};
  }
  for (const Point& x : p.points)
    for (const Point& y : p.points)
      for (int i = 0; i < p.dim; ++i) {
        if (x[i] <= y[i]) continue;
        bool exchanged = false;
        for (int j = 0; j < p.dim && !exchanged; ++j) {
          if (y[j] <= x[j]) continue;
          Point xe = x, ye = y;
          --xe[i], ++xe[j];
          ++ye[i], --ye[j];
          exchanged = p.points.count(xe) && p.points.count(ye);
        }
        if (!exchanged) return {false, x, y, i + 1};
      }
  return {};
}

namespace {

long q_floor(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long q_ceil(const mpq_class& q) {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c.get_si();
}

}  // namespace

PointSet lattice_points(const SetFunction& z) {
  if (!is_submodular(z))
    throw std::invalid_argument("set function is not submodular");
  const int n = z.n;
  const unsigned full = (1u << n) - 1;
  PointSet out{n, {}};
  if (z[full].get_den() != 1) return out;  // fractional total: no points
  std::vector<long> lo(n), hi(n), t(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = q_ceil(z[full] - z[full ^ (1u << i)]);
    hi[i] = q_floor(z[1u << i]);
  }
  std::vector<mpq_class> sums(1u << n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.points.insert(Point(t.begin(), t.end()));
      return;
    }
    for (long v = lo[i]; v <= hi[i]; ++v) {
      // last coordinate is forced by the total-sum equality
      if (i == n - 1 && sums[full >> 1] + v != z[full]) continue;
      t[i] = v;
      bool ok = true;
      const unsigned bit = 1u << i, below = bit - 1;
      for (unsigned sub = 0; sub <= below && ok; ++sub) {
        sums[sub | bit] = sums[sub] + v;
        if (sums[sub | bit] > z[sub | bit]) ok = false;
      }
      if (ok) rec(i + 1);
    }
  };
  if (n > 0) rec(0);
  return out;
}

std::vector<unsigned> vn_order(int n) {
  // The pairwise rule max(I\J) <= max(J\I) linearizes to plain numeric
  // order on bitmasks.
  std::vector<unsigned> out;
  for (unsigned m = 1; m < (1u << n); ++m) out.push_back(m);
  return out;
}

std::vector<std::vector<int>> a_matrix(int n) {
  if (n > 10) throw BoundExceeded("basis matrix limited to n <= 10");
  const std::vector<unsigned> order = vn_order(n);
  std::vector<std::vector<int>> a(order.size(),
                                  std::vector<int>(order.size()));
  for (size_t r = 0; r < order.size(); ++r)
    for (size_t c = 0; c < order.size(); ++c)
      a[r][c] = theta(order[r], order[c], n);
  return a;
}

mpz_class a_matrix_det(int n) {
  if (n > 8) throw BoundExceeded("determinant limited to n <= 8");
  auto a = a_matrix(n);
  const int m = static_cast<int>(a.size());
  std::vector<std::vector<mpz_class>> b(m, std::vector<mpz_class>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b[i][j] = a[i][j];
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (b[k][k] == 0) {
      int p = k + 1;
      while (p < m && b[p][k] == 0) ++p;
      if (p == m) return 0;
      std::swap(b[k], b[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i)
      for (int j = k + 1; j < m; ++j) {
        b[i][j] = (b[i][j] * b[k][k] - b[i][k] * b[k][j]) / prev;
      }
    prev = b[k][k];
  }
  return sign * b[m - 1][m - 1];
}

namespace {

// J is independent in SM_{n}(I) iff |J| <= |I| and the k-th largest element
// of J is at most the k-th largest element of I, for every k.
bool independent_in(unsigned j_mask, unsigned i_mask) {
  if (j_mask == 0) return true;
  int jt = 31, it = 31;
  while (j_mask) {
    while (jt >= 0 && !(j_mask & (1u << jt))) --jt;
    while (it >= 0 && !(i_mask & (1u << it))) --it;
    if (it < 0 || jt > it) return false;
    j_mask &= ~(1u << jt);
    i_mask &= ~(1u << it);
  }
  return true;
}

// Coefficients over nonempty subsets of [n] with sum c_I r_{SM_n(I)} = z.
std::map<unsigned, mpq_class> expand(int n,
                                     const std::vector<mpq_class>& z) {
  std::map<unsigned, mpq_class> c;
  if (n == 1) {
    c[1] = z[1];
    return c;
  }
  const unsigned topbit = 1u << (n - 1);
  const unsigned sub_full = topbit - 1;  // [n-1] as a mask
  const mpq_class total = z[topbit];     // z({n}) = sum of a_I'

  // s_{I'} = c_{I' u {n}} + c_{I'} solves the restriction to sets
  // containing n, shifted by the constant total.
  std::vector<mpq_class> zs(topbit, 0);
  for (unsigned jp = 1; jp <= sub_full; ++jp)
    zs[jp] = z[jp | topbit] - total;
  std::map<unsigned, mpq_class> s = expand(n - 1, zs);

  // g(J) collects the a_{I'} over the I' in which J is independent;
  // solve triangularly from the largest mask down.
  std::map<unsigned, mpq_class> a;
  mpq_class a_sum = 0;
  for (unsigned j = sub_full; j >= 1; --j) {
    mpq_class g = total - z[j];
    for (const auto& [ip, sv] : s) g += sv * theta(ip, j, n - 1);
    for (const auto& [ip, av] : a)
      if (ip != j && independent_in(j, ip)) g -= av;
    a[j] = g;
    a_sum += g;
  }
  a[0] = total - a_sum;

  for (const auto& [ip, av] : a)
    if (!(ip == 0 && av == 0)) c[ip | topbit] = av;
  for (const auto& [ip, sv] : s) {
    const mpq_class b = sv - a[ip];
    if (b != 0) c[ip] = b;
  }
  // fill the zero coefficients so the result indexes all of V_n
  for (unsigned m = 1; m < (1u << n); ++m)
    if (!c.count(m)) c[m] = 0;
  return c;
}

}  // namespace

std::map<unsigned, mpq_class> basis_expansion(const SetFunction& z) {
  if (z.n > 10) throw BoundExceeded("basis expansion limited to n <= 10");
  if (z.values[0] != 0)
    throw std::invalid_argument("set function must vanish on the empty set");
  std::map<unsigned, mpq_class> c = expand(z.n, z.values);
  // the linear system is known nonsingular; a residual is a logic error
  for (unsigned j = 1; j < (1u << z.n); ++j) {
    mpq_class acc = 0;
    for (const auto& [i, ci] : c)
      if (ci != 0) acc += ci * theta(i, j, z.n);
    if (acc != z[j]) throw std::logic_error("expansion residual nonzero");
  }
  return c;
}

SchubitopeResult is_schubitope(const SetFunction& z) {
  if (!is_submodular(z))
    throw std::invalid_argument("set function is not submodular");
  SchubitopeResult out;
  for (auto& [i, ci] : basis_expansion(z)) {
    if (ci == 0) continue;
    out.expansion[i] = ci;
    if (ci < 0 || ci.get_den() != 1) out.ok = false;
  }
  return out;
}

std::vector<int> column_fill(const std::vector<int>& s_rows, int s, int k) {
  if (!std::count(s_rows.begin(), s_rows.end(), s))
    throw std::invalid_argument("distinguished row not in the column");
  const int below =
      static_cast<int>(std::count_if(s_rows.begin(), s_rows.end(),
                                     [s](int i) { return i <= s; }));
  if (k > s - below) throw std::invalid_argument("fill count exceeds room");
  std::set<int> rows(s_rows.begin(), s_rows.end());
  for (int t = 0; t < k; ++t) {
    int add = 0;
    for (int i = s - 1; i >= 1; --i)
      if (!rows.count(i)) {
        add = i;
        break;
      }
    rows.insert(add);
  }
  return std::vector<int>(rows.begin(), rows.end());
}

namespace {

void dominated_subsets(const std::vector<int>& gens, int idx, int min_val,
                       std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& f) {
  if (idx == static_cast<int>(gens.size())) {
    f(cur);
    return;
  }
  for (int v = min_val; v <= gens[idx]; ++v) {
    cur.push_back(v);
    dominated_subsets(gens, idx + 1, v + 1, cur, f);
    cur.pop_back();
  }
}

}  // namespace

PointSet lifted_column_points(const std::vector<int>& s_rows, int s, int n) {
  const int below =
      static_cast<int>(std::count_if(s_rows.begin(), s_rows.end(),
                                     [s](int i) { return i <= s; }));
  const int d = s - below;
  PointSet out{n + 1, {}};
  for (int k = 0; k <= d; ++k) {
    const std::vector<int> filled = column_fill(s_rows, s, k);
    std::vector<int> cur;
    dominated_subsets(filled, 0, 1, cur, [&](const std::vector<int>& b) {
      Point p(n + 1, 0);
      for (int e : b) p[e - 1] = 1;
      p[n] = d - k;
      out.points.insert(p);
    });
  }
  return out;
}

}  // namespace groth
