#include "groth/weyl.hpp"

#include <algorithm>
#include <functional>

#include "groth/bubbling.hpp"

namespace groth {

SchubertMatroid::SchubertMatroid(int ground, std::vector<int> generators)
    : n(ground), gens(std::move(generators)) {
  if (gens.empty()) throw std::invalid_argument("empty generator set");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] < 1 || gens[i] > n)
      throw std::invalid_argument("generator outside the ground set");
    if (i > 0 && gens[i] <= gens[i - 1])
      throw std::invalid_argument("generators must strictly increase");
  }
}

std::set<std::vector<int>> bases(const SchubertMatroid& m) {
  std::set<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int idx, int min_val) {
    if (idx == static_cast<int>(m.gens.size())) {
      out.insert(cur);
      return;
    }
    for (int v = min_val; v <= m.gens[idx]; ++v) {
      cur.push_back(v);
      rec(idx + 1, v + 1);
      cur.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

int rank_bruteforce(const SchubertMatroid& m, unsigned j_mask) {
  int best = 0;
  for (const std::vector<int>& b : bases(m)) {
    int hit = 0;
    for (int e : b)
      if (j_mask & (1u << (e - 1))) ++hit;
    best = std::max(best, hit);
  }
  return best;
}

std::string word(unsigned i_mask, unsigned j_mask, int n) {
  std::string out(n, '_');
  for (int k = 0; k < n; ++k) {
    const bool in_i = i_mask & (1u << k), in_j = j_mask & (1u << k);
    if (in_i && in_j)
      out[k] = '*';
    else if (in_i)
      out[k] = ')';
    else if (in_j)
      out[k] = '(';
  }
  return out;
}

int theta(unsigned i_mask, unsigned j_mask, int n) {
  int open = 0, matched = 0, stars = 0;
  for (int k = 0; k < n; ++k) {
    const bool in_i = i_mask & (1u << k), in_j = j_mask & (1u << k);
    if (in_i && in_j)
      ++stars;
    else if (in_j)
      ++open;
    else if (in_i && open > 0)
      --open, ++matched;
  }
  return matched + stars;
}

std::vector<int> mask_elems(unsigned mask) {
  std::vector<int> out;
  for (int k = 0; mask >> k; ++k)
    if (mask & (1u << k)) out.push_back(k + 1);
  return out;
}

namespace {

// All columns C_j <= D_j, one choice function at a time.
void for_each_dominated(
    const Diagram& d,
    const std::function<void(const std::vector<std::vector<int>>&)>& f) {
  std::vector<std::vector<int>> cols(d.k);
  std::function<void(int)> rec = [&](int j) {
    if (j > d.k) {
      f(cols);
      return;
    }
    const std::vector<int> dj = d.column(j);
    if (dj.empty()) {
      rec(j + 1);
      return;
    }
    std::vector<int> cur;
    std::function<void(int, int)> pick = [&](int idx, int min_val) {
      if (idx == static_cast<int>(dj.size())) {
        cols[j - 1] = cur;
        rec(j + 1);
        return;
      }
      for (int v = min_val; v <= dj[idx]; ++v) {
        cur.push_back(v);
        pick(idx + 1, v + 1);
        cur.pop_back();
      }
    };
    pick(0, 1);
  };
  rec(1);
}

}  // namespace

std::set<std::vector<int>> schubitope_support(const Diagram& d) {
  std::set<std::vector<int>> out;
  for_each_dominated(d, [&](const std::vector<std::vector<int>>& cols) {
    std::vector<int> wt(d.n, 0);
    for (const auto& col : cols)
      for (int r : col) ++wt[r - 1];
    out.insert(wt);
  });
  return out;
}

YPolynomial y_minor(const std::vector<int>& rows,
                    const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor must be square");
  const int m = static_cast<int>(rows.size());
  YPolynomial out;
  std::vector<char> used(m, 0);
  YMonomial term;
  // permutation DFS; upper-triangularity prunes rows[i] > cols[sigma(i)]
  std::function<void(int, int)> rec = [&](int i, int sign) {
    if (i == m) {
      YMonomial key = term;
      std::sort(key.begin(), key.end());
      out[key] += sign;
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c] || rows[i] > cols[c]) continue;
      used[c] = 1;
      term.push_back({rows[i], cols[c]});
      rec(i + 1, (i - c) % 2 ? -sign : sign);
      term.pop_back();
      used[c] = 0;
    }
  };
  rec(0, 1);
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

namespace {

YPolynomial y_multiply(const YPolynomial& a, const YPolynomial& b) {
  YPolynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      YMonomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      std::sort(m.begin(), m.end());
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Dimension of the span of the given vectors, by exact elimination.
int rational_rank(std::vector<YPolynomial> vecs) {
  int rank = 0;
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (vecs[i].empty()) continue;
    ++rank;
    const YMonomial pivot = vecs[i].begin()->first;
    const mpq_class lead = vecs[i].begin()->second;
    for (size_t t = i + 1; t < vecs.size(); ++t) {
      auto hit = vecs[t].find(pivot);
      if (hit == vecs[t].end()) continue;
      const mpq_class factor = hit->second / lead;
      for (const auto& [m, c] : vecs[i]) {
        mpq_class& slot = vecs[t][m];
        slot -= factor * c;
        if (slot == 0) vecs[t].erase(m);
      }
    }
  }
  return rank;
}

}  // namespace

MultiPoly dual_character(const Diagram& d, int bound) {
  if (d.n > bound)
    throw BoundExceeded("dual character limited to " + std::to_string(bound) +
                        " rows");
  std::map<std::vector<int>, std::vector<YPolynomial>> classes;
  for_each_dominated(d, [&](const std::vector<std::vector<int>>& cols) {
    std::vector<int> wt(d.n, 0);
    YPolynomial prod{{{}, 1}};
    for (int j = 1; j <= d.k; ++j) {
      const auto& c = cols[j - 1];
      if (c.empty()) continue;
      for (int r : c) ++wt[r - 1];
      prod = y_multiply(prod, y_minor(c, d.column(j)));
    }
    classes[wt].push_back(std::move(prod));
  });
  MultiPoly out(d.n);
  for (auto& [wt, vecs] : classes) {
    const int dim = rational_rank(std::move(vecs));
    if (dim > 0) out.add_term(wt, dim);
  }
  return out;
}

Conjecture1Result conjecture1_check(const Permutation& w, int bound) {
  if (!w.is_vexillary())
    throw std::invalid_argument("vexillary permutation required");
  const MultiPoly& g = grothendieck(w);
  MultiPoly top = top_component(g);
  if ((top.degree() - w.length()) % 2 != 0) top = top.scaled(-1);
  const MultiPoly chi = dual_character(d_top(w).cells(), bound);

  Conjecture1Result res;
  for (const Exponent& e : chi.support())
    if (!top.coeff(e)) {
      res.disagreement = e;
      return res;
    }
  bool first = true;
  mpz_class m;
  for (const auto& [e, c] : top.sorted_terms()) {
    const mpz_class* cc = chi.coeff(e);
    if (!cc) {
      res.disagreement = e;
      return res;
    }
    mpz_class q = c / *cc;
    if (q * *cc != c || q <= 0) {
      res.disagreement = e;
      return res;
    }
    if (first)
      m = q, first = false;
    else if (q != m) {
      res.disagreement = e;
      return res;
    }
  }
  res.ok = true;
  res.multiple = first ? 1 : m;
  return res;
}

}  // namespace groth
