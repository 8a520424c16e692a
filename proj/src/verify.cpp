#include "groth/verify.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "groth/bpd.hpp"
#include "groth/bubbling.hpp"
#include "groth/json_io.hpp"
#include "groth/poly.hpp"
#include "groth/polyhedra.hpp"
#include "groth/weyl.hpp"

#ifndef GROTH_GOLDEN_DIR
#define GROTH_GOLDEN_DIR "golden"
#endif

namespace groth {

namespace {

int worker_count(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Applies fn to every item; returns the first (by input order) nonempty
// failure string, or "" when everything passes.
template <class Item>
std::string first_failure(const std::vector<Item>& items,
                          const std::function<std::string(const Item&)>& fn,
                          int jobs) {
  std::vector<std::string> results(items.size());
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < items.size(); i = next++) {
      try {
        results[i] = fn(items[i]);
      } catch (const std::exception& e) {
        results[i] = std::string("{\"exception\":\"") + e.what() + "\"}";
      }
    }
  };
  const int nw = std::min<int>(worker_count(jobs),
                               std::max<size_t>(items.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 1; t < nw; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const std::string& r : results)
    if (!r.empty()) return r;
  return "";
}

std::vector<Permutation> vexillary_perms(int n) {
  std::vector<Permutation> out;
  for (const Permutation& w : all_permutations(n))
    if (w.is_vexillary()) out.push_back(w);
  return out;
}

VerificationReport timed(const std::string& check, const std::string& range,
                         const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep{check, range, true, "", 0};
  try {
    rep.counterexample = body();
  } catch (const std::exception& e) {
    rep.counterexample = std::string("{\"exception\":\"") + e.what() + "\"}";
  }
  rep.pass = rep.counterexample.empty();
  rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rep;
}

std::string fail_w(const Permutation& w, const std::string& what) {
  return "{\"w\":\"" + w.to_string() + "\",\"reason\":\"" + what + "\"}";
}

std::set<std::vector<int>> support_vectors(const MultiPoly& p) {
  std::set<std::vector<int>> out;
  for (const Exponent& e : p.support()) out.insert(e);
  return out;
}

std::set<std::vector<int>> bd_weights(const std::set<BubblingDiagram>& bd) {
  std::set<std::vector<int>> out;
  for (const BubblingDiagram& d : bd) out.insert(weight(d));
  return out;
}

// ---- suite bodies ----------------------------------------------------

std::string check_theorem1(const Permutation& w) {
  const auto bd = enumerate_bd(rothe_bubbling(w));
  if (bd_weights(bd) != support_vectors(grothendieck(w)))
    return fail_w(w, "BD weights differ from the support");
  return "";
}

std::string check_theorem2(const Permutation& w) {
  const auto lhs = support_vectors(top_component(grothendieck(w)));
  const auto rhs = schubitope_support(d_top(w).cells());
  if (lhs != rhs) return fail_w(w, "top support differs from Schubitope");
  return "";
}

std::string m_convex_snp(const PointSet& pts) {
  if (pts.points.empty()) return "empty support";
  if (!m_convex_check(pts).ok) return "support not M-convex";
  const SetFunction z = z_from_points(pts);
  if (!is_submodular(z)) return "support function not submodular";
  if (lattice_points(z).points != pts.points)
    return "support misses lattice points of its polytope";
  return "";
}

std::string check_theorem3(const Permutation& w) {
  const MultiPoly& g = grothendieck(w);
  const MultiPoly gh = homogenize(g);
  PointSet lifted{gh.nvars(), {}};
  for (const Exponent& e : gh.support()) lifted.points.insert(e);
  if (std::string r = m_convex_snp(lifted); !r.empty())
    return fail_w(w, "homogenized polynomial: " + r);
  for (int d = g.min_degree(); d <= g.degree(); ++d) {
    PointSet comp{g.nvars(), {}};
    for (const Exponent& e : homogeneous_component(g, d).support())
      comp.points.insert(e);
    if (std::string r = m_convex_snp(comp); !r.empty())
      return fail_w(w, "degree " + std::to_string(d) + " component: " + r);
  }
  return "";
}

std::string check_theorem4(int n, std::mt19937& rng) {
  const std::vector<unsigned> order = vn_order(n);
  // rows of A_n expand as unit vectors
  for (unsigned i0 : order) {
    SetFunction z(n);
    for (unsigned j = 1; j < (1u << n); ++j) z[j] = theta(i0, j, n);
    for (const auto& [i, c] : basis_expansion(z))
      if (c != (i == i0 ? 1 : 0))
        return "{\"row\":" + std::to_string(i0) + "}";
  }
  // random nonnegative combinations round-trip
  std::uniform_int_distribution<int> coef(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<unsigned, int> want;
    SetFunction z(n);
    for (unsigned i : order) {
      const int c = coef(rng);
      if (c == 0) continue;
      want[i] = c;
      for (unsigned j = 1; j < (1u << n); ++j)
        z[j] += c * theta(i, j, n);
    }
    for (const auto& [i, c] : basis_expansion(z))
      if (c != (want.count(i) ? want[i] : 0))
        return "{\"trial\":" + std::to_string(trial) + "}";
  }
  return "";
}

// every diagram dominated columnwise by `top`, as cell sets
void dominated_diagrams(const Diagram& top,
                        std::set<std::set<Cell>>& out) {
  std::vector<std::vector<std::vector<int>>> choices(top.k);
  for (int j = 1; j <= top.k; ++j) {
    const std::vector<int> col = top.column(j);
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int idx, int min_val) {
      if (idx == static_cast<int>(col.size())) {
        choices[j - 1].push_back(cur);
        return;
      }
      for (int v = min_val; v <= col[idx]; ++v) {
        cur.push_back(v);
        rec(idx + 1, v + 1);
        cur.pop_back();
      }
    };
    rec(0, 1);
  }
  std::set<Cell> cells;
  std::function<void(int)> build = [&](int j) {
    if (j > top.k) {
      out.insert(cells);
      return;
    }
    for (const auto& col : choices[j - 1]) {
      for (int r : col) cells.insert({r, j});
      build(j + 1);
      for (int r : col) cells.erase({r, j});
    }
  };
  build(1);
}

std::string check_sbd(const Permutation& w) {
  const auto bd = enumerate_bd(rothe_bubbling(w));
  const auto sbd = enumerate_sbd(w);
  for (const BubblingDiagram& d : sbd)
    if (!bd.count(d)) return fail_w(w, "SBD member outside BD");
  if (bd_weights(sbd) != bd_weights(bd))
    return fail_w(w, "SBD weight set differs from BD weight set");
  // explicit description: cell sets are the diagrams below some D^f
  std::set<std::set<Cell>> lhs;
  for (const BubblingDiagram& d : sbd) lhs.insert(d.cells().cells);
  const std::vector<int> ft = f_top(w);
  std::set<std::set<Cell>> rhs;
  std::vector<int> f(ft.size(), 0);
  std::function<void(size_t)> sweep = [&](size_t j) {
    if (j == ft.size()) {
      dominated_diagrams(d_f(w, f), rhs);
      return;
    }
    for (f[j] = 0; f[j] <= ft[j]; ++f[j]) sweep(j + 1);
    f[j] = 0;
  };
  sweep(0);
  if (lhs != rhs) return fail_w(w, "explicit SBD description mismatch");
  return "";
}

std::string check_removedead(const Permutation& w) {
  const auto bd = enumerate_bd(rothe_bubbling(w));
  const auto supp = grothendieck(w).support();
  for (const BubblingDiagram& d : bd) {
    const std::vector<int> wt = weight(d);
    for (int i = 1; i <= d.n; ++i) {
      if (wt[i - 1] == 0) continue;
      Exponent e(wt);
      --e[i - 1];
      if (!supp.count(e)) continue;
      try {
        remove_dead_check(w, d, i, bd);
      } catch (const NoWitness&) {
        return fail_w(w, "no witness for row " + std::to_string(i));
      }
    }
  }
  return "";
}

std::vector<std::vector<int>> parse_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<int>> rows;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (header) {  // skip the subset-label header row
      header = false;
      continue;
    }
    std::vector<int> row;
    bool quoted = false, first = true;
    std::string field;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        if (!first) row.push_back(std::stoi(field));
        first = false;
        field.clear();
      } else {
        field += ch;
      }
    }
    if (!field.empty()) row.push_back(std::stoi(field));
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

std::string check_matrices_golden() {
  const std::string dir = std::string(GROTH_GOLDEN_DIR) + "/v1/";
  for (int n : {3, 4}) {
    const auto want = parse_matrix_csv(dir + "a" + std::to_string(n) + ".csv");
    const auto got = a_matrix(n);
    if (want != got) return "{\"matrix\":\"A" + std::to_string(n) + "\"}";
  }
  return "";
}

std::string check_dets(int nmax) {
  for (int n = 1; n <= nmax; ++n)
    if (a_matrix_det(n) != 1) return "{\"n\":" + std::to_string(n) + "}";
  return "";
}

std::string check_theta_exhaustive(int n) {
  for (unsigned i = 1; i < (1u << n); ++i) {
    const SchubertMatroid m(n, mask_elems(i));
    for (unsigned j = 0; j < (1u << n); ++j)
      if (theta(i, j, n) != rank_bruteforce(m, j))
        return "{\"n\":" + std::to_string(n) + ",\"I\":" + std::to_string(i) +
               ",\"J\":" + std::to_string(j) + "}";
  }
  return "";
}

std::string check_theta_random(std::mt19937& rng, int trials) {
  std::uniform_int_distribution<int> pick_n(7, 12);
  for (int t = 0; t < trials; ++t) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<unsigned> mask(0, (1u << n) - 1);
    unsigned i = mask(rng);
    if (i == 0) i = 1;
    const unsigned j = mask(rng);
    if (theta(i, j, n) != rank_bruteforce(SchubertMatroid(n, mask_elems(i)), j))
      return "{\"n\":" + std::to_string(n) + ",\"I\":" + std::to_string(i) +
             ",\"J\":" + std::to_string(j) + "}";
  }
  return "";
}

// the five shift identities relating SM_n to SM_{n-1} ranks
std::string check_rank_shift_identities(int n) {
  const unsigned topbit = 1u << (n - 1);
  auto r = [n](unsigned i, unsigned j) { return theta(i, j, n); };
  for (unsigned i = 1; i < (1u << n); ++i)
    for (unsigned j = 1; j < (1u << n); ++j) {
      const bool ni = i & topbit, nj = j & topbit;
      std::string tag;
      if (!ni && !nj && theta(i, j, n) != theta(i, j, n - 1)) tag = "1";
      if (!ni && nj && r(i, j) != r(i, j ^ topbit)) tag = "2";
      if (ni && nj && (i ^ topbit) != 0 &&
          r(i, j) != r(i ^ topbit, j ^ topbit) + 1)
        tag = "3";
      if (ni && !nj && (i ^ topbit) != 0) {
        const unsigned ip = i ^ topbit;
        // V_n order: I' < J iff max(I'\J) < max(J\I')
        const unsigned only_i = ip & ~j, only_j = j & ~ip;
        const bool prec = only_i == 0 ? only_j != 0
                                      : only_j != 0 &&
                                            (31 - __builtin_clz(only_i)) <
                                                (31 - __builtin_clz(only_j));
        if (prec && r(i, j) != r(ip, j) + 1) tag = "4";
      }
      if (ni && (i ^ topbit) != 0 && j == (i ^ topbit) &&
          r(i, j) != r(i ^ topbit, j))
        tag = "5";
      if (!tag.empty())
        return "{\"item\":" + tag + ",\"n\":" + std::to_string(n) +
               ",\"I\":" + std::to_string(i) + ",\"J\":" + std::to_string(j) +
               "}";
    }
  return "";
}

std::string check_column_fills(int n) {
  for (unsigned s_mask = 1; s_mask < (1u << n); ++s_mask) {
    const std::vector<int> rows = mask_elems(s_mask);
    for (int s : rows) {
      int below = 0;
      for (int i : rows)
        if (i <= s) ++below;
      const int d = s - below;
      const unsigned full_mask = mask_of(column_fill(rows, s, d));
      for (int k = 0; k <= d; ++k) {
        const unsigned k_mask = mask_of(column_fill(rows, s, k));
        for (unsigned i = 0; i < (1u << n); ++i) {
          const int want =
              std::min(theta(full_mask, i, n), theta(s_mask, i, n) + k);
          if (theta(k_mask, i, n) != want)
            return "{\"S\":" + std::to_string(s_mask) +
                   ",\"s\":" + std::to_string(s) +
                   ",\"k\":" + std::to_string(k) + "}";
          if (k < d) {
            const unsigned next = mask_of(column_fill(rows, s, k + 1));
            const int step = theta(next, i, n) - theta(k_mask, i, n);
            if (step < 0 || step > 1)
              return "{\"S\":" + std::to_string(s_mask) +
                     ",\"step\":" + std::to_string(step) + "}";
          }
        }
      }
    }
  }
  return "";
}

std::string check_lifted_points(int n, std::mt19937& rng, int trials) {
  std::uniform_int_distribution<unsigned> mask(1, (1u << n) - 1);
  for (int t = 0; t < trials; ++t) {
    const unsigned s_mask = mask(rng);
    const std::vector<int> rows = mask_elems(s_mask);
    std::uniform_int_distribution<size_t> pick(0, rows.size() - 1);
    const int s = rows[pick(rng)];
    int below = 0;
    for (int i : rows)
      if (i <= s) ++below;
    const int d = s - below;
    const PointSet pts = lifted_column_points(rows, s, n);
    if (!m_convex_check(pts).ok)
      return "{\"S\":" + std::to_string(s_mask) + ",\"fail\":\"mconvex\"}";
    const unsigned full_mask = mask_of(column_fill(rows, s, d));
    SetFunction z(n + 1);
    for (unsigned i = 1; i < (1u << (n + 1)); ++i) {
      if (i & (1u << n))
        z[i] = theta(s_mask, i & ~(1u << n), n) + d;
      else
        z[i] = theta(full_mask, i, n);
    }
    if (!is_submodular(z))
      return "{\"S\":" + std::to_string(s_mask) + ",\"fail\":\"submod\"}";
    if (lattice_points(z).points != pts.points)
      return "{\"S\":" + std::to_string(s_mask) + ",\"fail\":\"points\"}";
  }
  return "";
}

SetFunction z_of_component(const MultiPoly& comp) {
  PointSet pts{comp.nvars(), {}};
  for (const Exponent& e : comp.support()) pts.points.insert(e);
  return z_from_points(pts);
}

std::string check_expansion(const SetFunction& z,
                            const std::map<unsigned, mpq_class>& want) {
  if (!is_submodular(z)) return "not submodular";
  for (const auto& [i, c] : basis_expansion(z)) {
    const auto hit = want.find(i);
    const mpq_class expect = hit == want.end() ? 0 : hit->second;
    if (c != expect) return "coefficient mismatch at mask " + std::to_string(i);
  }
  if (is_schubitope(z).ok) return "expected a non-Schubitope";
  return "";
}

std::string check_counterexamples(const std::string& cache_dir) {
  {  // S5: the component of degree length+1
    const Permutation w = Permutation::parse("14253");
    const SetFunction z = z_of_component(
        homogeneous_component(grothendieck(w), w.length() + 1));
    const std::map<unsigned, mpq_class> want{
        {mask_of({1, 2}), 1},
        {mask_of({2, 4}), 1},
        {mask_of({1, 2, 4}), -1},
        {mask_of({2, 3, 4}), 1}};
    if (std::string r = check_expansion(z, want); !r.empty())
      return "{\"case\":\"14253\",\"reason\":\"" + r + "\"}";
  }
  {  // S10: the top component
    const Permutation w = Permutation::parse("2168534(10)79");
    if (!cache_dir.empty()) cache_load(cache_dir, w);
    const MultiPoly& g = grothendieck(w);
    if (!cache_dir.empty()) cache_store(cache_dir, w, g);
    const SetFunction z = z_of_component(top_component(g));
    const std::map<unsigned, mpq_class> want{
        {mask_of({1}), 1},
        {mask_of({2, 3, 4}), -1},
        {mask_of({1, 2, 3, 4}), 2},
        {mask_of({3, 4, 5}), 1},
        {mask_of({1, 2, 3, 4, 5}), 1},
        {mask_of({2, 3, 4, 8}), 1},
        {mask_of({1, 2, 3, 4, 5, 6, 7, 8}), 1}};
    if (std::string r = check_expansion(z, want); !r.empty())
      return "{\"case\":\"2168534(10)79\",\"reason\":\"" + r + "\"}";
  }
  return "";
}

std::string check_conjecture1(const Permutation& w) {
  const Conjecture1Result res = conjecture1_check(w);
  if (!res.ok) return fail_w(w, "not an integer multiple");
  return "";
}

using PermCheck = std::string (*)(const Permutation&);

std::vector<VerificationReport> per_perm_suite(const std::string& name,
                                               int nmax, int jobs,
                                               PermCheck check,
                                               bool vexillary_only = true) {
  std::vector<VerificationReport> out;
  for (int n = 1; n <= nmax; ++n) {
    out.push_back(timed(name, "S" + std::to_string(n), [&] {
      const std::vector<Permutation> perms =
          vexillary_only ? vexillary_perms(n) : all_permutations(n);
      return first_failure<Permutation>(perms, check, jobs);
    }));
  }
  return out;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"theorem1",  "theorem2", "theorem3",        "theorem4",
          "sbd",       "removedead", "matrices",      "onecolumn",
          "counterexamples", "conjecture1"};
}

std::vector<VerificationReport> run_suite(const std::string& suite, int nmax,
                                          int jobs,
                                          const std::string& cache_dir) {
  std::mt19937 rng(20240816);
  std::vector<VerificationReport> out;
  if (suite == "theorem1")
    return per_perm_suite("theorem1", nmax > 0 ? nmax : 6, jobs,
                          check_theorem1);
  if (suite == "theorem2")
    return per_perm_suite("theorem2", nmax > 0 ? nmax : 6, jobs,
                          check_theorem2);
  if (suite == "theorem3")
    return per_perm_suite("theorem3", nmax > 0 ? nmax : 6, jobs,
                          check_theorem3);
  if (suite == "theorem4") {
    const int top = std::min(nmax > 0 ? nmax : 6, 8);
    for (int n = 1; n <= top; ++n)
      out.push_back(timed("theorem4", "n=" + std::to_string(n),
                          [&] { return check_theorem4(n, rng); }));
    return out;
  }
  if (suite == "sbd")
    return per_perm_suite("sbd", nmax > 0 ? nmax : 5, jobs, check_sbd);
  if (suite == "removedead")
    return per_perm_suite("removedead", nmax > 0 ? nmax : 5, jobs,
                          check_removedead);
  if (suite == "matrices") {
    out.push_back(timed("matrices.golden", "A3,A4", check_matrices_golden));
    const int top = std::min(nmax > 0 ? nmax : 8, 8);
    out.push_back(timed("matrices.det", "n<=" + std::to_string(top),
                        [&] { return check_dets(top); }));
    return out;
  }
  if (suite == "onecolumn") {
    const int top = std::min(nmax > 0 ? nmax : 7, 7);
    out.push_back(timed("onecolumn.theta", "exhaustive n<=6", [&] {
      for (int n = 1; n <= 6; ++n)
        if (std::string r = check_theta_exhaustive(n); !r.empty()) return r;
      return std::string();
    }));
    out.push_back(timed("onecolumn.theta", "random n<=12",
                        [&] { return check_theta_random(rng, 10000); }));
    out.push_back(timed("onecolumn.rankshift",
                        "exhaustive n<=" + std::to_string(top), [&] {
                          for (int n = 2; n <= top; ++n)
                            if (std::string r = check_rank_shift_identities(n);
                                !r.empty())
                              return r;
                          return std::string();
                        }));
    out.push_back(timed("onecolumn.fills",
                        "exhaustive n<=" + std::to_string(top), [&] {
                          for (int n = 1; n <= top; ++n)
                            if (std::string r = check_column_fills(n);
                                !r.empty())
                              return r;
                          return std::string();
                        }));
    out.push_back(timed("onecolumn.lifted", "random n<=7", [&] {
      for (int n = 2; n <= std::min(top, 7); ++n)
        if (std::string r = check_lifted_points(n, rng, 20); !r.empty())
          return r;
      return std::string();
    }));
    return out;
  }
  if (suite == "counterexamples") {
    out.push_back(timed("counterexamples", "14253, 2168534(10)79",
                        [&] { return check_counterexamples(cache_dir); }));
    return out;
  }
  if (suite == "conjecture1")
    return per_perm_suite("conjecture1", nmax > 0 ? nmax : 5, jobs,
                          check_conjecture1);
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string a_matrix_csv(int n) {
  const std::vector<unsigned> order = vn_order(n);
  auto label = [](unsigned mask) {
    std::string s = "\"{";
    bool first = true;
    for (int k = 0; mask >> k; ++k)
      if (mask & (1u << k)) {
        if (!first) s += ",";
        s += std::to_string(k + 1);
        first = false;
      }
    return s + "}\"";
  };
  std::ostringstream csv;
  csv << "\"I\\J\"";
  for (unsigned j : order) csv << "," << label(j);
  csv << "\n";
  const auto a = a_matrix(n);
  for (size_t r = 0; r < order.size(); ++r) {
    csv << label(order[r]);
    for (size_t c = 0; c < order.size(); ++c) csv << "," << a[r][c];
    csv << "\n";
  }
  return csv.str();
}

}  // namespace groth
