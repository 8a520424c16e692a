#include "groth/core.hpp"

#include <algorithm>
#include <numeric>

namespace groth {

Permutation::Permutation(std::vector<int> oneline) : w_(std::move(oneline)) {
  const int n = static_cast<int>(w_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<char> seen(n + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > n || seen[v])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& s) {
  std::vector<int> w;
  for (size_t i = 0; i < s.size();) {
    if (s[i] == '(') {
      size_t close = s.find(')', i);
      if (close == std::string::npos)
        throw std::invalid_argument("unbalanced '(' in permutation");
      const std::string digits = s.substr(i + 1, close - i - 1);
      if (digits.empty() ||
          digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad parenthesized value in permutation");
      w.push_back(std::stoi(digits));
      i = close + 1;
    } else if (s[i] >= '1' && s[i] <= '9') {
      w.push_back(s[i] - '0');
      ++i;
    } else {
      throw std::invalid_argument(std::string("bad character '") + s[i] +
                                  "' in permutation");
    }
  }
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  for (int v : w_) {
    if (v < 10)
      out += static_cast<char>('0' + v);
    else
      out += "(" + std::to_string(v) + ")";
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 0; i < size(); ++i) inv[w_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (w_[i] > w_[j]) ++inv;
  return inv;
}

Permutation Permutation::swap(int j) const {
  if (j < 1 || j >= size()) throw std::invalid_argument("swap index out of range");
  std::vector<int> w = w_;
  std::swap(w[j - 1], w[j]);
  return Permutation(std::move(w));
}

std::vector<int> Permutation::ascents() const {
  std::vector<int> out;
  for (int j = 1; j < size(); ++j)
    if (w_[j - 1] < w_[j]) out.push_back(j);
  return out;
}

std::vector<int> Permutation::descents() const {
  std::vector<int> out;
  for (int j = 1; j < size(); ++j)
    if (w_[j - 1] > w_[j]) out.push_back(j);
  return out;
}

bool Permutation::is_vexillary() const {
  const int n = size();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (w_[b] < w_[a] && w_[a] < w_[d] && w_[d] < w_[c])
            return false;  // 2143 pattern at (a,b,c,d)
  return true;
}

std::vector<int> Diagram::column(int j) const {
  std::vector<int> rows;
  for (const auto& [r, c] : cells)
    if (c == j) rows.push_back(r);
  return rows;
}

bool subset_leq(const std::vector<int>& r, const std::vector<int>& s) {
  if (r.size() != s.size()) return false;
  std::vector<int> a = r, b = s;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool diagram_leq(const Diagram& c, const Diagram& d) {
  const int k = std::max(c.k, d.k);
  for (int j = 1; j <= k; ++j)
    if (!subset_leq(c.column(j), d.column(j))) return false;
  return true;
}

std::vector<int> weight(const Diagram& d) {
  std::vector<int> wt(d.n, 0);
  for (const auto& [r, c] : d.cells) wt[r - 1] += 1;
  return wt;
}

std::pair<Diagram, RankTable> rothe_diagram(const Permutation& w) {
  const int n = w.size();
  const Permutation winv = w.inverse();
  Diagram d;
  d.n = n;
  d.k = n;
  RankTable rank;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (j < w(i) && i < winv(j)) {
        d.cells.insert({i, j});
        int r = 0;
        for (int t = 1; t < i; ++t)
          if (w(t) < j) ++r;
        rank[{i, j}] = r;
      }
  return {d, rank};
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace groth
