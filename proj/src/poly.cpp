#include "groth/poly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace groth {

namespace {
int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }
}  // namespace

MultiPoly MultiPoly::monomial(Exponent e, mpz_class c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

const mpz_class* MultiPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? nullptr : &it->second;
}

void MultiPoly::add_term(const Exponent& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out(std::max(nvars_, o.nvars_));
  Exponent e(out.nvars_, 0);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      for (int i = 0; i < out.nvars_; ++i)
        e[i] = (i < static_cast<int>(a.size()) ? a[i] : 0) +
               (i < static_cast<int>(b.size()) ? b[i] : 0);
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::scaled(const mpz_class& c) const {
  MultiPoly out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

std::set<Exponent> MultiPoly::support() const {
  std::set<Exponent> s;
  for (const auto& [e, c] : terms_) s.insert(e);
  return s;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

int MultiPoly::min_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    if (d < 0 || total(e) < d) d = total(e);
  return d;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [e, c] : terms_) {
    const mpz_class* oc = o.coeff(e);
    if (!oc || *oc != c) return false;
  }
  return true;
}

std::vector<std::pair<Exponent, mpz_class>> MultiPoly::sorted_terms() const {
  std::vector<std::pair<Exponent, mpz_class>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    const int da = total(a.first), db = total(b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  return v;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : sorted_terms()) {
    if (!first) out << (c > 0 ? " + " : " - ");
    if (first && c < 0) out << "-";
    first = false;
    mpz_class a = abs(c);
    bool wrote = false;
    if (a != 1) {
      out << a.get_str();
      wrote = true;
    }
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) {
        if (wrote) out << "*";
        out << "x" << (i + 1);
        if (e[i] > 1) out << "^" << e[i];
        wrote = true;
      }
    if (!wrote) out << "1";
  }
  return out.str();
}

MultiPoly divided_difference(const MultiPoly& f, int j) {
  const int n = f.nvars();
  if (j < 1 || j >= n) throw std::invalid_argument("divided_difference index");
  // g = f - s_j f
  MultiPoly::TermMap g;
  int maxj = 0;
  for (const auto& [e, c] : f.terms()) {
    Exponent es = e;
    std::swap(es[j - 1], es[j]);
    auto bump = [&](const Exponent& key, const mpz_class& v) {
      auto [it, fresh] = g.try_emplace(key, v);
      if (!fresh) {
        it->second += v;
        if (it->second == 0) g.erase(it);
      }
    };
    bump(e, c);
    bump(es, -c);
  }
  for (const auto& [e, c] : g) maxj = std::max(maxj, e[j - 1]);

  // Divide by (x_j - x_{j+1}) with a bucket sweep on the exponent of x_j:
  // the leading term c*x^e (e_j = m maximal) forces quotient term c*x^{e-d_j}
  // and pushes the compensation +c*x^{e-d_j+d_{j+1}} into bucket m-1.
  std::vector<MultiPoly::TermMap> buckets(maxj + 1);
  for (auto& [e, c] : g) buckets[e[j - 1]].emplace(e, std::move(c));
  MultiPoly out(n);
  for (int m = maxj; m >= 1; --m) {
    for (const auto& [e, c] : buckets[m]) {
      if (c == 0) continue;
      Exponent q = e;
      q[j - 1] -= 1;
      out.add_term(q, c);
      Exponent comp = q;
      comp[j] += 1;
      auto [it, fresh] = buckets[m - 1].try_emplace(comp, c);
      if (!fresh) it->second += c;
    }
  }
  for (const auto& [e, c] : buckets[0])
    if (c != 0) throw std::logic_error("divided_difference: nonzero remainder");
  return out;
}

MultiPoly isobaric_dd(const MultiPoly& f, int j) {
  const int n = f.nvars();
  if (j < 1 || j >= n) throw std::invalid_argument("isobaric index");
  MultiPoly h(n);
  for (const auto& [e, c] : f.terms()) {
    h.add_term(e, c);
    Exponent ex = e;
    ex[j] += 1;  // x_{j+1} * f
    h.add_term(ex, -c);
  }
  return divided_difference(h, j);
}

namespace {
std::map<std::vector<int>, std::unique_ptr<const MultiPoly>>& groth_cache() {
  static std::map<std::vector<int>, std::unique_ptr<const MultiPoly>> c;
  return c;
}
std::shared_mutex& groth_mutex() {
  static std::shared_mutex mu;
  return mu;
}

const MultiPoly& groth_store(const std::vector<int>& key, MultiPoly p) {
  std::unique_lock lock(groth_mutex());
  auto it = groth_cache().find(key);
  if (it == groth_cache().end())
    it = groth_cache()
             .emplace(key, std::make_unique<const MultiPoly>(std::move(p)))
             .first;
  return *it->second;
}
}  // namespace

const MultiPoly* grothendieck_cache_peek(const Permutation& w) {
  std::shared_lock lock(groth_mutex());
  auto it = groth_cache().find(w.oneline());
  return it == groth_cache().end() ? nullptr : it->second.get();
}

void grothendieck_cache_store(const Permutation& w, MultiPoly p) {
  groth_store(w.oneline(), std::move(p));
}

const MultiPoly& grothendieck(const Permutation& w) {
  if (const MultiPoly* hit = grothendieck_cache_peek(w)) return *hit;
  const int n = w.size();
  MultiPoly result;
  const std::vector<int> asc = w.ascents();
  if (asc.empty()) {
    Exponent e(n, 0);
    for (int i = 1; i < n; ++i) e[i - 1] = n - i;
    result = MultiPoly::monomial(e, 1);
  } else {
    const int j = asc.front();
    result = isobaric_dd(grothendieck(w.swap(j)), j);
  }
  return groth_store(w.oneline(), std::move(result));
}

MultiPoly homogeneous_component(const MultiPoly& f, int d) {
  MultiPoly out(f.nvars());
  for (const auto& [e, c] : f.terms())
    if (total(e) == d) out.add_term(e, c);
  return out;
}

MultiPoly top_component(const MultiPoly& f) {
  return homogeneous_component(f, f.degree());
}

MultiPoly homogenize(const MultiPoly& f) {
  const int d = f.degree();
  MultiPoly out(f.nvars() + 1);
  for (const auto& [e, c] : f.terms()) {
    Exponent ez = e;
    ez.push_back(d - total(e));
    out.add_term(ez, c);
  }
  return out;
}

}  // namespace groth
