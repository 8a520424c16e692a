#pragma once
#include <gmpxx.h>

#include <functional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "groth/core.hpp"

namespace groth {

using Exponent = std::vector<int>;

struct ExponentHash {
  size_t operator()(const Exponent& e) const {
    size_t h = 1469598103934665603ull;
    for (int v : e) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class MultiPoly {
 public:
  using TermMap = std::unordered_map<Exponent, mpz_class, ExponentHash>;

  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly monomial(Exponent e, mpz_class c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  const mpz_class* coeff(const Exponent& e) const;
  // Adds c * x^e, erasing the term if the total cancels.
  void add_term(const Exponent& e, const mpz_class& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const mpz_class& c) const;

  std::set<Exponent> support() const;
  int degree() const;      // max total degree, -1 for zero
  int min_degree() const;  // min total degree, -1 for zero
  bool operator==(const MultiPoly& o) const;

  // Terms sorted by (total degree, lexicographic exponent), ascending.
  std::vector<std::pair<Exponent, mpz_class>> sorted_terms() const;
  std::string to_string() const;

 private:
  int nvars_ = 0;
  TermMap terms_;
};

// Newton divided difference (f - s_j f) / (x_j - x_{j+1}).  The division is
// exact by symmetry; a nonzero remainder throws std::logic_error.
MultiPoly divided_difference(const MultiPoly& f, int j);
// Isobaric variant: divided_difference applied to f - x_{j+1} f.
MultiPoly isobaric_dd(const MultiPoly& f, int j);

// Grothendieck polynomial in n = w.size() variables, computed by isobaric
// divided differences down from the longest element along smallest ascents.
// Results are memoized process-wide; the reference stays valid.
const MultiPoly& grothendieck(const Permutation& w);
// Cache hooks used by the CLI's on-disk cache.
const MultiPoly* grothendieck_cache_peek(const Permutation& w);
void grothendieck_cache_store(const Permutation& w, MultiPoly p);

MultiPoly homogeneous_component(const MultiPoly& f, int d);
MultiPoly top_component(const MultiPoly& f);
// One extra variable z; term c*x^e becomes c*x^e*z^(degree(f)-|e|).
MultiPoly homogenize(const MultiPoly& f);

}  // namespace groth
