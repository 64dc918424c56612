#ifndef RGS_TEST_ORACLES_HPP
#define RGS_TEST_ORACLES_HPP

// Brute-force reference implementations used only by tests. Everything here
// is deliberately independent of the library's algorithms: tableaux are
// enumerated directly, polynomials are expanded monomial by monomial.

#include <algorithm>
#include <map>
#include <vector>

#include "rgs/rational.hpp"
#include "rgs/weights.hpp"

namespace rgs::testing {

// Count semistandard Young tableaux of shape lambda (a partition) with
// entries in {1..n}: rows weakly increase, columns strictly increase.
inline long count_ssyt(const std::vector<long>& lambda, int n) {
  std::vector<std::vector<int>> t(lambda.size());
  for (size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<size_t>(lambda[r]), 0);
  long count = 0;
  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == t.size()) {
      ++count;
      return;
    }
    size_t nr = r, nc = c + 1;
    if (c + 1 >= t[r].size()) {
      nr = r + 1;
      nc = 0;
    }
    while (nr < t.size() && t[nr].empty()) ++nr;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      if (nr == t.size())
        self(self, nr, 0);
      else
        self(self, nr, nc);
    }
  };
  // skip empty rows up front
  size_t r0 = 0;
  while (r0 < t.size() && t[r0].empty()) ++r0;
  if (r0 == t.size()) return 1;
  rec(rec, r0, 0);
  return count;
}

// Count standard Young tableaux of shape lambda by direct recursion on
// removable corners (dimension of the S_m irreducible).
inline long count_syt(std::vector<long> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  std::map<std::vector<long>, long> memo;
  auto rec = [&](auto&& self, std::vector<long>& shape) -> long {
    while (!shape.empty() && shape.back() == 0) shape.pop_back();
    if (shape.empty()) return 1;
    auto it = memo.find(shape);
    if (it != memo.end()) return it->second;
    long total = 0;
    for (size_t r = 0; r < shape.size(); ++r) {
      if (shape[r] == 0) continue;
      if (r + 1 < shape.size() && shape[r + 1] == shape[r]) continue;  // not a corner
      std::vector<long> next = shape;
      next[r] -= 1;
      total += self(self, next);
    }
    memo[shape] = total;
    return total;
  };
  return rec(rec, lambda);
}

// Exact multivariate polynomials keyed by exponent vectors, for the direct
// differentiation oracle.
using Monomials = std::map<std::vector<long>, Rat>;

inline void mono_add(Monomials& m, const std::vector<long>& e, const Rat& c) {
  if (c == 0) return;
  auto [it, fresh] = m.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

// Monomial expansion of s_lambda(x_1..x_n) for a nonnegative partition, by
// enumerating SSYT and recording content vectors.
inline Monomials schur_monomials(const std::vector<long>& lambda, int n) {
  Monomials out;
  std::vector<std::vector<int>> t(lambda.size());
  for (size_t r = 0; r < lambda.size(); ++r) t[r].assign(static_cast<size_t>(lambda[r]), 0);
  std::vector<long> content(static_cast<size_t>(n), 0);
  bool empty = true;
  for (auto& row : t) empty = empty && row.empty();
  if (empty) {
    mono_add(out, content, Rat(1));
    return out;
  }
  auto rec = [&](auto&& self, size_t r, size_t c) -> void {
    if (r == t.size()) {
      mono_add(out, content, Rat(1));
      return;
    }
    size_t nr = r, nc = c + 1;
    if (c + 1 >= t[r].size()) {
      nr = r + 1;
      nc = 0;
      while (nr < t.size() && t[nr].empty()) nr = t.size();  // trailing zero rows only
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0 && c < t[r - 1].size()) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
      t[r][c] = v;
      ++content[static_cast<size_t>(v - 1)];
      self(self, nr, nc);
      --content[static_cast<size_t>(v - 1)];
    }
  };
  size_t r0 = 0;
  while (r0 < t.size() && t[r0].empty()) ++r0;
  if (r0 == t.size()) {
    mono_add(out, content, Rat(1));
    return out;
  }
  rec(rec, r0, 0);
  return out;
}

// d/dt_1 + ... + d/dt_n on a monomial map.
inline Monomials mono_derive(const Monomials& f) {
  Monomials out;
  for (auto& [e, c] : f)
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::vector<long> d = e;
      d[i] -= 1;
      mono_add(out, d, c * Rat(e[i]));
    }
  return out;
}

inline Monomials mono_mul(const Monomials& a, const Monomials& b) {
  Monomials out;
  for (auto& [ea, ca] : a)
    for (auto& [eb, cb] : b) {
      std::vector<long> e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      mono_add(out, e, ca * cb);
    }
  return out;
}

// Greedy change of basis into Schur polynomials: repeatedly subtract the
// Schur polynomial of the dominant leading exponent. Works for symmetric f.
inline std::map<std::vector<long>, Rat> to_schur_basis(Monomials f, int n) {
  std::map<std::vector<long>, Rat> out;
  while (!f.empty()) {
    // pick the largest exponent vector in graded-lex order among dominant ones
    auto best = f.end();
    for (auto it = f.begin(); it != f.end(); ++it) {
      bool dominant = true;
      for (size_t i = 0; i + 1 < it->first.size(); ++i)
        dominant = dominant && it->first[i] >= it->first[i + 1];
      if (!dominant) continue;
      if (best == f.end() || best->first < it->first) best = it;
    }
    if (best == f.end()) throw std::runtime_error("to_schur_basis: no dominant leading term");
    std::vector<long> lam = best->first;
    Rat c = best->second;
    out[lam] = c;
    Monomials s = schur_monomials(lam, n);
    for (auto& [e, sc] : s) mono_add(f, e, -c * sc);
  }
  return out;
}

// Partial sum of the classical scalar series pFq with one extra upper
// Pochhammer slot matching the matrix series at n = 1.
inline Rat classical_pfq(const std::vector<Rat>& upper, const std::vector<Rat>& lower, const Rat& x,
                         long truncation) {
  Rat sum(0);
  for (long m = 0; m <= truncation; ++m) {
    Rat term(1);
    for (auto& a : upper)
      for (long i = 0; i < m; ++i) term *= a + Rat(i);
    for (auto& b : lower)
      for (long i = 0; i < m; ++i) term /= b + Rat(i);
    term /= Rat(factorial(static_cast<unsigned long>(m)));
    term *= rat_pow(x, m);
    sum += term;
  }
  return sum;
}

}  // namespace rgs::testing

#endif  // RGS_TEST_ORACLES_HPP
