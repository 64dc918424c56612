#include "rgs/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace rgs {

ClassFunction ClassFunction::schur(const DominantWeight& alpha, Rat coeff) {
  ClassFunction f(alpha.n());
  f.add_term(alpha, coeff);
  return f;
}

Rat ClassFunction::coeff(const DominantWeight& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rat(0) : it->second;
}

void ClassFunction::add_term(const DominantWeight& alpha, const Rat& c) {
  if (alpha.n() != n_) throw std::invalid_argument("mixed block sizes in ClassFunction");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("mixed block sizes in ClassFunction");
  for (auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (o.n_ != n_) throw std::invalid_argument("mixed block sizes in ClassFunction");
  for (auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

std::string ClassFunction::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_string(c) << "*s" << w.to_string();
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Littlewood-Richardson counting.

namespace {

// Trim trailing zeros; partitions here are nonnegative.
std::vector<long> trim(const std::vector<long>& p) {
  std::vector<long> q = p;
  while (!q.empty() && q.back() == 0) q.pop_back();
  return q;
}

bool contains(const std::vector<long>& outer, const std::vector<long>& inner) {
  for (size_t i = 0; i < inner.size(); ++i) {
    long o = i < outer.size() ? outer[i] : 0;
    if (inner[i] > o) return false;
  }
  return true;
}

struct LRKey {
  std::vector<long> a, b, g;
  bool operator<(const LRKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return g < o.g;
  }
};

// Count skew semistandard fillings of gamma/alpha with content beta whose
// reverse reading word (right to left, top to bottom) is a lattice word.
// Cells are visited in reading-word order so the lattice prefix condition
// prunes early.
long lr_count(const std::vector<long>& alpha, const std::vector<long>& beta,
              const std::vector<long>& gamma) {
  const int rows = static_cast<int>(gamma.size());
  const int letters = static_cast<int>(beta.size());
  // fill[r][c] values; column strict vs previous row, weakly increasing in row.
  std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
  for (int r = 0; r < rows; ++r)
    fill[static_cast<size_t>(r)].resize(static_cast<size_t>(gamma[static_cast<size_t>(r)]), 0);
  std::vector<long> count(static_cast<size_t>(letters), 0);

  // Visit order: rows top to bottom, columns right to left.
  struct Cell {
    int r, c;
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r) {
    long a = r < static_cast<int>(alpha.size()) ? alpha[static_cast<size_t>(r)] : 0;
    for (long c = gamma[static_cast<size_t>(r)] - 1; c >= a; --c)
      cells.push_back({r, static_cast<int>(c)});
  }

  long total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    auto [r, c] = cells[idx];
    long arow = r < static_cast<int>(alpha.size()) ? alpha[static_cast<size_t>(r)] : 0;
    // value must be <= the cell to the right (weakly increasing rows)
    int hi = letters;
    if (c + 1 < static_cast<int>(gamma[static_cast<size_t>(r)]))
      hi = fill[static_cast<size_t>(r)][static_cast<size_t>(c + 1)];
    // value must be > the cell above (strict columns)
    int lo = 1;
    if (r > 0) {
      long aprev = (r - 1) < static_cast<int>(alpha.size()) ? alpha[static_cast<size_t>(r - 1)] : 0;
      if (c >= aprev && c < static_cast<int>(gamma[static_cast<size_t>(r - 1)]))
        lo = fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1;
    }
    (void)arow;
    for (int v = lo; v <= hi; ++v) {
      // lattice: after placing v, #v must stay <= #(v-1)
      if (count[static_cast<size_t>(v - 1)] + 1 > beta[static_cast<size_t>(v - 1)]) continue;
      if (v > 1 && count[static_cast<size_t>(v - 1)] + 1 > count[static_cast<size_t>(v - 2)])
        continue;
      fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
      ++count[static_cast<size_t>(v - 1)];
      self(self, idx + 1);
      --count[static_cast<size_t>(v - 1)];
    }
  };
  rec(rec, 0);
  return total;
}

std::map<LRKey, long>& lr_memo() {
  static std::map<LRKey, long> memo;
  return memo;
}
std::mutex& lr_memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Int lr_coefficient(const DominantWeight& alpha, const DominantWeight& beta,
                   const DominantWeight& gamma) {
  if (!alpha.is_nonnegative() || !beta.is_nonnegative() || !gamma.is_nonnegative())
    throw std::invalid_argument("lr_coefficient expects nonnegative partitions");
  std::vector<long> a = trim(alpha.parts()), b = trim(beta.parts()), g = trim(gamma.parts());
  if (alpha.size() + beta.size() != gamma.size()) return Int(0);
  if (!contains(g, a) || !contains(g, b)) return Int(0);
  LRKey key{a, b, g};
  {
    std::lock_guard<std::mutex> lock(lr_memo_mutex());
    auto it = lr_memo().find(key);
    if (it != lr_memo().end()) return Int(it->second);
  }
  long c = lr_count(a, b, g);
  {
    std::lock_guard<std::mutex> lock(lr_memo_mutex());
    lr_memo().emplace(key, c);
  }
  return Int(c);
}

namespace {

// Candidate partitions gamma with alpha_i <= gamma_i <= alpha_{i-1} bound by
// beta_1, |gamma| = |alpha| + |beta|.
void product_candidates(const std::vector<long>& alpha, long beta1, long remaining, size_t i,
                        std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  const size_t n = alpha.size();
  if (i == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  long lo = alpha[i];
  long hi = alpha[i] + beta1;
  if (i > 0) hi = std::min(hi, cur[i - 1]);
  for (long g = hi; g >= lo; --g) {
    if (g > remaining + 0) {
      // remaining counts what is left of |gamma|; prune when even the
      // smallest tail cannot absorb the rest.
    }
    long tail_min = 0;
    for (size_t j = i + 1; j < n; ++j) tail_min += alpha[j];
    long tail_max = 0;
    for (size_t j = i + 1; j < n; ++j) tail_max += std::min(g, alpha[j] + beta1);
    long rest = remaining - g;
    if (rest < tail_min || rest > tail_max) continue;
    cur[i] = g;
    product_candidates(alpha, beta1, rest, i + 1, cur, out);
  }
}

}  // namespace

ClassFunction lr_multiply(const DominantWeight& alpha, const DominantWeight& beta) {
  if (alpha.n() != beta.n()) throw std::invalid_argument("lr_multiply: mixed block sizes");
  const int n = alpha.n();
  // normalize to nonnegative partitions
  long sa = std::min<long>(alpha[n - 1], 0);
  long sb = std::min<long>(beta[n - 1], 0);
  DominantWeight a = alpha.det_shift(-sa);
  DominantWeight b = beta.det_shift(-sb);

  ClassFunction out(n);
  std::vector<std::vector<long>> cands;
  std::vector<long> cur(static_cast<size_t>(n), 0);
  product_candidates(a.parts(), b.parts()[0], a.size() + b.size(), 0, cur, cands);
  for (auto& g : cands) {
    DominantWeight gamma(g);
    Int c = lr_coefficient(a, b, gamma);
    if (c != 0) out.add_term(gamma.det_shift(sa + sb), Rat(c));
  }
  return out;
}

ClassFunction lr_multiply(const ClassFunction& f, const ClassFunction& g) {
  if (f.n() != g.n()) throw std::invalid_argument("lr_multiply: mixed block sizes");
  ClassFunction out(f.n());
  for (auto& [wa, ca] : f.terms())
    for (auto& [wb, cb] : g.terms()) {
      ClassFunction prod = lr_multiply(wa, wb);
      prod *= ca * cb;
      out += prod;
    }
  return out;
}

Int invariant_dim(const std::vector<DominantWeight>& weights, int n) {
  long total = 0;
  for (auto& w : weights) {
    if (w.n() != n) throw std::invalid_argument("invariant_dim: mixed block sizes");
    total += w.size();
  }
  if (total != 0) return Int(0);
  ClassFunction acc = ClassFunction::schur(DominantWeight::zero(n));
  for (auto& w : weights) acc = lr_multiply(acc, ClassFunction::schur(w));
  Rat c = acc.coeff(DominantWeight::zero(n));
  return c.get_num();
}

// ---------------------------------------------------------------------------
// Schur evaluation.

namespace {

template <class F>
F det_gauss(std::vector<std::vector<F>> m) {
  const size_t n = m.size();
  F det = F(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == F(0)) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == F(0)) continue;
      F factor = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

// complete homogeneous h_0..h_k of the values x, by the two-variable DP
// h[j][d] = h(first j variables, degree d).
template <class F>
std::vector<F> complete_homogeneous(const std::vector<F>& x, long k) {
  std::vector<F> h(static_cast<size_t>(k + 1), F(0));
  h[0] = F(1);
  for (const F& xi : x)
    for (long d = 1; d <= k; ++d) h[static_cast<size_t>(d)] += xi * h[static_cast<size_t>(d - 1)];
  return h;
}

template <class F>
F jacobi_trudi(const std::vector<long>& lambda, const std::vector<F>& x) {
  long k = 0;
  for (long p : lambda) k = std::max(k, p);
  k += static_cast<long>(lambda.size());
  std::vector<F> h = complete_homogeneous(x, k);
  const size_t n = lambda.size();
  std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long idx = lambda[i] - static_cast<long>(i) + static_cast<long>(j);
      m[i][j] = idx < 0 ? F(0) : h[static_cast<size_t>(idx)];
    }
  return det_gauss(std::move(m));
}

template <class F>
F pow_l(const F& base, long e) {
  F out = F(1);
  F b = base;
  long k = e;
  if (k < 0) throw std::domain_error("negative power in pow_l");
  while (k) {
    if (k & 1) out = out * b;
    b = b * b;
    k >>= 1;
  }
  return out;
}

template <class F>
bool all_distinct(const std::vector<F>& x) {
  for (size_t i = 0; i < x.size(); ++i)
    for (size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) return false;
  return true;
}

template <class F>
F bialternant(const std::vector<long>& lambda, const std::vector<F>& x) {
  const size_t n = x.size();
  std::vector<std::vector<F>> num(n, std::vector<F>(n)), den(n, std::vector<F>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long e = lambda[j] + static_cast<long>(n) - static_cast<long>(j) - 1;
      num[i][j] = pow_l(x[i], e);
      den[i][j] = pow_l(x[i], static_cast<long>(n) - static_cast<long>(j) - 1);
    }
  return det_gauss(std::move(num)) / det_gauss(std::move(den));
}

template <class F>
F schur_eval_impl(const DominantWeight& alpha, std::vector<F> x, bool exact) {
  const int n = alpha.n();
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("schur_eval: wrong number of coordinates");
  long shift = std::min<long>(alpha[n - 1], 0);
  DominantWeight lam = alpha.det_shift(-shift);
  F prefactor = F(1);
  if (shift != 0) {
    F prod = F(1);
    for (auto& xi : x) prod = prod * xi;
    if (prod == F(0)) throw std::domain_error("zero eigenvalue with negative weight");
    prefactor = F(1) / pow_l(prod, -shift);
  }
  F val;
  if (exact && all_distinct(x))
    val = bialternant(lam.parts(), x);
  else if (!exact)
    val = jacobi_trudi(lam.parts(), x);  // floats: avoid near-singular Vandermonde
  else
    val = jacobi_trudi(lam.parts(), x);
  return prefactor * val;
}

}  // namespace

Rat schur_eval(const DominantWeight& alpha, const std::vector<Rat>& x) {
  return schur_eval_impl<Rat>(alpha, x, true);
}

std::complex<double> schur_eval(const DominantWeight& alpha,
                                const std::vector<std::complex<double>>& x) {
  return schur_eval_impl<std::complex<double>>(alpha, x, false);
}

namespace {

template <class F>
F matrix_trace_power(const std::vector<std::vector<F>>& x, std::vector<std::vector<F>>& acc) {
  // multiplies acc by x and returns tr(acc)
  const size_t n = x.size();
  std::vector<std::vector<F>> next(n, std::vector<F>(n, F(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) next[i][j] += acc[i][k] * x[k][j];
  acc = std::move(next);
  F tr = F(0);
  for (size_t i = 0; i < n; ++i) tr += acc[i][i];
  return tr;
}

template <class F>
F schur_of_matrix_impl(const DominantWeight& alpha, const std::vector<std::vector<F>>& x) {
  const int n = alpha.n();
  if (x.size() != static_cast<size_t>(n)) throw std::invalid_argument("schur_of_matrix: size");
  long shift = std::min<long>(alpha[n - 1], 0);
  DominantWeight lam = alpha.det_shift(-shift);
  long k = 0;
  for (long p : lam.parts()) k = std::max(k, p);
  k += n;
  // power sums p_1..p_k
  std::vector<F> p(static_cast<size_t>(k + 1), F(0));
  std::vector<std::vector<F>> acc(x.size(), std::vector<F>(x.size(), F(0)));
  for (size_t i = 0; i < x.size(); ++i) acc[i][i] = F(1);
  for (long m = 1; m <= k; ++m) p[static_cast<size_t>(m)] = matrix_trace_power(x, acc);
  // Newton: k h_k = sum_{i=1..k} h_{k-i} p_i
  std::vector<F> h(static_cast<size_t>(k + 1), F(0));
  h[0] = F(1);
  for (long m = 1; m <= k; ++m) {
    F s = F(0);
    for (long i = 1; i <= m; ++i) s += h[static_cast<size_t>(m - i)] * p[static_cast<size_t>(i)];
    h[static_cast<size_t>(m)] = s / F(m);
  }
  const size_t ln = static_cast<size_t>(n);
  std::vector<std::vector<F>> m(ln, std::vector<F>(ln, F(0)));
  for (size_t i = 0; i < ln; ++i)
    for (size_t j = 0; j < ln; ++j) {
      long idx = lam.parts()[i] - static_cast<long>(i) + static_cast<long>(j);
      m[i][j] = idx < 0 ? F(0) : h[static_cast<size_t>(idx)];
    }
  F val = det_gauss(std::move(m));
  if (shift != 0) {
    // det(x) = e_n = h-free; compute via p as well (char poly), easiest by
    // Gaussian elimination determinant.
    F det = det_gauss(x);
    if (det == F(0)) throw std::domain_error("schur_of_matrix: negative weight needs invertible x");
    val = val / pow_l(det, -shift);
  }
  return val;
}

}  // namespace

Rat schur_of_matrix(const DominantWeight& alpha, const std::vector<std::vector<Rat>>& x) {
  return schur_of_matrix_impl<Rat>(alpha, x);
}

std::complex<double> schur_of_matrix(
    const DominantWeight& alpha, const std::vector<std::vector<std::complex<double>>>& x) {
  return schur_of_matrix_impl<std::complex<double>>(alpha, x);
}

// ---------------------------------------------------------------------------

Int symmetric_group_dim(const DominantWeight& alpha) {
  if (!alpha.is_nonnegative())
    throw std::domain_error("symmetric_group_dim needs a nonnegative partition");
  const long m = alpha.size();
  if (m == 0) return Int(1);
  // pad (or keep) alpha to exactly m parts; |alpha| = m forces <= m nonzero parts
  std::vector<long> a;
  for (long p : alpha.parts())
    if (p != 0) a.push_back(p);
  a.resize(static_cast<size_t>(m), 0);
  Int num = factorial(static_cast<unsigned long>(m));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      num *= a[i] - a[j] + static_cast<long>(j) - static_cast<long>(i);
  Int den(1);
  for (size_t j = 0; j < a.size(); ++j)
    den *= factorial(static_cast<unsigned long>(a[j] + static_cast<long>(a.size()) -
                                                static_cast<long>(j) - 1));
  return num / den;
}

ClassFunction power_trace_expand(long m, int n) {
  if (m < 0) throw std::domain_error("power_trace_expand: negative power");
  ClassFunction out(n);
  for (auto& p : partitions(m, n)) {
    DominantWeight alpha(p);
    out.add_term(alpha, Rat(symmetric_group_dim(alpha)));
  }
  return out;
}

ClassFunction apply_D(const ClassFunction& f) {
  const int n = f.n();
  ClassFunction out(n);
  for (auto& [alpha, c] : f.terms()) {
    for (int i = 0; i < n; ++i) {
      std::vector<long> p = alpha.parts();
      p[static_cast<size_t>(i)] -= 1;
      if (!DominantWeight::is_dominant(p)) continue;
      long factor = alpha[i] + n - (i + 1);
      if (factor == 0) continue;
      out.add_term(DominantWeight(std::move(p)), c * Rat(factor));
    }
  }
  return out;
}

}  // namespace rgs
