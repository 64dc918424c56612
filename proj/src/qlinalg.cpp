#include "rgs/qlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace rgs {

std::vector<size_t> rref(QMat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rat inv = Rat(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(QMat m) { return static_cast<int>(rref(m).size()); }

std::optional<QVec> solve(const QMat& a, const QVec& b, QMat* kernel) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  QMat aug(rows, QVec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][cols] = b[i];
  }
  std::vector<size_t> pivots = rref(aug);
  // inconsistent iff a pivot lands in the rhs column
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  QVec x(cols, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  if (kernel) {
    kernel->clear();
    std::vector<bool> is_pivot(cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    for (size_t free = 0; free < cols; ++free) {
      if (is_pivot[free]) continue;
      QVec k(cols, Rat(0));
      k[free] = Rat(1);
      for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug[i][free];
      kernel->push_back(std::move(k));
    }
  }
  return x;
}

QMat kernel_basis(const QMat& a, size_t ncols) {
  if (a.empty()) {
    QMat id(ncols, QVec(ncols, Rat(0)));
    for (size_t i = 0; i < ncols; ++i) id[i][i] = Rat(1);
    return id;
  }
  QMat kernel;
  QVec zero(a.size(), Rat(0));
  solve(a, zero, &kernel);
  return kernel;
}

std::optional<QMat> inverse(const QMat& a) {
  const size_t n = a.size();
  QMat aug(n, QVec(2 * n, Rat(0)));
  for (size_t i = 0; i < n; ++i) {
    std::copy(a[i].begin(), a[i].end(), aug[i].begin());
    aug[i][n + i] = Rat(1);
  }
  auto pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  QMat inv(n, QVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QVec mat_vec(const QMat& a, const QVec& x) {
  QVec y(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

QMat mat_mul(const QMat& a, const QMat& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  QMat c(n, QVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l)
      if (a[i][l] != 0)
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

namespace {

ZMat identity_z(size_t n) {
  ZMat id(n, ZVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace

SmithResult smith_normal_form(ZMat a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  SmithResult res;
  res.u = identity_z(rows);
  res.v = identity_z(cols);

  auto row_op = [&](size_t i, size_t j, const Int& q) {  // row_i -= q row_j
    for (size_t c = 0; c < cols; ++c) a[i][c] -= q * a[j][c];
    for (size_t c = 0; c < rows; ++c) res.u[i][c] -= q * res.u[j][c];
  };
  auto col_op = [&](size_t i, size_t j, const Int& q) {  // col_i -= q col_j
    for (size_t r = 0; r < rows; ++r) a[r][i] -= q * a[r][j];
    for (size_t r = 0; r < cols; ++r) res.v[r][i] -= q * res.v[r][j];
  };
  auto row_swap = [&](size_t i, size_t j) {
    std::swap(a[i], a[j]);
    std::swap(res.u[i], res.u[j]);
  };
  auto col_swap = [&](size_t i, size_t j) {
    for (size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < cols; ++r) std::swap(res.v[r][i], res.v[r][j]);
  };

  size_t t = 0;
  while (t < rows && t < cols) {
    // find a nonzero pivot in the submatrix
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < rows && !found; ++i)
      for (size_t j = t; j < cols && !found; ++j)
        if (a[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        Int q = a[i][t] / a[t][t];
        row_op(i, t, q);
        if (a[i][t] != 0) {
          row_swap(t, i);
          clean = false;
        }
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        Int q = a[t][j] / a[t][t];
        col_op(j, t, q);
        if (a[t][j] != 0) {
          col_swap(t, j);
          clean = false;
        }
      }
    }
    ++t;
  }
  // make diagonal nonnegative and collect
  for (size_t i = 0; i < t; ++i) {
    if (a[i][i] < 0) {
      for (size_t c = 0; c < cols; ++c) a[i][c] = -a[i][c];
      for (size_t c = 0; c < rows; ++c) res.u[i][c] = -res.u[i][c];
    }
    res.diag.push_back(a[i][i]);
  }
  res.rank = static_cast<int>(t);
  // divisibility chain d_i | d_{i+1} is not needed by the callers here, so
  // we stop at diagonal form.
  return res;
}

ZMat saturation_basis(const ZMat& generators, int ambient_dim) {
  const size_t r = static_cast<size_t>(ambient_dim);
  if (generators.empty()) return {};
  // rowspace_Q(B) = rowspace_Q(D V^{-1}-side): with U B V = D, the first
  // `rank` rows of V^{-1} span the same Q-space and form a Z-basis of the
  // saturation. V^{-1} rows = rows of V inverse; avoid inverting by running
  // SNF on the transpose instead: saturation of the row space of B equals
  // the integer kernel complement... we instead compute via the annihilator:
  //   S = { x in Z^r : x in span_Q(B) } = ker_Z(C) where C's rows span the
  // rational annihilator of span(B).
  // Build annihilator over Q:
  QMat m(generators.size(), QVec(r));
  for (size_t i = 0; i < generators.size(); ++i)
    for (size_t j = 0; j < r; ++j) m[i][j] = Rat(generators[i][j]);
  QMat ann = kernel_basis(m, r);  // vectors y with B y = 0: annihilator functionals
  if (ann.empty()) {
    // full space
    ZMat id(r, ZVec(r, Int(0)));
    for (size_t i = 0; i < r; ++i) id[i][i] = 1;
    return id;
  }
  // clear denominators to integer matrix C with rows = annihilator functionals
  ZMat c(ann.size(), ZVec(r));
  for (size_t i = 0; i < ann.size(); ++i) {
    Int lcm(1);
    for (size_t j = 0; j < r; ++j) {
      Int den = ann[i][j].get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    for (size_t j = 0; j < r; ++j) {
      Rat v = ann[i][j] * Rat(lcm);
      c[i][j] = v.get_num();
    }
  }
  // integer kernel of C via SNF: U C V = D; kernel basis = columns of V
  // beyond rank(D).
  SmithResult snf = smith_normal_form(c);
  ZMat out;
  const size_t cols = r;
  for (size_t j = static_cast<size_t>(snf.rank); j < cols; ++j) {
    ZVec v(r);
    for (size_t i = 0; i < r; ++i) v[i] = snf.v[i][j];
    out.push_back(std::move(v));
  }
  return out;
}

bool has_integer_solution(const ZMat& a, const ZVec& b) {
  if (a.empty()) {
    for (auto& x : b)
      if (x != 0) return false;
    return true;
  }
  SmithResult snf = smith_normal_form(a);
  // U A V = D, A x = b  <=>  D (V^{-1} x) = U b; integer solution iff
  // (U b)_i divisible by d_i for pivot rows and zero beyond the rank.
  const size_t rows = a.size();
  ZVec ub(rows, Int(0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < rows; ++j) ub[i] += snf.u[i][j] * b[j];
  for (size_t i = 0; i < rows; ++i) {
    if (i < static_cast<size_t>(snf.rank)) {
      if (ub[i] % snf.diag[i] != 0) return false;
    } else if (ub[i] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace rgs
