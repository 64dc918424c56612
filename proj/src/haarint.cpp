#include "rgs/haarint.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <stdexcept>

namespace rgs {

SchurPairing integrate_schur_pair(const DominantWeight& alpha, const DominantWeight& beta) {
  if (alpha.n() != beta.n())
    throw std::invalid_argument("integrate_schur_pair: mixed block sizes");
  SchurPairing out;
  if (beta != alpha.dual()) return out;
  out.nonzero = true;
  out.weight = alpha;
  out.scalar = Rat(1) / Rat(dimension(alpha));
  return out;
}

void MatrixPolyExpr::add(long m1, long m2, long p, const Rat& c) {
  if (m1 < 0 || m2 < 0) throw std::invalid_argument("MatrixPolyExpr: negative trace power");
  if (c == 0) return;
  Key k{m1, m2, p};
  auto [it, fresh] = mono_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) mono_.erase(it);
  }
}

namespace {

QMat q_mat_inverse_checked(const QMat& m) {
  auto inv = inverse(m);
  if (!inv) throw std::domain_error("matrix argument is singular");
  return *inv;
}

CMat c_mat_mul(const CMat& a, const CMat& b) {
  const size_t n = a.size();
  CMat c(n, std::vector<std::complex<double>>(n, 0.0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

CMat c_mat_inverse(const CMat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) em(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  Eigen::MatrixXcd inv = em.inverse();
  CMat out(m.size(), std::vector<std::complex<double>>(m.size()));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out[static_cast<size_t>(i)][static_cast<size_t>(j)] = inv(i, j);
  return out;
}

std::complex<double> c_det(const CMat& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) em(i, j) = m[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return em.determinant();
}

Rat q_det(const QMat& m) {
  QMat a = m;
  const size_t n = a.size();
  Rat det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[c][c];
      for (size_t cc = c; cc < n; ++cc) a[r][cc] -= f * a[c][cc];
    }
  }
  return det;
}

}  // namespace

Rat UnIntegral::evaluate(const QMat& c1, const QMat& c2) const {
  if (terms.empty()) return Rat(0);
  QMat prod = mat_mul(c1, q_mat_inverse_checked(c2));
  Rat d1 = q_det(c1), d2 = q_det(c2);
  Rat out(0);
  for (auto& [key, coeff] : terms) {
    auto& [gamma, a, b] = key;
    Rat v = coeff * rat_pow(d1, a) * rat_pow(d2, b);
    v *= schur_of_matrix(gamma, prod);
    out += v;
  }
  return out;
}

std::complex<double> UnIntegral::evaluate(const CMat& c1, const CMat& c2) const {
  if (terms.empty()) return 0.0;
  CMat prod = c_mat_mul(c1, c_mat_inverse(c2));
  std::complex<double> d1 = c_det(c1), d2 = c_det(c2);
  std::complex<double> out = 0.0;
  for (auto& [key, coeff] : terms) {
    auto& [gamma, a, b] = key;
    std::complex<double> v = to_double(coeff);
    v *= std::pow(d1, static_cast<double>(a)) * std::pow(d2, static_cast<double>(b));
    v *= schur_of_matrix(gamma, prod);
    out += v;
  }
  return out;
}

UnIntegral integrate_Un(const MatrixPolyExpr& expr, int n) {
  UnIntegral out;
  out.n = n;
  auto add_term = [&](const DominantWeight& gamma, long a, long b, const Rat& c) {
    if (c == 0) return;
    auto key = std::make_tuple(gamma, a, b);
    auto [it, fresh] = out.terms.emplace(key, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms.erase(it);
    }
  };

  for (auto& [key, coeff] : expr.monomials()) {
    auto [m1, m2, p] = key;
    if (m1 == 0 && m2 == 0) {
      if (p == 0) add_term(DominantWeight::zero(n), 0, 0, coeff);
      continue;
    }
    if (m1 == 0) {
      // single-matrix case: int s_beta(C2 y) det(y)^p = [beta + p = 0]
      for (auto& bparts : partitions(m2, n)) {
        DominantWeight beta(bparts);
        DominantWeight shifted = beta.det_shift(p);
        if (shifted.size() != 0) continue;
        bool zero = true;
        for (long q : shifted.parts()) zero = zero && q == 0;
        if (!zero) continue;
        Rat w(symmetric_group_dim(beta));
        add_term(DominantWeight::zero(n), 0, -p, coeff * w);
      }
      continue;
    }
    // expand both traces by Schur-Weyl, absorb det(y)^p into the C1 factor
    for (auto& aparts : partitions(m1, n)) {
      DominantWeight alpha(aparts);
      DominantWeight gamma = alpha.det_shift(p);
      Rat wa(symmetric_group_dim(alpha));
      for (auto& bparts : partitions(m2, n)) {
        DominantWeight beta(bparts);
        SchurPairing pr = integrate_schur_pair(gamma, beta);
        if (!pr.nonzero) continue;
        Rat wb(symmetric_group_dim(beta));
        add_term(gamma, -p, 0, coeff * wa * wb * pr.scalar);
      }
    }
  }
  return out;
}

McEstimate monte_carlo_haar(const std::function<std::complex<double>(const CMat&)>& f, int n,
                            long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("monte_carlo_haar: need at least one sample");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto en = static_cast<Eigen::Index>(n);

  std::complex<double> sum = 0.0;
  double sumsq = 0.0;  // sum of |f|^2 deviations handled at the end
  std::vector<std::complex<double>> vals;
  vals.reserve(static_cast<size_t>(samples));

  CMat u(static_cast<size_t>(n), std::vector<std::complex<double>>(static_cast<size_t>(n)));
  for (long s = 0; s < samples; ++s) {
    Eigen::MatrixXcd g(en, en);
    for (Eigen::Index i = 0; i < en; ++i)
      for (Eigen::Index j = 0; j < en; ++j)
        g(i, j) = std::complex<double>(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < en; ++j) {
      std::complex<double> d = r(j, j);
      std::complex<double> phase = d == 0.0 ? 1.0 : d / std::abs(d);
      q.col(j) *= phase;
    }
    for (Eigen::Index i = 0; i < en; ++i)
      for (Eigen::Index j = 0; j < en; ++j)
        u[static_cast<size_t>(i)][static_cast<size_t>(j)] = q(i, j);
    std::complex<double> v = f(u);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::runtime_error("monte_carlo_haar: non-finite sample value");
    vals.push_back(v);
    sum += v;
  }
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = sum / static_cast<double>(samples);
  for (auto& v : vals) {
    std::complex<double> d = v - est.mean;
    sumsq += std::norm(d);
  }
  if (samples > 1)
    est.stderr_ = std::sqrt(sumsq / (static_cast<double>(samples - 1) * static_cast<double>(samples)));
  return est;
}

FourierImage contour_fourier(const ClassFunction& f, long truncation) {
  const int n = f.n();
  FourierImage out{ClassFunction(n), true};
  for (auto& [gamma, c] : f.terms()) {
    DominantWeight delta = gamma.det_shift(n).dual();
    if (!delta.is_nonnegative()) continue;  // 1/Gamma_n kills the term
    if (delta.size() > truncation) {
      out.complete = false;
      continue;
    }
    out.image.add_term(delta, c * divided_power_coeff(delta));
  }
  return out;
}

ClassFunction contour_fourier_inverse(const ClassFunction& image) {
  const int n = image.n();
  ClassFunction f(n);
  for (auto& [delta, c] : image.terms()) {
    if (!delta.is_nonnegative())
      throw std::domain_error("contour_fourier_inverse: image weight off the positive cone");
    Rat dp = divided_power_coeff(delta);
    f.add_term(delta.dual().det_shift(-n), c / dp);
  }
  return f;
}

Rat euler_oracle_61(const Rat& a, const Rat& b, const QMat& c, const QMat& d, long tau, long q,
                    long r) {
  if (tau < 0) throw std::invalid_argument("euler_oracle_61: tau must be nonnegative");
  const int n = static_cast<int>(c.size());
  Rat out(0);
  Int tfac = factorial(static_cast<unsigned long>(tau));
  // (a + b u + tr(Cy) + u tr(Dy))^tau, pick u-exponent j+l = -q
  for (long j = 0; j <= tau; ++j)
    for (long l = 0; j + l <= tau; ++l) {
      if (j + l + q != 0) continue;
      for (long k = 0; j + l + k <= tau; ++k) {
        long i = tau - j - l - k;
        Rat multi = Rat(tfac) /
                    Rat(factorial(static_cast<unsigned long>(i)) *
                        factorial(static_cast<unsigned long>(j)) *
                        factorial(static_cast<unsigned long>(k)) *
                        factorial(static_cast<unsigned long>(l)));
        MatrixPolyExpr expr;
        expr.add(k, l, r, Rat(1));
        UnIntegral integ = integrate_Un(expr, n);
        if (integ.is_zero()) continue;
        Rat val = integ.evaluate(c, d);
        out += multi * rat_pow(a, i) * rat_pow(b, j) * val;
      }
    }
  return out;
}

Rat toric_euler_oracle(const std::vector<std::vector<long>>& weights, const std::vector<Rat>& a,
                       long tau, const std::vector<long>& sigma0) {
  if (tau < 0) throw std::invalid_argument("toric_euler_oracle: tau must be nonnegative");
  if (weights.size() != a.size()) throw std::invalid_argument("toric_euler_oracle: sizes");
  const size_t m = weights.size();
  const size_t r = sigma0.size();
  Rat out(0);
  Int tfac = factorial(static_cast<unsigned long>(tau));
  // compositions of tau into m parts
  std::vector<long> comp(m, 0);
  auto rec = [&](auto&& self, size_t idx, long left) -> void {
    if (idx + 1 == m) {
      comp[idx] = left;
      // exponent vector must vanish
      bool ok = true;
      for (size_t c = 0; c < r && ok; ++c) {
        long e = sigma0[c];
        for (size_t w = 0; w < m; ++w) e += comp[w] * weights[w][c];
        ok = e == 0;
      }
      if (ok) {
        Rat term(tfac);
        for (size_t w = 0; w < m; ++w) {
          term /= Rat(factorial(static_cast<unsigned long>(comp[w])));
          term *= rat_pow(a[w], comp[w]);
        }
        out += term;
      }
      return;
    }
    for (long t = 0; t <= left; ++t) {
      comp[idx] = t;
      self(self, idx + 1, left - t);
    }
  };
  if (m == 0) return tau == 0 ? Rat(1) : Rat(0);
  rec(rec, 0, tau);
  return out;
}

}  // namespace rgs
