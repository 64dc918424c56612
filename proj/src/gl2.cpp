#include "rgs/gl2.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rgs/gammafn.hpp"
#include "rgs/qlinalg.hpp"

namespace rgs {

namespace {

void check_gl2(const DominantWeight& w) {
  if (w.n() != 2) throw std::invalid_argument("gl2: weights must have length 2");
}

std::complex<double> cpow_int(std::complex<double> v, long e) {
  if (e == 0) return 1.0;
  if (v == std::complex<double>(0.0) && e < 0)
    throw std::domain_error("gl2: singular matrix where inverse power needed");
  std::complex<double> base = e > 0 ? v : 1.0 / v;
  long k = std::labs(e);
  std::complex<double> out = 1.0;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

}  // namespace

std::complex<double> gt_matrix_element(const DominantWeight& lambda, long k, long m,
                                       const C2Mat& x) {
  check_gl2(lambda);
  const long l1 = lambda[0], l2 = lambda[1];
  if (k > l1 || k < l2 || m > l1 || m < l2)
    throw std::domain_error("gt_matrix_element: index out of range");
  std::complex<double> det = x[0][0] * x[1][1] - x[0][1] * x[1][0];
  std::complex<double> pre = cpow_int(det, l2);
  // sqrt[(k-l2)!(l1-k)! / ((m-l2)!(l1-m)!)]
  double num = to_double(Rat(factorial(static_cast<unsigned long>(k - l2)) *
                             factorial(static_cast<unsigned long>(l1 - k))));
  double den = to_double(Rat(factorial(static_cast<unsigned long>(m - l2)) *
                             factorial(static_cast<unsigned long>(l1 - m))));
  double sq = std::sqrt(num / den);
  std::complex<double> sum = 0.0;
  for (long i = 0; i <= k - l2; ++i) {
    long j = m - l2 - i;
    if (j < 0 || j > l1 - k) continue;
    Int c = binomial(static_cast<unsigned long>(k - l2), static_cast<unsigned long>(i)) *
            binomial(static_cast<unsigned long>(l1 - k), static_cast<unsigned long>(j));
    std::complex<double> term = to_double(Rat(c));
    term *= cpow_int(x[0][0], i);
    term *= cpow_int(x[0][1], k - l2 - i);
    term *= cpow_int(x[1][0], j);
    term *= cpow_int(x[1][1], l1 - k - j);
    sum += term;
  }
  return pre * sq * sum;
}

std::vector<std::vector<std::complex<double>>> gt_rep_matrix(const DominantWeight& lambda,
                                                             const C2Mat& x) {
  check_gl2(lambda);
  const long gap = lambda[0] - lambda[1];
  std::vector<std::vector<std::complex<double>>> t(
      static_cast<size_t>(gap + 1), std::vector<std::complex<double>>(static_cast<size_t>(gap + 1)));
  for (long a = 0; a <= gap; ++a)
    for (long b = 0; b <= gap; ++b)
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          gt_matrix_element(lambda, lambda[1] + a, lambda[1] + b, x);
  return t;
}

bool triangle_check(const DominantWeight& lambda, const DominantWeight& mu,
                    const DominantWeight& nu) {
  check_gl2(lambda);
  check_gl2(mu);
  check_gl2(nu);
  if (lambda.size() + mu.size() + nu.size() != 0) return false;
  long gl = lambda[0] - lambda[1], gm = mu[0] - mu[1], gn = nu[0] - nu[1];
  return gl <= gm + gn && gm <= gl + gn && gn <= gl + gm;
}

namespace {

// One 3j value before global-sign normalization: the classical z-sum written
// in Gelfand-Cetlin data. All factorial arguments are the integers
//   A1 = l1+m1+n2, A2 = l1+m2+n1, A3 = l2+m1+n1, B = l1+m1+n1+1,
// and the z window comes from
//   z! (A1-z)! (l1-i-z)! (j-mu2-z)! (i+mu2+n1+z)! (z-j-nu2-l1)!.
double threej_raw(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu,
                  long i, long j, long k) {
  if (i + j + k != 0) return 0.0;
  if (!triangle_check(lambda, mu, nu)) return 0.0;
  const long l1 = lambda[0], l2 = lambda[1];
  const long m1 = mu[0], m2 = mu[1];
  const long n1 = nu[0], n2 = nu[1];
  if (i > l1 || i < l2 || j > m1 || j < m2 || k > n1 || k < n2) return 0.0;

  const long a1 = l1 + m1 + n2;
  const long a2 = l1 + m2 + n1;
  const long a3 = l2 + m1 + n1;
  const long b = l1 + m1 + n1 + 1;
  if (a1 < 0 || a2 < 0 || a3 < 0 || b <= 0) return 0.0;

  Rat sq1 = make_rat(factorial(static_cast<unsigned long>(a1)) *
                         factorial(static_cast<unsigned long>(a2)) *
                         factorial(static_cast<unsigned long>(a3)),
                     factorial(static_cast<unsigned long>(b)));
  Rat sq2(factorial(static_cast<unsigned long>(l1 - i)) *
          factorial(static_cast<unsigned long>(i - l2)) *
          factorial(static_cast<unsigned long>(m1 - j)) *
          factorial(static_cast<unsigned long>(j - m2)) *
          factorial(static_cast<unsigned long>(n1 - k)) *
          factorial(static_cast<unsigned long>(k - n2)));

  const long zlo = std::max({0L, j + n2 + l1, -(i + m2 + n1)});
  const long zhi = std::min({a1, l1 - i, j - m2});
  Rat zsum(0);
  for (long z = zlo; z <= zhi; ++z) {
    Int den = factorial(static_cast<unsigned long>(z)) *
              factorial(static_cast<unsigned long>(a1 - z)) *
              factorial(static_cast<unsigned long>(l1 - i - z)) *
              factorial(static_cast<unsigned long>(j - m2 - z)) *
              factorial(static_cast<unsigned long>(i + m2 + n1 + z)) *
              factorial(static_cast<unsigned long>(z - j - n2 - l1));
    Rat term = make_rat(Int(1), den);
    if (z & 1) term = -term;
    zsum += term;
  }
  if (zsum == 0) return 0.0;
  double phase = ((l2 + m1 + k) % 2 == 0) ? 1.0 : -1.0;
  return phase * std::sqrt(to_double(sq1) * to_double(sq2)) * to_double(zsum);
}

std::vector<std::array<long, 3>> admissible_indices(const DominantWeight& lambda,
                                                    const DominantWeight& mu,
                                                    const DominantWeight& nu) {
  std::vector<std::array<long, 3>> out;
  for (long i = lambda[1]; i <= lambda[0]; ++i)
    for (long j = mu[1]; j <= mu[0]; ++j) {
      long k = -i - j;
      if (k < nu[1] || k > nu[0]) continue;
      out.push_back({i, j, k});
    }
  return out;
}

void normalize_sign(ThreeJTable& t) {
  // flip all signs if the lexicographically largest supported index is
  // negative
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    if (std::abs(it->second) < 1e-12) continue;
    if (it->second < 0)
      for (auto& [idx, v] : t) v = -v;
    return;
  }
}

}  // namespace

ThreeJTable threej_table(const DominantWeight& lambda, const DominantWeight& mu,
                         const DominantWeight& nu) {
  ThreeJTable t;
  if (!triangle_check(lambda, mu, nu)) return t;
  for (auto& idx : admissible_indices(lambda, mu, nu))
    t[idx] = threej_raw(lambda, mu, nu, idx[0], idx[1], idx[2]);
  normalize_sign(t);
  return t;
}

double threej(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu,
              long i, long j, long k) {
  if (i + j + k != 0) return 0.0;
  ThreeJTable t = threej_table(lambda, mu, nu);
  auto it = t.find({i, j, k});
  return it == t.end() ? 0.0 : it->second;
}

ThreeJTable threej_nullspace_oracle(const DominantWeight& lambda, const DominantWeight& mu,
                                    const DominantWeight& nu) {
  ThreeJTable out;
  if (!triangle_check(lambda, mu, nu)) return out;
  const long gl = lambda[0] - lambda[1], gm = mu[0] - mu[1], gn = nu[0] - nu[1];
  auto idxs = admissible_indices(lambda, mu, nu);
  if (idxs.empty()) return out;
  // basis u_a (x) u_b (x) u_c, a = i - lambda_2 etc.
  // E u_a = (L-a) u_{a+1}, F u_a = a u_{a-1}
  std::map<std::array<long, 3>, size_t> pos;
  for (size_t t = 0; t < idxs.size(); ++t) pos[idxs[t]] = t;
  QMat rows;
  auto add_op = [&](bool raising) {
    std::map<std::array<long, 3>, QVec> eqs;  // target monomial -> equation
    for (size_t t = 0; t < idxs.size(); ++t) {
      long a = idxs[t][0] - lambda[1], bq = idxs[t][1] - mu[1], c = idxs[t][2] - nu[1];
      auto apply = [&](long da, long db, long dc, long coeff) {
        if (coeff == 0) return;
        std::array<long, 3> target{a + da, bq + db, c + dc};
        if (target[0] < 0 || target[0] > gl || target[1] < 0 || target[1] > gm || target[2] < 0 ||
            target[2] > gn)
          return;
        auto [it, fresh] = eqs.emplace(target, QVec(idxs.size(), Rat(0)));
        it->second[t] += Rat(coeff);
      };
      if (raising) {
        apply(1, 0, 0, gl - a);
        apply(0, 1, 0, gm - bq);
        apply(0, 0, 1, gn - c);
      } else {
        apply(-1, 0, 0, a);
        apply(0, -1, 0, bq);
        apply(0, 0, -1, c);
      }
    }
    for (auto& [target, eq] : eqs) rows.push_back(eq);
  };
  add_op(true);
  add_op(false);
  QMat kernel = kernel_basis(rows, idxs.size());
  if (kernel.size() != 1)
    throw std::runtime_error("threej_nullspace_oracle: invariant subspace is not 1-dimensional");
  // unitary coordinates: scale by sqrt(a!(L-a)!) per factor, then normalize
  std::vector<double> coords(idxs.size());
  for (size_t t = 0; t < idxs.size(); ++t) {
    long a = idxs[t][0] - lambda[1], bq = idxs[t][1] - mu[1], c = idxs[t][2] - nu[1];
    double norm2 = to_double(Rat(factorial(static_cast<unsigned long>(a)) *
                                 factorial(static_cast<unsigned long>(gl - a)))) *
                   to_double(Rat(factorial(static_cast<unsigned long>(bq)) *
                                 factorial(static_cast<unsigned long>(gm - bq)))) *
                   to_double(Rat(factorial(static_cast<unsigned long>(c)) *
                                 factorial(static_cast<unsigned long>(gn - c))));
    coords[t] = to_double(kernel[0][t]) * std::sqrt(norm2);
  }
  double norm = 0;
  for (double v : coords) norm += v * v;
  norm = std::sqrt(norm);
  for (size_t t = 0; t < idxs.size(); ++t) out[idxs[t]] = coords[t] / norm;
  normalize_sign(out);
  return out;
}

AppellResult appell_series(const std::array<Rat, 5>& s, const AppellPoint& p, long truncation) {
  AppellResult res;
  std::complex<double> detx = p.x[0][0] * p.x[1][1] - p.x[0][1] * p.x[1][0];
  std::complex<double> dety = p.y[0][0] * p.y[1][1] - p.y[0][1] * p.y[1][0];
  std::complex<double> detz = p.z[0][0] * p.z[1][1] - p.z[0][1] * p.z[1][0];
  auto cpow_rat = [](std::complex<double> v, const Rat& e) {
    return std::pow(v, std::complex<double>(to_double(e), 0.0));
  };
  std::complex<double> prefactor = cpow_rat(p.a, s[0]) * cpow_rat(p.b, s[1]) *
                                   cpow_rat(detx, s[2]) * cpow_rat(dety, s[3]) *
                                   cpow_rat(detz, s[4]);

  long candidates = 0;
  const long d = truncation;
  for (long l1 = -d; l1 <= d; ++l1)
    for (long l2 = -d; l2 <= l1; ++l2)
      for (long mm1 = -d; mm1 <= d; ++mm1)
        for (long mm2 = -d; mm2 <= mm1; ++mm2) {
          long nsum = -(l1 + l2 + mm1 + mm2);
          for (long gap = 0; gap <= 2 * d; ++gap) {
            if ((nsum + gap) % 2 != 0) continue;
            long n1 = (nsum + gap) / 2, n2 = (nsum - gap) / 2;
            if (n1 < -d || n1 > d || n2 < -d || n2 > d) continue;
            DominantWeight lam({l1, l2}), mu({mm1, mm2}), nu({n1, n2});
            if (!triangle_check(lam, mu, nu)) continue;
            ++candidates;
            const long m = mu.size() + 2 * nu.size();  // N-char exponent
            const long r = -m;                         // L-char exponent
            GammaValue coeff = GammaValue::one();
            auto recip1 = [&](const Rat& arg) {
              return reciprocal_gamma_n(ShiftedWeight(DominantWeight({0}), arg));
            };
            coeff *= recip1(Rat(m) + s[0] + 1);
            coeff *= recip1(Rat(r) + s[1] + 1);
            coeff *= reciprocal_gamma_n(ShiftedWeight(lam, s[2] + 1));
            coeff *= reciprocal_gamma_n(ShiftedWeight(mu, s[3] + 1));
            coeff *= reciprocal_gamma_n(ShiftedWeight(nu, s[4] + 1));
            if (coeff.is_zero()) continue;

            ThreeJTable tj = threej_table(lam, mu, nu);
            if (tj.empty()) continue;
            auto tx = gt_rep_matrix(lam, p.x);
            auto ty = gt_rep_matrix(mu, p.y);
            auto tz = gt_rep_matrix(nu, p.z);
            std::complex<double> inv = 0.0;
            for (auto& [ijk, v] : tj)
              for (auto& [ijk2, v2] : tj) {
                std::complex<double> w = v * v2;
                w *= tx[static_cast<size_t>(ijk[0] - lam[1])][static_cast<size_t>(ijk2[0] - lam[1])];
                w *= ty[static_cast<size_t>(ijk[1] - mu[1])][static_cast<size_t>(ijk2[1] - mu[1])];
                w *= tz[static_cast<size_t>(ijk[2] - nu[1])][static_cast<size_t>(ijk2[2] - nu[1])];
                inv += w;
              }
            std::complex<double> term = coeff.to_double();
            term *= to_double(Rat(dimension(lam) * dimension(mu) * dimension(nu)));
            term *= cpow_int(p.a, m) * cpow_int(p.b, r);
            term *= inv;
            res.value += term;
            ++res.terms;
          }
        }
  res.value *= prefactor;
  res.all_poles = (res.terms == 0) && (candidates > 0);
  return res;
}

}  // namespace rgs
