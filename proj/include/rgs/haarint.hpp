#ifndef RGS_HAARINT_HPP
#define RGS_HAARINT_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "rgs/gammafn.hpp"
#include "rgs/qlinalg.hpp"
#include "rgs/symfunc.hpp"
#include "rgs/weights.hpp"

namespace rgs {

using CMat = std::vector<std::vector<std::complex<double>>>;

// Result of pairing two Schur-type matrix elements over U_n:
//   int s_alpha(C y) s_beta(D y) d*y = [beta = alpha^-] s_alpha(C D^{-1}) / d(alpha).
struct SchurPairing {
  bool nonzero = false;
  std::optional<DominantWeight> weight;  // alpha
  Rat scalar;                            // 1/d(alpha)
};
SchurPairing integrate_schur_pair(const DominantWeight& alpha, const DominantWeight& beta);

// Formal polynomial in tr(C1 y), tr(C2 y), det(y)^p with rational
// coefficients. Monomial key: (power of tr(C1 y), power of tr(C2 y), det
// exponent).
class MatrixPolyExpr {
 public:
  using Key = std::tuple<long, long, long>;

  void add(long m1, long m2, long p, const Rat& c);
  const std::map<Key, Rat>& monomials() const { return mono_; }

 private:
  std::map<Key, Rat> mono_;
};

// Exact value of the Haar integral as a finite combination
//   sum coeff * det(C1)^a * det(C2)^b * s_gamma(C1 C2^{-1}).
struct UnIntegral {
  int n = 0;
  // key: (gamma, a, b)
  std::map<std::tuple<DominantWeight, long, long>, Rat,
           std::less<std::tuple<DominantWeight, long, long>>>
      terms;

  Rat evaluate(const QMat& c1, const QMat& c2) const;
  std::complex<double> evaluate(const CMat& c1, const CMat& c2) const;
  bool is_zero() const { return terms.empty(); }
};

// Exact termwise integration over U_n via Schur-Weyl expansion of the trace
// powers, det-shift absorption and the orthogonality relations. At most two
// distinct matrix arguments.
UnIntegral integrate_Un(const MatrixPolyExpr& expr, int n);

// Monte-Carlo Haar average over U_n, QR-of-Ginibre sampling with phase
// correction. Deterministic for a fixed seed.
struct McEstimate {
  std::complex<double> mean;
  double stderr_ = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};
McEstimate monte_carlo_haar(const std::function<std::complex<double>(const CMat&)>& f, int n,
                            long samples, std::uint64_t seed = 20240911);

// Contour Fourier transform at character level, reduced by the symbolic
// constant C(n):  FC[f] = C(n) * image,
//   image of s_gamma = s_delta / Gamma_n(delta + 1), delta = (gamma + n)^-.
// Terms with |delta| > truncation are dropped and flagged.
struct FourierImage {
  ClassFunction image;
  bool complete = true;
};
FourierImage contour_fourier(const ClassFunction& f, long truncation);

// Inverse direction (coefficient extraction): the class function g with
// FC-image equal to the given one (poles excluded by construction).
ClassFunction contour_fourier_inverse(const ClassFunction& image);

// Euler-integral oracle for the Gauss-type data:
//   int_{U_1 x U_n} (a + b u + tr(C y) + u tr(D y))^tau u^q det(y)^r d*u d*y
// expanded multinomially; exact.
Rat euler_oracle_61(const Rat& a, const Rat& b, const QMat& c, const QMat& d, long tau, long q,
                    long r);

// Toric Euler oracle: int prod over the torus of
//   (sum_omega a_omega x^{w_omega})^tau * x^{sigma0} d*x,  exact.
Rat toric_euler_oracle(const std::vector<std::vector<long>>& weights, const std::vector<Rat>& a,
                       long tau, const std::vector<long>& sigma0);

}  // namespace rgs

#endif  // RGS_HAARINT_HPP
