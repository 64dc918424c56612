#ifndef RGS_SYMFUNC_HPP
#define RGS_SYMFUNC_HPP

#include <complex>
#include <map>
#include <vector>

#include "rgs/rational.hpp"
#include "rgs/weights.hpp"

namespace rgs {

// Conjugation-invariant element of C[GL_n] written in the Schur basis:
// a finite map DominantWeight -> exact rational. Zero coefficients are
// never stored.
class ClassFunction {
 public:
  using TermMap = std::map<DominantWeight, Rat, WeightOrder>;

  explicit ClassFunction(int n) : n_(n) {}
  static ClassFunction schur(const DominantWeight& alpha, Rat coeff = Rat(1));

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coeff(const DominantWeight& alpha) const;
  void add_term(const DominantWeight& alpha, const Rat& c);

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  ClassFunction& operator*=(const Rat& c);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend ClassFunction operator*(ClassFunction a, const Rat& c) { return a *= c; }

  bool operator==(const ClassFunction& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  std::string to_string() const;

 private:
  int n_;
  TermMap terms_;
};

// Littlewood-Richardson coefficient c_{alpha,beta}^{gamma} for nonnegative
// partitions, by counting LR skew tableaux of shape gamma/alpha and content
// beta. Memoized; thread safe.
Int lr_coefficient(const DominantWeight& alpha, const DominantWeight& beta,
                   const DominantWeight& gamma);

// Schur expansion of s_alpha * s_beta in GL_n, negative parts handled by
// det-shift normalization.
ClassFunction lr_multiply(const DominantWeight& alpha, const DominantWeight& beta);
ClassFunction lr_multiply(const ClassFunction& f, const ClassFunction& g);

// Multiplicity of the trivial representation in the tensor product of the
// irreducibles labelled by `weights` (all of length n).
Int invariant_dim(const std::vector<DominantWeight>& weights, int n);

// s_alpha(x_1,...,x_n), exact. Bialternant ratio at distinct points,
// Jacobi-Trudi in complete homogeneous functions when points collide.
// A zero coordinate with a genuinely negative weight is a domain error.
Rat schur_eval(const DominantWeight& alpha, const std::vector<Rat>& x);
std::complex<double> schur_eval(const DominantWeight& alpha,
                                const std::vector<std::complex<double>>& x);

// s_alpha(X) for a square matrix X, through power sums and Newton's
// identities; exact for rational X (X must be invertible if alpha has
// negative parts).
Rat schur_of_matrix(const DominantWeight& alpha, const std::vector<std::vector<Rat>>& x);
std::complex<double> schur_of_matrix(
    const DominantWeight& alpha,
    const std::vector<std::vector<std::complex<double>>>& x);

// Dimension w_alpha of the S_m irreducible attached to a partition alpha of m.
Int symmetric_group_dim(const DominantWeight& alpha);

// Schur expansion of tr(x)^m on GL_n: sum over |alpha| = m of w_alpha s_alpha.
ClassFunction power_trace_expand(long m, int n);

// The invariant derivative D = sum_i d/dt_i at character level:
// D s_alpha = sum over beta = alpha - e_i of (alpha_i + n - i) s_beta.
ClassFunction apply_D(const ClassFunction& f);

}  // namespace rgs

#endif  // RGS_SYMFUNC_HPP
