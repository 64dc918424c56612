#ifndef RGS_GAMMASERIES_HPP
#define RGS_GAMMASERIES_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "rgs/gammafn.hpp"
#include "rgs/gl2.hpp"
#include "rgs/groupmodel.hpp"
#include "rgs/haarint.hpp"
#include "rgs/symfunc.hpp"
#include "rgs/weights.hpp"

namespace rgs {

enum class Backend { kToric, kDiagonalPair, kGl2Triple };

std::string backend_name(Backend b);
std::optional<Backend> backend_from_name(const std::string& name);

struct SeriesSpec {
  GroupSpec h;
  std::vector<RepSpec> reps;
  std::vector<Rat> s;   // one shift per representation
  Backend backend = Backend::kToric;
  long truncation = 0;  // bound on sum |alpha(omega)|
};

struct SeriesTerm {
  SeriesIndex index;
  GammaValue coeff;   // d(alpha) * prod_omega 1/Gamma_{d(omega)}(alpha+s+1)
  Int inv_dim;        // dim of H-invariants, >= 1
};

// One complex matrix per representation (1x1 for characters), the argument
// of the series. Branches of det(a_omega)^{s_omega} are principal.
struct EvalPoint {
  std::vector<CMat> mats;
};

class GammaSeries {
 public:
  static GammaSeries build(SeriesSpec spec);

  const SeriesSpec& spec() const { return spec_; }
  const std::vector<SeriesTerm>& terms() const { return terms_; }

  std::complex<double> evaluate(const EvalPoint& p) const;

  // Exact value for rational arguments; requires rational s and a backend
  // with exact invariant factors (toric or diagonal-pair).
  Rat evaluate_exact(const std::vector<QMat>& mats) const;

 private:
  SeriesSpec spec_;
  std::vector<SeriesTerm> terms_;
  // diagonal-pair bookkeeping: positions of the two block reps
  int pair_first_ = -1, pair_second_ = -1;

  friend struct SeriesOps;
};

struct ShiftInvarianceReport {
  bool holds = false;
  std::string witness;  // first mismatching term, when not
};
// Prop 5.6.4(a): Phi_{s+s'} = Phi_s termwise under alpha -> alpha - s',
// for integral s' in L_0.
ShiftInvarianceReport shift_invariance_check(const SeriesSpec& spec, const std::vector<Rat>& sp);

// (6.1.15)-type series: sum over nonneg mu of
//   (alpha)_{|mu|} [beta]_mu / ((gamma)_{|mu|} |mu|!) w_mu s_mu.
// Throws on a (gamma)_m pole inside the truncation window.
ClassFunction f21cal_coefficients(const Rat& alpha, const Rat& beta, const Rat& gamma, int n,
                                  long truncation);
// (6.1.16): [alpha]_mu [beta]_mu / ([gamma]_mu |mu|!) w_mu s_mu.
ClassFunction f21jbl_coefficients(const Rat& alpha, const Rat& beta, const Rat& gamma, int n,
                                  long truncation);
// The (p+1)Fp family: scalar Pochhammers on all but the last upper index.
ClassFunction fpq_coefficients(const std::vector<Rat>& upper, const std::vector<Rat>& lower,
                               int n, long truncation);

std::complex<double> evaluate_coefficients(const ClassFunction& coeffs,
                                           const std::vector<std::complex<double>>& eigenvalues);
Rat evaluate_coefficients(const ClassFunction& coeffs, const std::vector<Rat>& eigenvalues);

struct GaussReductionReport {
  bool holds = false;
  Rat fitted_constant;
  std::string witness;
};
// Termwise identity between the s3 = 0 specialization of the Gauss-type
// Gamma-series and const * f21cal(-s1, 1-n-s4, s2+1), checked exactly on
// |mu| <= truncation.
GaussReductionReport gauss_reduction_check(const Rat& s1, const Rat& s2, const Rat& s4, int n,
                                           long truncation);

struct TerminatingReport {
  long tau = 0;
  bool identically_zero = false;
  long term_count = 0;
  bool compared = false;       // an oracle comparison ran
  bool matches_oracle = false;
  Rat fitted_constant;
  std::string detail;
};
// Prop 5.8.3/5.8.5 on integral shifts: termination, vanishing for tau < 0,
// and exact comparison against the compact-group Euler integral at random
// rational points, up to one fitted constant.
TerminatingReport terminating_series_check(const SeriesSpec& spec, std::uint64_t seed = 1);

// Phi_s^{(gamma)} of (5.9.1')-(5.9.1''), built over the same enumeration as
// the plain series. All shifts must be integers.
GammaSeries deformed_series(const SeriesSpec& spec, size_t gamma_index);

struct DeformationSumReport {
  bool holds = false;
  bool oracle_exact = true;  // false if a psi-function term appeared
  std::string witness;
};
// (5.9.1): sum_gamma Phi_s^{(gamma)} equals the t-derivative of Phi_{s+t} at
// t = 0, termwise, checked against the exact first-order gamma expansion.
DeformationSumReport deformation_sum_check(const SeriesSpec& spec);

struct BatyrevReport {
  bool precondition_ok = false;
  bool compared = false;
  double series_value = 0.0;
  double integral_value = 0.0;
  double fitted_constant = 1.0;
  double abs_error = 0.0;
  std::string detail;
};
// (5.9.3)/(5.9.4): the deformed series in the a_0 direction against the
// geometric-series expansion of const * int d*x / f(x), at a dominant-a_0
// rational point. Toric data only.
BatyrevReport batyrev_series_check(const GroupSpec& h0, const std::vector<RepSpec>& a0,
                                   const std::vector<Rat>& point, long truncation);

struct ResidualReport {
  double pde_residual = 0.0;       // max over matrix entries
  double scaling_residual = 0.0;   // quasihomogeneity relations
  bool diverging = false;
};
// Finite-difference residual of the Gauss-type hypergeometric system on the
// diagonal-pair series at a numeric point.
ResidualReport system_residual(const GammaSeries& series, const EvalPoint& p, double step = 1e-4);

// The (H, A) data of the Gauss-type family: H = C* x C* x GL_n acting on
// {N^2, N L, N V, L V}; coordinates (a, b, C, D).
SeriesSpec gauss_family_spec(int n, const std::array<Rat, 4>& s, long truncation);

}  // namespace rgs

#endif  // RGS_GAMMASERIES_HPP
