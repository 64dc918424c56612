#ifndef RGS_GAMMAFN_HPP
#define RGS_GAMMAFN_HPP

#include <map>
#include <optional>
#include <string>

#include "rgs/rational.hpp"
#include "rgs/weights.hpp"

namespace rgs {

// Exact value of a product  rational_part * prod Gamma(arg)^exp  with every
// arg a non-integer rational in (0,1); integer-argument gamma factors are
// always folded into rational_part. The zero value has empty gamma_args and
// rational_part 0 (this is what 1/Gamma gives at a pole).
class GammaValue {
 public:
  GammaValue() : rational_part_(0) {}
  explicit GammaValue(Rat r) : rational_part_(std::move(r)) {}

  static GammaValue zero() { return GammaValue(); }
  static GammaValue one() { return GammaValue(Rat(1)); }

  const Rat& rational_part() const { return rational_part_; }
  const std::map<Rat, long>& gamma_args() const { return args_; }
  bool is_zero() const { return rational_part_ == 0; }
  bool is_rational() const { return args_.empty(); }

  void mul_rat(const Rat& r);
  // multiply by Gamma(a)^exp for rational a; a must not be a nonpositive
  // integer (poles are handled by the callers).
  void mul_gamma(const Rat& a, long exp = 1);

  GammaValue& operator*=(const GammaValue& o);
  friend GammaValue operator*(GammaValue a, const GammaValue& b) { return a *= b; }

  // Exact reciprocal; *this must be nonzero.
  GammaValue reciprocal() const;

  // Exact ratio; defined whenever o is nonzero. The result is rational iff
  // the gamma argument multisets cancel.
  GammaValue ratio(const GammaValue& o) const { return *this * o.reciprocal(); }

  // Exact rational value; throws unless is_rational().
  Rat to_rational() const;

  bool operator==(const GammaValue& o) const {
    return rational_part_ == o.rational_part_ && args_ == o.args_;
  }

  double to_double() const;
  std::string to_string() const;

 private:
  Rat rational_part_;
  std::map<Rat, long> args_;  // arg in (0,1) -> exponent, never zero
};

// Gamma_n(alpha) = prod_j Gamma(alpha_j + n - j); nullopt marks a pole
// (some argument a nonpositive integer).
std::optional<GammaValue> gamma_n(const ShiftedWeight& alpha);

// 1/Gamma_n(alpha); exactly zero at poles of Gamma_n.
GammaValue reciprocal_gamma_n(const ShiftedWeight& alpha);

// (a)_m = a(a+1)...(a+m-1).
Rat pochhammer(const Rat& a, long m);

// [a]_mu = prod_j (a + n - j)_{mu_j} for a nonnegative mu of length n.
Rat matrix_pochhammer(const Rat& a, const DominantWeight& mu);

// 1/Gamma_n(alpha+1) as an exact rational; zero unless alpha >= 0.
Rat divided_power_coeff(const DominantWeight& alpha);

}  // namespace rgs

#endif  // RGS_GAMMAFN_HPP
