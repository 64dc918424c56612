#include "rgs/gammafn.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rgs {

void GammaValue::mul_rat(const Rat& r) {
  rational_part_ *= r;
  if (rational_part_ == 0) args_.clear();
}

void GammaValue::mul_gamma(const Rat& a, long exp) {
  if (is_zero() || exp == 0) return;
  if (is_integer(a)) throw std::invalid_argument("mul_gamma: integer argument not reduced");
  // reduce to fractional part in (0,1) by Gamma(z+1) = z Gamma(z)
  Rat f = a - Rat(rat_floor(a));
  // Gamma(a) = Gamma(f) * prod_{i=0..k-1} (f+i) for a = f+k, k >= 0
  // Gamma(a) = Gamma(f) / prod_{i=k..-1} (f+i) for k < 0
  Int k = rat_floor(a);
  Rat corr(1);
  if (k >= 0) {
    for (Int i(0); i < k; ++i) corr *= f + Rat(i);
  } else {
    Rat div(1);
    for (Int i = k; i < 0; ++i) div *= f + Rat(i);
    corr /= div;
  }
  mul_rat(rat_pow(corr, exp));
  long e = (args_[f] += exp);
  if (e == 0) args_.erase(f);
}

GammaValue& GammaValue::operator*=(const GammaValue& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) {
    *this = zero();
    return *this;
  }
  rational_part_ *= o.rational_part_;
  for (auto& [a, e] : o.args_) {
    long ne = (args_[a] += e);
    if (ne == 0) args_.erase(a);
  }
  return *this;
}

GammaValue GammaValue::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero GammaValue");
  GammaValue out(Rat(1) / rational_part_);
  for (auto& [a, e] : args_) out.args_.emplace(a, -e);
  return out;
}

Rat GammaValue::to_rational() const {
  if (!is_rational()) throw std::domain_error("GammaValue carries gamma factors");
  return rational_part_;
}

double GammaValue::to_double() const {
  double v = rgs::to_double(rational_part_);
  for (auto& [a, e] : args_) v *= std::pow(std::tgamma(rgs::to_double(a)), double(e));
  return v;
}

std::string GammaValue::to_string() const {
  std::ostringstream os;
  os << rat_string(rational_part_);
  for (auto& [a, e] : args_) {
    os << "*G(" << rat_string(a) << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::optional<GammaValue> gamma_n(const ShiftedWeight& alpha) {
  const int n = alpha.n();
  GammaValue out = GammaValue::one();
  for (int j = 1; j <= n; ++j) {
    Rat a = alpha.entry(j - 1) + Rat(n - j);
    if (is_integer(a)) {
      if (a <= 0) return std::nullopt;
      Int f = factorial(static_cast<unsigned long>(a.get_num().get_ui() - 1));
      out.mul_rat(Rat(f));
    } else {
      out.mul_gamma(a);
    }
  }
  return out;
}

GammaValue reciprocal_gamma_n(const ShiftedWeight& alpha) {
  auto g = gamma_n(alpha);
  if (!g) return GammaValue::zero();
  return g->reciprocal();
}

Rat pochhammer(const Rat& a, long m) {
  if (m < 0) throw std::domain_error("pochhammer: negative length");
  Rat p(1);
  for (long i = 0; i < m; ++i) p *= a + Rat(i);
  return p;
}

Rat matrix_pochhammer(const Rat& a, const DominantWeight& mu) {
  if (!mu.is_nonnegative()) throw std::domain_error("matrix_pochhammer: mu must be >= 0");
  const int n = mu.n();
  Rat p(1);
  for (int j = 1; j <= n; ++j) p *= pochhammer(a + Rat(n - j), mu[j - 1]);
  return p;
}

Rat divided_power_coeff(const DominantWeight& alpha) {
  if (!alpha.is_nonnegative()) return Rat(0);
  const int n = alpha.n();
  Rat den(1);
  for (int j = 1; j <= n; ++j)
    den *= Rat(factorial(static_cast<unsigned long>(alpha[j - 1] + n - j)));
  return Rat(1) / den;
}

}  // namespace rgs
