#ifndef RGS_RATIONAL_HPP
#define RGS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgs {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor of a rational as an exact integer.
inline Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return f;
}

inline Int factorial(unsigned long m) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline Rat rat_pow(const Rat& q, long e) {
  if (e == 0) return Rat(1);
  if (q == 0) {
    if (e < 0) throw std::domain_error("0 raised to a negative power");
    return Rat(0);
  }
  Rat base = e > 0 ? q : Rat(1) / q;
  unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat out(1);
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

inline double to_double(const Rat& q) { return q.get_d(); }

inline std::string rat_string(const Rat& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace rgs

#endif  // RGS_RATIONAL_HPP
