#ifndef RGS_GL2_HPP
#define RGS_GL2_HPP

#include <array>
#include <complex>
#include <map>
#include <vector>

#include "rgs/haarint.hpp"
#include "rgs/rational.hpp"
#include "rgs/weights.hpp"

namespace rgs {

using C2Mat = std::array<std::array<std::complex<double>, 2>, 2>;

// Gelfand-Cetlin matrix element t^{(lambda)}_{km}(x) of GL_2, basis indices
// lambda_1 >= k, m >= lambda_2.
std::complex<double> gt_matrix_element(const DominantWeight& lambda, long k, long m,
                                       const C2Mat& x);

// Full representation matrix, rows and columns indexed by k - lambda_2
// running 0..lambda_1-lambda_2 (i.e. from the lowest GT index up).
std::vector<std::vector<std::complex<double>>> gt_rep_matrix(const DominantWeight& lambda,
                                                             const C2Mat& x);

// |lambda|+|mu|+|nu| = 0 and the three gaps satisfy the triangle
// inequalities.
bool triangle_check(const DominantWeight& lambda, const DominantWeight& mu,
                    const DominantWeight& nu);

// 3j-symbols of GL_2 in the Gelfand-Cetlin convention, one table per
// admissible triple. Keys are (i,j,k) with i+j+k = 0; the vector is unit
// normalized and the global sign makes the lexicographically largest support
// index positive.
using ThreeJTable = std::map<std::array<long, 3>, double>;
ThreeJTable threej_table(const DominantWeight& lambda, const DominantWeight& mu,
                         const DominantWeight& nu);

double threej(const DominantWeight& lambda, const DominantWeight& mu, const DominantWeight& nu,
              long i, long j, long k);

// Independent oracle: the normalized invariant vector computed from the
// exact rational null space of the raising and lowering operators on the
// weight-zero slice of the triple tensor product.
ThreeJTable threej_nullspace_oracle(const DominantWeight& lambda, const DominantWeight& mu,
                                    const DominantWeight& nu);

// Appell-type series of the five-representation GL_2 family: truncated sum
// over admissible (lambda, mu, nu) with the 3j-squared invariant factor.
struct AppellPoint {
  std::complex<double> a, b;
  C2Mat x, y, z;
};
struct AppellResult {
  std::complex<double> value = 0.0;
  long terms = 0;
  bool all_poles = false;  // every candidate term was killed by gamma poles
};
AppellResult appell_series(const std::array<Rat, 5>& s, const AppellPoint& p, long truncation);

}  // namespace rgs

#endif  // RGS_GL2_HPP
