#ifndef RGS_QLINALG_HPP
#define RGS_QLINALG_HPP

#include <optional>
#include <vector>

#include "rgs/rational.hpp"

namespace rgs {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;    // row major
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

// Row-reduce in place; returns pivot column per pivot row.
std::vector<size_t> rref(QMat& m);

int rank(QMat m);

// Solve A x = b. Returns nullopt if inconsistent, otherwise a particular
// solution; kernel (if requested) receives a basis of ker(A).
std::optional<QVec> solve(const QMat& a, const QVec& b, QMat* kernel = nullptr);

// Basis of ker(A) for a matrix with ncols columns (A may have zero rows).
QMat kernel_basis(const QMat& a, size_t ncols);

// Exact inverse of a square rational matrix; nullopt when singular.
std::optional<QMat> inverse(const QMat& a);

QVec mat_vec(const QMat& a, const QVec& x);
QMat mat_mul(const QMat& a, const QMat& b);

// Smith normal form: returns diag entries d_1 | d_2 | ... of U*A*V along with
// unimodular U (rows transform) and V (columns transform), U*A*V = D.
struct SmithResult {
  ZMat u, v;       // unimodular
  std::vector<Int> diag;
  int rank = 0;
};
SmithResult smith_normal_form(ZMat a);

// Basis of the saturation (Z^r intersect Q-span of the given integer
// vectors): each returned vector is primitive and they generate the full
// lattice of integer points of the span.
ZMat saturation_basis(const ZMat& generators, int ambient_dim);

// Does an integer solution x of A x = b exist?
bool has_integer_solution(const ZMat& a, const ZVec& b);

}  // namespace rgs

#endif  // RGS_QLINALG_HPP
