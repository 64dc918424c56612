#ifndef RGS_GROUPMODEL_HPP
#define RGS_GROUPMODEL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgs/qlinalg.hpp"
#include "rgs/rational.hpp"
#include "rgs/symfunc.hpp"
#include "rgs/weights.hpp"

namespace rgs {

// H = (C*)^k x prod GL_{n_b}.
struct GroupSpec {
  int torus_rank = 0;
  std::vector<int> gl_blocks;

  int weight_dim() const;                 // k + sum n_b
  int block_offset(int b) const;          // first weight coordinate of block b
  long weyl_order() const;                // prod n_b!
};

// One irreducible of the supported class: a torus character, optionally
// tensored with det^twist x (standard rep) of a single GL block.
struct RepSpec {
  std::vector<long> torus_char;  // length torus_rank
  std::optional<int> block;      // index into gl_blocks
  long block_twist = 0;          // power of det on the block

  int dim(const GroupSpec& h) const;
  // all weights of the representation as vectors in the weight lattice of H
  std::vector<std::vector<long>> weights(const GroupSpec& h) const;
};

// Index of one candidate series term: a dominant weight per omega in A.
struct SeriesIndex {
  std::vector<DominantWeight> alphas;
  long total_size() const;
  std::string to_string() const;
};

enum class Homogeneity { kHomogeneous, kInhomogeneous };

// Homogeneous iff the all-ones scalar one-parameter subgroup of G lies in
// the image of H, i.e. the weight system pairs to a single nonzero value
// with some rational cocharacter.
Homogeneity check_homogeneity(const GroupSpec& h, const std::vector<RepSpec>& a);

// Adds one torus coordinate acting with weight 1 on every omega. Returns the
// input unchanged (flag false) when it is already homogeneous.
struct HomogenizeResult {
  GroupSpec h;
  std::vector<RepSpec> reps;
  bool changed = false;
};
HomogenizeResult homogenize(const GroupSpec& h0, const std::vector<RepSpec>& a0);

// chi is stored in integrated form: an exponent per torus coordinate and a
// det-exponent per GL block.
struct Character {
  QVec torus;   // length torus_rank
  QVec blocks;  // length #gl_blocks

  // as a vector on the full weight space (block value spread over the block)
  QVec to_weight_vector(const GroupSpec& h) const;
};

// Solution of  sum_omega s_omega tr(d rho_omega) = chi : a particular point
// plus a basis of the homogeneous solution space L_0.
struct LChiSpace {
  bool consistent = false;
  QVec particular;  // length |A|
  QMat kernel;      // basis of L_0
};
LChiSpace solve_L_chi(const GroupSpec& h, const std::vector<RepSpec>& a, const Character& chi);

// dim of H-invariants in tensor_omega Sigma^{alpha(omega)}(V_omega).
Int invariant_term_dim(const GroupSpec& h, const std::vector<RepSpec>& a,
                       const SeriesIndex& index);

// Label of an irreducible H-module within the supported class.
struct HLabel {
  std::vector<long> torus;              // torus character
  std::vector<DominantWeight> blocks;   // one dominant weight per block
  bool operator<(const HLabel& o) const;
  bool operator==(const HLabel& o) const { return torus == o.torus && blocks == o.blocks; }
  std::string to_string() const;
};

// All irreducible constituents of A-tensor-powers of total degree <= D.
std::set<HLabel> monoidal_closure_truncated(const GroupSpec& h, const std::vector<RepSpec>& a,
                                            long degree_bound);

}  // namespace rgs

#endif  // RGS_GROUPMODEL_HPP
