#ifndef RGS_POLYTOPE_HPP
#define RGS_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rgs/groupmodel.hpp"
#include "rgs/qlinalg.hpp"
#include "rgs/rational.hpp"

namespace rgs {

struct Facet {
  QVec normal;   // outward: <normal, x> <= offset on the polytope
  Rat offset;
  std::vector<int> points;  // indices of input points on the hyperplane
};

struct Face {
  std::vector<int> vertices;  // indices into LatticePolytope::vertices()
  int dim = -1;               // -1 is the empty face
};

// Convex hull of an exact rational point set, with facet and face lattice
// enumeration done by brute force over point subsets. Adequate for ambient
// dimension <= 6 and a few dozen points.
class LatticePolytope {
 public:
  static LatticePolytope from_points(const std::vector<QVec>& points, int max_ambient_dim = 8);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<QVec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // graded face list, including the empty face and the polytope itself
  const std::vector<Face>& faces() const { return faces_; }

  long face_count(bool include_empty) const;

  // simplices as vertex index lists (dim+1 entries each), a triangulation of
  // the polytope obtained by pulling from the lowest-index vertex
  std::vector<std::vector<int>> triangulate() const;

 private:
  int ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<QVec> vertices_;
  std::vector<Facet> facets_;
  std::vector<Face> faces_;
};

// Positive coroots and characteristic exponents of H acting on its weight
// space, plus the Weyl group as coordinate permutations.
struct RootDataA {
  std::vector<QVec> pos_coroots;       // linear functionals
  std::vector<long> char_exponents;    // d_i
  std::vector<std::vector<int>> weyl;  // coordinate permutations, identity included
};
RootDataA root_data(const GroupSpec& h);

// Newton polytope of (H, A): convex hull of all weights of all omega in A.
LatticePolytope weight_polytope(const GroupSpec& h, const std::vector<RepSpec>& a);

struct FaceOrbit {
  Face representative;
  long orbit_size = 1;
  int dim = -1;
};

// W-orbits on faces, empty face included (it is always its own orbit).
std::vector<FaceOrbit> face_orbits(const LatticePolytope& p,
                                   const std::vector<std::vector<int>>& weyl);

// Degree of the compactification attached to (Q_A, root data):
//   (dim Q + 2 |R_+|)! / ( |W| * (prod (d_i - 1)!)^2 )
//     * integral over Q of prod_{alpha in R_+} <alpha^vee, lambda>^2
// with the Lebesgue measure normalized to the lattice of integer points of
// the direction space of Q. The toric specialization (R_+ empty) is the
// lattice-normalized volume times (dim Q)!.
Rat kazarnovskii_degree(const LatticePolytope& p, const RootDataA& roots);

struct NonresonanceReport {
  bool nonresonant = false;
  std::optional<int> witness_facet;  // facet index with chi in Lambda + Lin
};

// chi nonresonant iff chi avoids Lambda + Lin(Gamma) for every facet Gamma
// of the cone over Q_A.
NonresonanceReport nonresonant_check(const GroupSpec& h, const std::vector<RepSpec>& a,
                                     const Character& chi);

// Toric cobase criterion: B is a cobase iff A - B is affinely independent.
bool toric_cobase_check(const std::vector<std::vector<long>>& a_weights,
                        const std::vector<bool>& in_b);

}  // namespace rgs

#endif  // RGS_POLYTOPE_HPP
