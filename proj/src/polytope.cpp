#include "rgs/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rgs {

namespace {

QVec sub(const QVec& a, const QVec& b) {
  QVec d(a.size());
  for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// canonical integer form: clear denominators, divide by gcd
void canonicalize_functional(QVec& v, Rat& off) {
  Int lcm(1);
  auto fold = [&](const Rat& q) {
    Int den = q.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  };
  for (auto& q : v) fold(q);
  fold(off);
  Int gcd(0);
  auto fold2 = [&](const Rat& q) {
    Rat scaled = q * Rat(lcm);
    Int num = scaled.get_num();
    Int g;
    mpz_gcd(g.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    gcd = g;
  };
  for (auto& q : v) fold2(q);
  fold2(off);
  if (gcd == 0) gcd = 1;
  Rat scale = make_rat(lcm, gcd);
  for (auto& q : v) q *= scale;
  off *= scale;
}

void dedupe_points(std::vector<QVec>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

LatticePolytope LatticePolytope::from_points(const std::vector<QVec>& points_in,
                                             int max_ambient_dim) {
  if (points_in.empty()) throw std::invalid_argument("polytope needs at least one point");
  const int r = static_cast<int>(points_in[0].size());
  if (r > max_ambient_dim) throw std::runtime_error("polytope: ambient dimension over limit");
  std::vector<QVec> pts = points_in;
  dedupe_points(pts);

  LatticePolytope p;
  p.ambient_dim_ = r;

  // affine dimension
  QMat dirs;
  for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(sub(pts[i], pts[0]));
  const int d = dirs.empty() ? 0 : rank(dirs);
  p.dim_ = d;

  if (d == 0) {
    p.vertices_ = {pts[0]};
    Face empty;
    Face pt;
    pt.vertices = {0};
    pt.dim = 0;
    p.faces_ = {empty, pt};
    return p;
  }

  const size_t npts = pts.size();
  // enumerate candidate facet hyperplanes from d-subsets of points
  double work = 1;
  for (int i = 0; i < d; ++i) work *= static_cast<double>(npts - static_cast<size_t>(i)) / (i + 1);
  if (work > 2e6) throw std::runtime_error("polytope: too many candidate facets");

  std::map<std::vector<int>, Facet> facet_by_support;
  // basis of the direction space, computed once
  QMat dirbasis = dirs;
  {
    std::vector<size_t> piv = rref(dirbasis);
    dirbasis.resize(piv.size());
  }
  auto process_subset = [&](const std::vector<int>& s) {
    // hyperplane through the points of s within the affine span:
    // normal eta in span(dirs) with <eta, p_i - p_0> = 0.
    QMat eqs;
    for (size_t i = 1; i < s.size(); ++i)
      eqs.push_back(sub(pts[static_cast<size_t>(s[i])], pts[static_cast<size_t>(s[0])]));
    // eta = sum_k c_k dirbasis[k]; equations: <eta, e_row> = 0 for e in eqs
    QMat sys(eqs.size(), QVec(dirbasis.size(), Rat(0)));
    for (size_t e = 0; e < eqs.size(); ++e)
      for (size_t k = 0; k < dirbasis.size(); ++k) sys[e][k] = dot(dirbasis[k], eqs[e]);
    QMat ker = kernel_basis(sys, dirbasis.size());
    if (ker.size() != 1) return;  // not a hyperplane of the span (degenerate subset)
    QVec eta(static_cast<size_t>(r), Rat(0));
    for (size_t k = 0; k < dirbasis.size(); ++k)
      for (size_t j = 0; j < static_cast<size_t>(r); ++j) eta[j] += ker[0][k] * dirbasis[k][j];
    Rat off = dot(eta, pts[static_cast<size_t>(s[0])]);
    // side test
    bool any_pos = false, any_neg = false;
    for (auto& q : pts) {
      Rat v = dot(eta, q) - off;
      if (v > 0) any_pos = true;
      if (v < 0) any_neg = true;
    }
    if (any_pos && any_neg) return;
    if (any_pos) {  // flip outward
      for (auto& q : eta) q = -q;
      off = -off;
    }
    canonicalize_functional(eta, off);
    std::vector<int> support;
    for (size_t i = 0; i < npts; ++i)
      if (dot(eta, pts[i]) == off) support.push_back(static_cast<int>(i));
    facet_by_support.emplace(support, Facet{eta, off, support});
  };

  // iterate d-subsets
  std::vector<int> idx(static_cast<size_t>(d));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    process_subset(idx);
    int i = d - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<int>(npts) - d + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < d; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }

  // vertices: points whose minimal face (intersection of incident facets) is
  // a single point.
  std::vector<std::set<int>> facet_sets;
  for (auto& [sup, f] : facet_by_support) facet_sets.emplace_back(sup.begin(), sup.end());
  std::vector<int> vertex_of_point(npts, -1);
  std::vector<QVec> verts;
  for (size_t i = 0; i < npts; ++i) {
    std::set<int> meet;
    bool first = true;
    for (auto& fs : facet_sets) {
      if (!fs.count(static_cast<int>(i))) continue;
      if (first) {
        meet = fs;
        first = false;
      } else {
        std::set<int> tmp;
        std::set_intersection(meet.begin(), meet.end(), fs.begin(), fs.end(),
                              std::inserter(tmp, tmp.begin()));
        meet = std::move(tmp);
      }
    }
    if (!first && meet.size() == 1 && *meet.begin() == static_cast<int>(i)) {
      vertex_of_point[i] = static_cast<int>(verts.size());
      verts.push_back(pts[i]);
    }
  }
  p.vertices_ = verts;

  auto to_vertex_set = [&](const std::vector<int>& point_idxs) {
    std::vector<int> vs;
    for (int pi : point_idxs)
      if (vertex_of_point[static_cast<size_t>(pi)] >= 0)
        vs.push_back(vertex_of_point[static_cast<size_t>(pi)]);
    std::sort(vs.begin(), vs.end());
    return vs;
  };

  for (auto& [sup, f] : facet_by_support) {
    Facet g = f;
    g.points = to_vertex_set(sup);
    p.facets_.push_back(std::move(g));
  }

  // face lattice: close facet supports under intersection (as point sets),
  // then convert to vertex sets and grade by affine rank.
  std::set<std::vector<int>> closed;
  std::vector<std::vector<int>> frontier;
  for (auto& fs : facet_sets) {
    std::vector<int> v(fs.begin(), fs.end());
    if (closed.insert(v).second) frontier.push_back(v);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (auto& f : frontier)
      for (auto& g : facet_sets) {
        std::vector<int> meet;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
        if (meet.size() == f.size()) continue;
        if (closed.insert(meet).second) next.push_back(meet);
      }
    frontier = std::move(next);
  }

  auto affine_rank = [&](const std::vector<int>& point_idxs) -> int {
    if (point_idxs.empty()) return -1;
    QMat m;
    for (size_t i = 1; i < point_idxs.size(); ++i)
      m.push_back(sub(pts[static_cast<size_t>(point_idxs[i])],
                      pts[static_cast<size_t>(point_idxs[0])]));
    return m.empty() ? 0 : rank(m);
  };

  std::set<std::pair<int, std::vector<int>>> face_keys;
  // whole polytope
  {
    std::vector<int> all(npts);
    std::iota(all.begin(), all.end(), 0);
    face_keys.emplace(d, to_vertex_set(all));
  }
  for (auto& c : closed) face_keys.emplace(affine_rank(c), to_vertex_set(c));
  // empty face
  face_keys.emplace(-1, std::vector<int>{});

  for (auto& [fd, vs] : face_keys) {
    Face face;
    face.dim = fd;
    face.vertices = vs;
    p.faces_.push_back(std::move(face));
  }
  std::sort(p.faces_.begin(), p.faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  return p;
}

long LatticePolytope::face_count(bool include_empty) const {
  long c = static_cast<long>(faces_.size());
  return include_empty ? c : c - 1;
}

std::vector<std::vector<int>> LatticePolytope::triangulate() const {
  // pulling triangulation from the lowest-index vertex of each face
  std::map<std::pair<int, std::vector<int>>, std::vector<std::vector<int>>> memo;

  auto subfaces = [&](const Face& f) {
    std::vector<const Face*> out;
    for (auto& g : faces_) {
      if (g.dim != f.dim - 1) continue;
      if (std::includes(f.vertices.begin(), f.vertices.end(), g.vertices.begin(),
                        g.vertices.end()))
        out.push_back(&g);
    }
    return out;
  };

  auto rec = [&](auto&& self, const Face& f) -> std::vector<std::vector<int>> {
    if (f.dim <= 0) {
      if (f.dim == 0) return {{f.vertices[0]}};
      return {};
    }
    auto key = std::make_pair(f.dim, f.vertices);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int v0 = f.vertices.front();
    std::vector<std::vector<int>> out;
    for (const Face* g : subfaces(f)) {
      if (std::binary_search(g->vertices.begin(), g->vertices.end(), v0)) continue;
      for (auto s : self(self, *g)) {
        s.push_back(v0);
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
    }
    memo[key] = out;
    return out;
  };

  const Face* top = nullptr;
  for (auto& f : faces_)
    if (f.dim == dim_) top = &f;
  if (!top) return {};
  if (dim_ == 0) return {{0}};
  return rec(rec, *top);
}

RootDataA root_data(const GroupSpec& h) {
  RootDataA rd;
  const int r = h.weight_dim();
  for (int j = 0; j < h.torus_rank; ++j) rd.char_exponents.push_back(1);
  for (size_t b = 0; b < h.gl_blocks.size(); ++b) {
    const int nb = h.gl_blocks[b];
    const int off = h.block_offset(static_cast<int>(b));
    for (int i = 0; i < nb; ++i)
      for (int j = i + 1; j < nb; ++j) {
        QVec v(static_cast<size_t>(r), Rat(0));
        v[static_cast<size_t>(off + i)] = Rat(1);
        v[static_cast<size_t>(off + j)] = Rat(-1);
        rd.pos_coroots.push_back(std::move(v));
      }
    for (int i = 1; i <= nb; ++i) rd.char_exponents.push_back(i);
  }
  // Weyl group: product of symmetric groups permuting block coordinates
  std::vector<std::vector<int>> elems;
  std::vector<int> id(static_cast<size_t>(r));
  std::iota(id.begin(), id.end(), 0);
  elems.push_back(id);
  for (size_t b = 0; b < h.gl_blocks.size(); ++b) {
    const int nb = h.gl_blocks[b];
    const int off = h.block_offset(static_cast<int>(b));
    std::vector<int> perm(static_cast<size_t>(nb));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> block_perms;
    do {
      block_perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<std::vector<int>> next;
    for (auto& e : elems)
      for (auto& bp : block_perms) {
        std::vector<int> c = e;
        for (int i = 0; i < nb; ++i) c[static_cast<size_t>(off + i)] = off + bp[static_cast<size_t>(i)];
        next.push_back(std::move(c));
      }
    elems = std::move(next);
  }
  rd.weyl = std::move(elems);
  return rd;
}

LatticePolytope weight_polytope(const GroupSpec& h, const std::vector<RepSpec>& a) {
  std::vector<QVec> pts;
  for (auto& rep : a)
    for (auto& w : rep.weights(h)) {
      QVec q(w.size());
      for (size_t j = 0; j < w.size(); ++j) q[j] = Rat(w[j]);
      pts.push_back(std::move(q));
    }
  return LatticePolytope::from_points(pts);
}

std::vector<FaceOrbit> face_orbits(const LatticePolytope& p,
                                   const std::vector<std::vector<int>>& weyl) {
  // vertex permutation induced by each coordinate permutation
  const auto& verts = p.vertices();
  std::vector<std::vector<int>> vperms;
  for (auto& w : weyl) {
    std::vector<int> vp(verts.size(), -1);
    bool ok = true;
    for (size_t i = 0; i < verts.size() && ok; ++i) {
      QVec img(verts[i].size());
      for (size_t j = 0; j < verts[i].size(); ++j) img[static_cast<size_t>(w[j])] = verts[i][j];
      auto it = std::find(verts.begin(), verts.end(), img);
      if (it == verts.end())
        ok = false;
      else
        vp[i] = static_cast<int>(it - verts.begin());
    }
    if (!ok) throw std::invalid_argument("face_orbits: polytope is not W-invariant");
    vperms.push_back(std::move(vp));
  }

  std::map<std::vector<int>, std::pair<const Face*, std::set<std::vector<int>>>> orbits;
  for (auto& f : p.faces()) {
    std::vector<int> canon;
    std::set<std::vector<int>> images;
    bool first = true;
    for (auto& vp : vperms) {
      std::vector<int> img;
      img.reserve(f.vertices.size());
      for (int v : f.vertices) img.push_back(vp[static_cast<size_t>(v)]);
      std::sort(img.begin(), img.end());
      images.insert(img);
      if (first || img < canon) {
        canon = img;
        first = false;
      }
    }
    auto it = orbits.find(canon);
    if (it == orbits.end()) orbits.emplace(canon, std::make_pair(&f, std::move(images)));
  }
  std::vector<FaceOrbit> out;
  for (auto& [canon, val] : orbits) {
    FaceOrbit o;
    o.representative = *val.first;
    o.orbit_size = static_cast<long>(val.second.size());
    o.dim = val.first->dim;
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const FaceOrbit& a, const FaceOrbit& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.representative.vertices < b.representative.vertices;
  });
  return out;
}

namespace {

using Monomial = std::vector<int>;
using Poly = std::map<Monomial, Rat>;

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      auto [it, fresh] = c.emplace(m, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) c.erase(it);
      }
    }
  return c;
}

}  // namespace

Rat kazarnovskii_degree(const LatticePolytope& p, const RootDataA& roots) {
  const int d = p.dim();
  const size_t nroots = roots.pos_coroots.size();

  // lattice basis of the direction space of p
  ZMat gens;
  const auto& verts = p.vertices();
  for (size_t i = 1; i < verts.size(); ++i) {
    QVec diff = sub(verts[i], verts[0]);
    Int lcm(1);
    for (auto& q : diff) {
      Int den = q.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    ZVec zi(diff.size());
    for (size_t j = 0; j < diff.size(); ++j) {
      Rat scaled = diff[j] * Rat(lcm);
      zi[j] = scaled.get_num();
    }
    gens.push_back(std::move(zi));
  }

  Rat total(0);
  if (d == 0) {
    Rat f(1);
    for (auto& cr : roots.pos_coroots) {
      Rat v = dot(cr, verts[0]);
      f *= v * v;
    }
    total = f;
  } else {
    ZMat basis = saturation_basis(gens, p.ambient_dim());
    if (static_cast<int>(basis.size()) != d)
      throw std::runtime_error("kazarnovskii_degree: lattice basis rank mismatch");
    QMat basis_q(basis.size(), QVec(static_cast<size_t>(p.ambient_dim())));
    for (size_t i = 0; i < basis.size(); ++i)
      for (size_t j = 0; j < basis[i].size(); ++j) basis_q[i][j] = Rat(basis[i][j]);

    // coordinates of a direction vector in the lattice basis
    auto coords = [&](const QVec& dir) {
      QMat sys(static_cast<size_t>(p.ambient_dim()), QVec(basis.size()));
      for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < static_cast<size_t>(p.ambient_dim()); ++j) sys[j][i] = basis_q[i][j];
      auto sol = solve(sys, dir);
      if (!sol) throw std::runtime_error("kazarnovskii_degree: direction outside lattice span");
      return *sol;
    };

    for (auto& simplex : p.triangulate()) {
      const QVec& v0 = verts[static_cast<size_t>(simplex[0])];
      std::vector<QVec> edges;
      for (size_t i = 1; i < simplex.size(); ++i)
        edges.push_back(sub(verts[static_cast<size_t>(simplex[i])], v0));
      // Jacobian |det| of edge coordinates in the lattice basis
      QMat t(edges.size());
      for (size_t i = 0; i < edges.size(); ++i) t[i] = coords(edges[i]);
      // determinant by fraction-free elimination on the small matrix
      Rat det(1);
      {
        QMat m = t;
        const size_t n = m.size();
        for (size_t c = 0; c < n; ++c) {
          size_t piv = c;
          while (piv < n && m[piv][c] == 0) ++piv;
          if (piv == n) {
            det = Rat(0);
            break;
          }
          if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
          }
          det *= m[c][c];
          for (size_t rr = c + 1; rr < n; ++rr) {
            if (m[rr][c] == 0) continue;
            Rat f = m[rr][c] / m[c][c];
            for (size_t cc = c; cc < n; ++cc) m[rr][cc] -= f * m[c][cc];
          }
        }
      }
      if (det == 0) continue;
      if (det < 0) det = -det;

      // integrand prod <alpha,.>^2 composed with v0 + sum t_i e_i
      Poly f{{Monomial(static_cast<size_t>(d), 0), Rat(1)}};
      for (auto& cr : roots.pos_coroots) {
        Poly lin;
        Monomial m0(static_cast<size_t>(d), 0);
        Rat c0 = dot(cr, v0);
        if (c0 != 0) lin[m0] = c0;
        for (int i = 0; i < d; ++i) {
          Rat ci = dot(cr, edges[static_cast<size_t>(i)]);
          if (ci == 0) continue;
          Monomial mi(static_cast<size_t>(d), 0);
          mi[static_cast<size_t>(i)] = 1;
          lin[mi] = ci;
        }
        f = poly_mul(f, poly_mul(lin, lin));
        if (f.empty()) break;
      }
      // integrate monomials over the standard simplex:
      // int t^a dt = prod a_i! / (d + sum a_i)!
      Rat simplex_val(0);
      for (auto& [m, c] : f) {
        Int num(1);
        long s = 0;
        for (int e : m) {
          num *= factorial(static_cast<unsigned long>(e));
          s += e;
        }
        Int den = factorial(static_cast<unsigned long>(d + s));
        simplex_val += c * make_rat(num, den);
      }
      total += det * simplex_val;
    }
  }

  Int cw(1);
  for (long e : roots.char_exponents) cw *= factorial(static_cast<unsigned long>(e - 1));
  Int wo(static_cast<long>(roots.weyl.size()));
  if (wo == 0) wo = 1;
  Rat norm = Rat(factorial(static_cast<unsigned long>(d + 2 * static_cast<long>(nroots)))) /
             (Rat(wo) * Rat(cw) * Rat(cw));
  return norm * total;
}

NonresonanceReport nonresonant_check(const GroupSpec& h, const std::vector<RepSpec>& a,
                                     const Character& chi) {
  // facets of the cone C_A (apex 0 over Q_A) are the facets of
  // conv({0} u weights) whose hyperplane passes through the origin
  std::vector<QVec> pts;
  pts.emplace_back(static_cast<size_t>(h.weight_dim()), Rat(0));
  for (auto& rep0 : a)
    for (auto& w : rep0.weights(h)) {
      QVec qv(w.size());
      for (size_t j = 0; j < w.size(); ++j) qv[j] = Rat(w[j]);
      pts.push_back(std::move(qv));
    }
  LatticePolytope q = LatticePolytope::from_points(pts);
  QVec chi_vec = chi.to_weight_vector(h);
  const int r = h.weight_dim();
  NonresonanceReport rep;

  for (size_t fi = 0; fi < q.facets().size(); ++fi) {
    const Facet& f = q.facets()[fi];
    if (f.offset != 0) continue;  // not a face of the cone
    ZMat span_gens;
    for (int vi : f.points) {
      const QVec& v = q.vertices()[static_cast<size_t>(vi)];
      Int lcm(1);
      for (auto& c : v) {
        Int den = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        lcm = lcm / g * den;
      }
      ZVec zi(v.size());
      for (size_t j = 0; j < v.size(); ++j) {
        Rat scaled = v[j] * Rat(lcm);
        zi[j] = scaled.get_num();
      }
      span_gens.push_back(std::move(zi));
    }
    // saturated annihilator lattice N of Lin(Gamma): chi in Lambda + Lin
    // iff <y, chi> is an integer for every y in N.
    QMat m(span_gens.size(), QVec(static_cast<size_t>(r)));
    for (size_t i = 0; i < span_gens.size(); ++i)
      for (size_t j = 0; j < static_cast<size_t>(r); ++j) m[i][j] = Rat(span_gens[i][j]);
    QMat ann = kernel_basis(m, static_cast<size_t>(r));
    ZMat ann_z;
    for (auto& y : ann) {
      QVec yy = y;
      Rat off(0);
      canonicalize_functional(yy, off);
      ZVec zi(yy.size());
      for (size_t j = 0; j < yy.size(); ++j) zi[j] = yy[j].get_num();
      ann_z.push_back(std::move(zi));
    }
    bool all_integral = true;
    if (!ann_z.empty()) {
      for (auto& y : saturation_basis(ann_z, r)) {
        Rat pairing(0);
        for (size_t j = 0; j < y.size(); ++j) pairing += Rat(y[j]) * chi_vec[j];
        if (!is_integer(pairing)) {
          all_integral = false;
          break;
        }
      }
    }
    if (all_integral) {
      rep.nonresonant = false;
      rep.witness_facet = static_cast<int>(fi);
      return rep;
    }
  }
  rep.nonresonant = true;
  return rep;
}

bool toric_cobase_check(const std::vector<std::vector<long>>& a_weights,
                        const std::vector<bool>& in_b) {
  if (a_weights.size() != in_b.size())
    throw std::invalid_argument("toric_cobase_check: size mismatch");
  std::vector<QVec> rest;
  for (size_t i = 0; i < a_weights.size(); ++i) {
    if (in_b[i]) continue;
    QVec v(a_weights[i].size());
    for (size_t j = 0; j < v.size(); ++j) v[j] = Rat(a_weights[i][j]);
    rest.push_back(std::move(v));
  }
  if (rest.size() <= 1) return true;
  QMat dirs;
  for (size_t i = 1; i < rest.size(); ++i) dirs.push_back(sub(rest[i], rest[0]));
  return rank(dirs) == static_cast<int>(rest.size()) - 1;
}

}  // namespace rgs
