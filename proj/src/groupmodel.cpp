#include "rgs/groupmodel.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rgs {

int GroupSpec::weight_dim() const {
  int d = torus_rank;
  for (int n : gl_blocks) d += n;
  return d;
}

int GroupSpec::block_offset(int b) const {
  int off = torus_rank;
  for (int i = 0; i < b; ++i) off += gl_blocks[static_cast<size_t>(i)];
  return off;
}

long GroupSpec::weyl_order() const {
  long w = 1;
  for (int n : gl_blocks)
    for (int i = 2; i <= n; ++i) w *= i;
  return w;
}

int RepSpec::dim(const GroupSpec& h) const {
  return block ? h.gl_blocks[static_cast<size_t>(*block)] : 1;
}

std::vector<std::vector<long>> RepSpec::weights(const GroupSpec& h) const {
  const int r = h.weight_dim();
  std::vector<long> base(static_cast<size_t>(r), 0);
  for (int j = 0; j < h.torus_rank; ++j) base[static_cast<size_t>(j)] = torus_char[static_cast<size_t>(j)];
  if (!block) return {base};
  const int nb = h.gl_blocks[static_cast<size_t>(*block)];
  const int off = h.block_offset(*block);
  std::vector<std::vector<long>> out;
  for (int i = 0; i < nb; ++i) {
    std::vector<long> w = base;
    for (int j = 0; j < nb; ++j) w[static_cast<size_t>(off + j)] += block_twist;
    w[static_cast<size_t>(off + i)] += 1;
    out.push_back(std::move(w));
  }
  return out;
}

long SeriesIndex::total_size() const {
  long t = 0;
  for (auto& a : alphas) t += a.size();
  return t;
}

std::string SeriesIndex::to_string() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (i) os << ',';
    os << alphas[i].to_string();
  }
  os << ']';
  return os.str();
}

Homogeneity check_homogeneity(const GroupSpec& h, const std::vector<RepSpec>& a) {
  // gather all weights of all reps; homogeneous iff W v = (1,...,1) is
  // solvable over Q (then a rational cocharacter hits the scalars).
  QMat w;
  for (auto& rep : a)
    for (auto& row : rep.weights(h)) {
      QVec q(row.size());
      for (size_t j = 0; j < row.size(); ++j) q[j] = Rat(row[j]);
      w.push_back(std::move(q));
    }
  QVec ones(w.size(), Rat(1));
  return solve(w, ones) ? Homogeneity::kHomogeneous : Homogeneity::kInhomogeneous;
}

HomogenizeResult homogenize(const GroupSpec& h0, const std::vector<RepSpec>& a0) {
  HomogenizeResult res;
  if (check_homogeneity(h0, a0) == Homogeneity::kHomogeneous) {
    res.h = h0;
    res.reps = a0;
    res.changed = false;
    return res;
  }
  res.h = h0;
  res.h.torus_rank += 1;
  res.reps.reserve(a0.size());
  for (auto& rep : a0) {
    RepSpec r = rep;
    r.torus_char.insert(r.torus_char.begin(), 1);
    res.reps.push_back(std::move(r));
  }
  res.changed = true;
  return res;
}

QVec Character::to_weight_vector(const GroupSpec& h) const {
  QVec v(static_cast<size_t>(h.weight_dim()), Rat(0));
  for (int j = 0; j < h.torus_rank; ++j) v[static_cast<size_t>(j)] = torus[static_cast<size_t>(j)];
  for (size_t b = 0; b < h.gl_blocks.size(); ++b) {
    int off = h.block_offset(static_cast<int>(b));
    for (int j = 0; j < h.gl_blocks[b]; ++j) v[static_cast<size_t>(off + j)] = blocks[b];
  }
  return v;
}

LChiSpace solve_L_chi(const GroupSpec& h, const std::vector<RepSpec>& a, const Character& chi) {
  // One equation per torus coordinate and per block:
  //   torus j :  sum_omega s_omega c_j(omega) d(omega)      = chi.torus[j]
  //   block b :  sum_{omega on b} s_omega (twist*n_b + 1)    = chi.blocks[b]
  const size_t rows = static_cast<size_t>(h.torus_rank) + h.gl_blocks.size();
  QMat m(rows, QVec(a.size(), Rat(0)));
  QVec rhs(rows, Rat(0));
  for (size_t w = 0; w < a.size(); ++w) {
    const RepSpec& rep = a[w];
    long d = rep.dim(h);
    for (int j = 0; j < h.torus_rank; ++j)
      m[static_cast<size_t>(j)][w] = Rat(rep.torus_char[static_cast<size_t>(j)] * d);
    if (rep.block) {
      size_t row = static_cast<size_t>(h.torus_rank + *rep.block);
      long nb = h.gl_blocks[static_cast<size_t>(*rep.block)];
      m[row][w] = Rat(rep.block_twist * nb + 1);
    }
  }
  for (int j = 0; j < h.torus_rank; ++j) rhs[static_cast<size_t>(j)] = chi.torus[static_cast<size_t>(j)];
  for (size_t b = 0; b < h.gl_blocks.size(); ++b) rhs[static_cast<size_t>(h.torus_rank) + b] = chi.blocks[b];

  LChiSpace out;
  QMat kernel;
  auto x = solve(m, rhs, &kernel);
  if (!x) return out;
  out.consistent = true;
  out.particular = *x;
  out.kernel = std::move(kernel);
  return out;
}

Int invariant_term_dim(const GroupSpec& h, const std::vector<RepSpec>& a,
                       const SeriesIndex& index) {
  if (index.alphas.size() != a.size())
    throw std::invalid_argument("invariant_term_dim: one alpha per representation required");
  // torus characters accumulate |alpha| per rep
  for (int j = 0; j < h.torus_rank; ++j) {
    long acc = 0;
    for (size_t w = 0; w < a.size(); ++w)
      acc += a[w].torus_char[static_cast<size_t>(j)] * index.alphas[w].size();
    if (acc != 0) return Int(0);
  }
  // per block: Sigma^alpha(det^t (x) V) = Sigma^{alpha + t|alpha| 1}(V)
  Int dim(1);
  for (size_t b = 0; b < h.gl_blocks.size(); ++b) {
    const int nb = h.gl_blocks[b];
    std::vector<DominantWeight> factors;
    for (size_t w = 0; w < a.size(); ++w) {
      if (!a[w].block || *a[w].block != static_cast<int>(b)) continue;
      const DominantWeight& al = index.alphas[w];
      if (al.n() != nb) throw std::invalid_argument("invariant_term_dim: alpha size mismatch");
      factors.push_back(al.det_shift(a[w].block_twist * al.size()));
    }
    if (factors.empty()) continue;
    dim *= invariant_dim(factors, nb);
    if (dim == 0) return Int(0);
  }
  return dim;
}

bool HLabel::operator<(const HLabel& o) const {
  if (torus != o.torus) return torus < o.torus;
  if (blocks.size() != o.blocks.size()) return blocks.size() < o.blocks.size();
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] == o.blocks[i]) continue;
    return WeightOrder{}(blocks[i], o.blocks[i]);
  }
  return false;
}

std::string HLabel::to_string() const {
  std::ostringstream os;
  os << "t(";
  for (size_t i = 0; i < torus.size(); ++i) {
    if (i) os << ',';
    os << torus[i];
  }
  os << ')';
  for (auto& b : blocks) os << b.to_string();
  return os.str();
}

std::set<HLabel> monoidal_closure_truncated(const GroupSpec& h, const std::vector<RepSpec>& a,
                                            long degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("monoidal_closure_truncated: negative bound");
  HLabel triv;
  triv.torus.assign(static_cast<size_t>(h.torus_rank), 0);
  for (int nb : h.gl_blocks) triv.blocks.push_back(DominantWeight::zero(nb));
  std::set<HLabel> all{triv};
  std::set<HLabel> frontier{triv};
  for (long d = 1; d <= degree_bound; ++d) {
    std::set<HLabel> next;
    for (const HLabel& lab : frontier) {
      for (const RepSpec& rep : a) {
        // tensor lab with rep and collect all constituents
        HLabel base = lab;
        for (int j = 0; j < h.torus_rank; ++j)
          base.torus[static_cast<size_t>(j)] += rep.torus_char[static_cast<size_t>(j)];
        if (!rep.block) {
          next.insert(base);
          continue;
        }
        const int b = *rep.block;
        const int nb = h.gl_blocks[static_cast<size_t>(b)];
        // block factor: det^twist (x) standard = weight (twist+1, twist, ...)
        std::vector<long> wparts(static_cast<size_t>(nb), rep.block_twist);
        wparts[0] += 1;
        ClassFunction prod =
            lr_multiply(lab.blocks[static_cast<size_t>(b)], DominantWeight(wparts));
        for (auto& [gamma, c] : prod.terms()) {
          HLabel nl = base;
          nl.blocks[static_cast<size_t>(b)] = gamma;
          next.insert(nl);
        }
      }
    }
    all.insert(next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

}  // namespace rgs
