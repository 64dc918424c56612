#ifndef RGS_WEIGHTS_HPP
#define RGS_WEIGHTS_HPP

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "rgs/rational.hpp"

namespace rgs {

// Highest weight of an irreducible GL_n representation: a weakly decreasing
// integer vector. Negative parts are allowed; partition algorithms normalize
// through det_shift and shift back.
class DominantWeight {
 public:
  explicit DominantWeight(std::vector<long> parts);
  static DominantWeight zero(int n);

  static bool is_dominant(const std::vector<long>& parts);

  int n() const { return static_cast<int>(parts_.size()); }
  const std::vector<long>& parts() const { return parts_; }
  long operator[](int i) const { return parts_[static_cast<size_t>(i)]; }

  // |alpha| = sum of parts.
  long size() const;
  bool is_nonnegative() const { return parts_.empty() || parts_.back() >= 0; }

  DominantWeight dual() const;
  DominantWeight det_shift(long s) const;

  bool operator==(const DominantWeight& o) const { return parts_ == o.parts_; }
  bool operator!=(const DominantWeight& o) const { return parts_ != o.parts_; }
  // graded-lexicographic, same as WeightOrder
  bool operator<(const DominantWeight& o) const;

  std::string to_string() const;

 private:
  std::vector<long> parts_;
};

// Graded-lexicographic order: by |alpha|, then lexicographic on parts.
// Used as the canonical key order everywhere so that printed expansions and
// series truncations are reproducible byte for byte.
struct WeightOrder {
  bool operator()(const DominantWeight& a, const DominantWeight& b) const;
};

std::ostream& operator<<(std::ostream& os, const DominantWeight& w);

// dim of the irreducible GL_n module with highest weight alpha, by the Weyl
// dimension formula; always an exact positive integer.
Int dimension(const DominantWeight& alpha);

// All dominant beta = alpha + e_i.
std::vector<DominantWeight> pieri_up(const DominantWeight& alpha);
// All dominant beta = alpha - e_i.
std::vector<DominantWeight> pieri_down(const DominantWeight& alpha);

// Partitions of m into at most max_parts parts, in decreasing
// lexicographic order, each padded with zeros to length max_parts.
std::vector<std::vector<long>> partitions(long m, int max_parts);

// All tuples of nonnegative dominant weights, one of length d_i per block,
// with total size equal to `total`, in a fixed graded-lexicographic order:
// block totals enumerated lexicographically with earlier blocks largest,
// partitions within a block in decreasing lexicographic order.
std::vector<std::vector<DominantWeight>> enumerate_bounded(
    const std::vector<int>& block_sizes, long total);

// A weight shifted by a rational multiple of (1,...,1). Normal form keeps the
// fractional part of the shift in [0,1); the integer part is folded into the
// base, so equality of ShiftedWeights is plain structural equality.
class ShiftedWeight {
 public:
  ShiftedWeight(DominantWeight base, Rat shift);
  explicit ShiftedWeight(DominantWeight base) : ShiftedWeight(std::move(base), Rat(0)) {}

  const DominantWeight& base() const { return base_; }
  const Rat& shift() const { return shift_; }
  int n() const { return base_.n(); }

  // Entry i of the shifted weight as an exact rational.
  Rat entry(int i) const { return Rat(base_[i]) + shift_; }

  bool operator==(const ShiftedWeight& o) const {
    return shift_ == o.shift_ && base_ == o.base_;
  }

 private:
  DominantWeight base_;
  Rat shift_;  // in [0,1)
};

}  // namespace rgs

#endif  // RGS_WEIGHTS_HPP
