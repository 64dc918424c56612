#include "rgs/weights.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rgs {

DominantWeight::DominantWeight(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("weight needs at least one part");
  if (!is_dominant(parts_)) {
    std::ostringstream os;
    os << "not weakly decreasing:";
    for (long p : parts_) os << ' ' << p;
    throw std::invalid_argument(os.str());
  }
}

DominantWeight DominantWeight::zero(int n) {
  return DominantWeight(std::vector<long>(static_cast<size_t>(n), 0));
}

bool DominantWeight::is_dominant(const std::vector<long>& parts) {
  for (size_t i = 0; i + 1 < parts.size(); ++i)
    if (parts[i] < parts[i + 1]) return false;
  return true;
}

long DominantWeight::size() const {
  long s = 0;
  for (long p : parts_) s += p;
  return s;
}

DominantWeight DominantWeight::dual() const {
  std::vector<long> d(parts_.rbegin(), parts_.rend());
  for (long& p : d) p = -p;
  return DominantWeight(std::move(d));
}

DominantWeight DominantWeight::det_shift(long s) const {
  std::vector<long> d = parts_;
  for (long& p : d) p += s;
  return DominantWeight(std::move(d));
}

std::string DominantWeight::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool WeightOrder::operator()(const DominantWeight& a, const DominantWeight& b) const {
  if (a.n() != b.n()) return a.n() < b.n();
  long sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.parts() < b.parts();
}

bool DominantWeight::operator<(const DominantWeight& o) const {
  return WeightOrder{}(*this, o);
}

std::ostream& operator<<(std::ostream& os, const DominantWeight& w) {
  os << '(';
  for (int i = 0; i < w.n(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  return os << ')';
}

Int dimension(const DominantWeight& alpha) {
  const int n = alpha.n();
  Int num(1), den(1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= alpha[i] - alpha[j] + j - i;
      den *= j - i;
    }
  Int d = num / den;
  return d;
}

std::vector<DominantWeight> pieri_up(const DominantWeight& alpha) {
  std::vector<DominantWeight> out;
  for (int i = 0; i < alpha.n(); ++i) {
    std::vector<long> p = alpha.parts();
    p[static_cast<size_t>(i)] += 1;
    if (DominantWeight::is_dominant(p)) out.emplace_back(std::move(p));
  }
  return out;
}

std::vector<DominantWeight> pieri_down(const DominantWeight& alpha) {
  std::vector<DominantWeight> out;
  for (int i = 0; i < alpha.n(); ++i) {
    std::vector<long> p = alpha.parts();
    p[static_cast<size_t>(i)] -= 1;
    if (DominantWeight::is_dominant(p)) out.emplace_back(std::move(p));
  }
  return out;
}

namespace {

void partitions_rec(long m, int slots, long cap, std::vector<long>& cur,
                    std::vector<std::vector<long>>& out) {
  if (m == 0) {
    std::vector<long> p = cur;
    p.resize(p.size() + static_cast<size_t>(slots), 0);
    out.push_back(std::move(p));
    return;
  }
  if (slots == 0) return;
  long hi = std::min<long>(m, cap);
  // first part large first: decreasing lex order
  for (long p = hi; p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(m - p, slots - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> partitions(long m, int max_parts) {
  std::vector<std::vector<long>> out;
  if (m < 0) return out;
  if (m == 0) {
    out.emplace_back(static_cast<size_t>(max_parts), 0);
    return out;
  }
  std::vector<long> cur;
  partitions_rec(m, max_parts, m, cur, out);
  return out;
}

namespace {

void enum_rec(const std::vector<int>& blocks, size_t b, long remaining,
              std::vector<DominantWeight>& cur,
              std::vector<std::vector<DominantWeight>>& out) {
  if (b == blocks.size()) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  const bool last = (b + 1 == blocks.size());
  const long lo = last ? remaining : 0;
  for (long take = remaining; take >= lo; --take) {
    for (auto& p : partitions(take, blocks[b])) {
      cur.emplace_back(p);
      enum_rec(blocks, b + 1, remaining - take, cur, out);
      cur.pop_back();
    }
    if (last) break;
  }
}

}  // namespace

std::vector<std::vector<DominantWeight>> enumerate_bounded(
    const std::vector<int>& block_sizes, long total) {
  std::vector<std::vector<DominantWeight>> out;
  if (total < 0 || block_sizes.empty()) return out;
  std::vector<DominantWeight> cur;
  enum_rec(block_sizes, 0, total, cur, out);
  return out;
}

ShiftedWeight::ShiftedWeight(DominantWeight base, Rat shift) : base_(std::move(base)) {
  Int fl = rat_floor(shift);
  shift_ = shift - Rat(fl);
  long k = static_cast<long>(fl.get_si());
  if (k != 0) base_ = base_.det_shift(k);
}

}  // namespace rgs
