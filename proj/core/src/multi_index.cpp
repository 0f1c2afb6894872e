#include "hoc/multi_index.hpp"

#include <bit>
#include <string>

#include "hoc/errors.hpp"
#include "hoc/poly.hpp"

namespace hoc {

MultiIndex MultiIndex::of(std::initializer_list<int> indices) {
  return of(std::vector<int>(indices));
}

MultiIndex MultiIndex::of(const std::vector<int>& indices) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxDim) throw ArgumentError("multi-index entry out of range: " + std::to_string(i));
    if (i <= prev) throw ArgumentError("multi-index must be strictly increasing");
    mask |= 1U << (i - 1);
    prev = i;
  }
  return MultiIndex(mask);
}

MultiIndex MultiIndex::single(int i) { return of({i}); }

int MultiIndex::degree() const { return std::popcount(mask_); }

int MultiIndex::max_index() const { return 32 - std::countl_zero(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

std::strong_ordering operator<=>(MultiIndex a, MultiIndex b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (a.mask_ == b.mask_) return std::strong_ordering::equal;
  // For equal-length sorted lists, the first differing position holds the
  // smallest element of the symmetric difference; whoever owns it is smaller.
  const std::uint32_t diff = a.mask_ ^ b.mask_;
  const std::uint32_t low = diff & (~diff + 1);
  return (a.mask_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

int merge_sign(MultiIndex a, MultiIndex b) {
  if (!a.disjoint(b)) return 0;
  int inversions = 0;
  for (std::uint32_t m = b.mask(); m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m);
    inversions += std::popcount(a.mask() >> (bit + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::vector<MultiIndex> multi_indices(int dim, int degree) {
  std::vector<MultiIndex> out;
  if (degree < 0 || degree > dim) return out;
  std::vector<int> idx(static_cast<std::size_t>(degree));
  auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == degree) {
      out.push_back(MultiIndex::of(idx));
      return;
    }
    for (int i = start; i <= dim - (degree - pos - 1); ++i) {
      idx[static_cast<std::size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 1);
  return out;
}

}  // namespace hoc
