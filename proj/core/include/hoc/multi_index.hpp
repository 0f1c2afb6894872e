#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace hoc {

/// Strictly increasing list of coordinate indices in 1..kMaxDim, stored as a
/// bit set (bit i-1 is coordinate i). Labels the basis dx^I / @_I of the
/// degree-|I| exterior powers.
class MultiIndex {
 public:
  constexpr MultiIndex() = default;

  /// Indices must be strictly increasing and in range; throws ArgumentError.
  static MultiIndex of(std::initializer_list<int> indices);
  static MultiIndex of(const std::vector<int>& indices);
  static MultiIndex single(int i);
  static constexpr MultiIndex from_mask(std::uint32_t mask) { return MultiIndex(mask); }

  constexpr std::uint32_t mask() const { return mask_; }
  int degree() const;
  bool contains(int i) const { return (mask_ >> (i - 1)) & 1U; }
  int max_index() const;
  std::vector<int> indices() const;

  constexpr bool disjoint(MultiIndex other) const { return (mask_ & other.mask_) == 0; }
  constexpr bool subset_of(MultiIndex other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr MultiIndex operator|(MultiIndex other) const { return MultiIndex(mask_ | other.mask_); }
  constexpr MultiIndex without(MultiIndex other) const { return MultiIndex(mask_ & ~other.mask_); }

  constexpr bool operator==(const MultiIndex&) const = default;

  /// Degree first, then lexicographic on the sorted index lists.
  friend std::strong_ordering operator<=>(MultiIndex a, MultiIndex b);

 private:
  constexpr explicit MultiIndex(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation (a, b) of two disjoint
/// increasing lists: dx^a ^ dx^b = merge_sign(a, b) dx^(a|b). Returns 0 when
/// the lists overlap.
int merge_sign(MultiIndex a, MultiIndex b);

/// All multi-indices of the given degree over coordinates 1..dim, lex order.
std::vector<MultiIndex> multi_indices(int dim, int degree);

}  // namespace hoc
