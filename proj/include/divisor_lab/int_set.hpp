#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "divisor_lab/errors.hpp"

namespace divisor_lab {

/// Largest cardinality a set may have; subsets are addressed by 64-bit masks.
inline constexpr std::size_t kMaxElements = 63;

/// Selects a subset of an IntSet (or ZeroSumSet) by element index:
/// bit i set means element i is in the subset.
struct SubsetMask {
  std::uint64_t bits = 0;

  int popcount() const noexcept { return std::popcount(bits); }

  friend bool operator==(SubsetMask a, SubsetMask b) noexcept { return a.bits == b.bits; }
  friend bool operator<(SubsetMask a, SubsetMask b) noexcept { return a.bits < b.bits; }
};

/// A set of distinct positive integers, stored strictly increasing.
/// The element sum is computed once, with overflow checking, and cached.
class IntSet {
 public:
  /// Sorts the input; rejects empty input, non-positive values and duplicates.
  explicit IntSet(std::vector<std::int64_t> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::int64_t total() const noexcept { return total_; }
  std::int64_t operator[](std::size_t i) const noexcept { return elements_[i]; }
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }

  /// Mask selecting every element.
  SubsetMask full_mask() const noexcept {
    return SubsetMask{(std::uint64_t{1} << elements_.size()) - 1};
  }

  /// Throws InvalidMaskError when the mask addresses indices >= size().
  void require_valid(SubsetMask mask) const;

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.elements_ == b.elements_; }

 private:
  std::vector<std::int64_t> elements_;
  std::int64_t total_ = 0;
};

}  // namespace divisor_lab
