#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "divisor_lab/core.hpp"
#include "divisor_lab/int_set.hpp"

namespace divisor_lab {

/// Cap for the meet-in-the-middle counting paths (2^20-entry half tables).
inline constexpr std::size_t kMitmLimit = 40;

/// Cursor over all 2^n subset masks in Gray-code order. Consecutive masks
/// differ in exactly one bit, so the running sum is maintained with one
/// addition or subtraction per step.
class SumStream {
 public:
  explicit SumStream(const IntSet& set)
      : elements_(&set.elements()), count_(std::uint64_t{1} << set.size()) {}

  std::uint64_t mask() const noexcept { return mask_; }
  std::int64_t sum() const noexcept { return sum_; }
  bool done() const noexcept { return index_ == count_; }

  void advance() noexcept {
    ++index_;
    if (index_ == count_) return;
    const int flip = std::countr_zero(index_);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    mask_ ^= bit;
    sum_ += (mask_ & bit) ? (*elements_)[flip] : -(*elements_)[flip];
  }

 private:
  const std::vector<std::int64_t>* elements_;
  std::uint64_t count_;
  std::uint64_t index_ = 0;
  std::uint64_t mask_ = 0;
  std::int64_t sum_ = 0;
};

/// Visits all 2^n masks in Gray-code order. The visitor receives
/// (SubsetMask, sum) and runs on the calling thread.
template <class Visitor>
void stream_sums(const IntSet& set, Visitor&& visit) {
  if (set.size() > kNaiveLimit) {
    throw CapacityError("stream_sums is limited to " + std::to_string(kNaiveLimit) +
                        " elements; got " + std::to_string(set.size()));
  }
  for (SumStream s(set); !s.done(); s.advance()) {
    visit(SubsetMask{s.mask()}, s.sum());
  }
}

/// All positive divisors of total, ascending (trial division to sqrt).
std::vector<std::int64_t> divisors_of(std::int64_t total);

/// Subset sums of one half of a set, merged by (sum, cardinality) with
/// multiplicities, sorted ascending by sum then cardinality.
struct HalfTable {
  struct Item {
    std::int64_t sum;
    std::uint32_t card;
    std::uint64_t count;
  };
  std::vector<Item> items;
  std::size_t half_size = 0;

  static HalfTable build(std::span<const std::int64_t> elements);

  /// Total multiplicity; equals 2^half_size.
  std::uint64_t subsets() const noexcept;
};

struct DivisorCounts {
  std::uint64_t d = 0;
  std::vector<std::uint64_t> by_k;  // index k in [0, n]

  std::uint64_t d_k(std::size_t k) const noexcept { return k < by_k.size() ? by_k[k] : 0; }
};

struct HalvingCounts {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> by_card;  // index k in [0, n]

  /// Abundant separations pair each halving set with its complement.
  std::uint64_t abundant_general() const noexcept { return total / 2; }
  std::uint64_t abundant_strong(std::size_t n) const noexcept {
    return n % 2 == 0 && n / 2 < by_card.size() ? by_card[n / 2] / 2 : 0;
  }
};

/// Meet-in-the-middle divisor counting: splits the set, builds a HalfTable
/// per side and convolves the pair counts at each target in
/// divisors_of(total), stratified by cardinality. Agrees with
/// divisor_report's counts wherever both run.
DivisorCounts count_divisors_mitm(const IntSet& set);

/// Same, with an explicit left-half size (the default is ceil(n/2)).
/// Exposed so the half-swap symmetry is testable.
DivisorCounts count_divisors_mitm_split(const IntSet& set, std::size_t left_size);

/// Number of masks summing to total/2, overall and per cardinality.
/// Zero counts when the total is odd.
HalvingCounts count_halving_mitm(const IntSet& set);

}  // namespace divisor_lab
