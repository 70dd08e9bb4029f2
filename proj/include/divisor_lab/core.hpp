#pragma once

#include <cstdint>
#include <vector>

#include "divisor_lab/int_set.hpp"

namespace divisor_lab {

/// Default cap for operations that enumerate all 2^n subsets (or return
/// explicit subset lists). Larger sets must go through the counting paths
/// in enumeration.hpp.
inline constexpr std::size_t kNaiveLimit = 24;

/// How an unordered separation {B, A\B} relates to divisibility:
/// neither side divides A, exactly one does, or both do.
enum class SeparationClass { Barren, Neutral, Abundant };

struct SeparationCensus {
  std::uint64_t barren = 0;
  std::uint64_t neutral = 0;
  std::uint64_t abundant = 0;
  bool strong = false;  // restricted to |B| = |C| = n/2

  std::uint64_t pairs() const noexcept { return barren + neutral + abundant; }
};

struct DivisorReport {
  IntSet set;
  std::vector<SubsetMask> divisors;    // ascending by bits; full mask present, empty absent
  std::uint64_t d = 0;                 // total divisor count
  std::vector<std::uint64_t> d_by_k;   // index k in [0, n]; [0] is always 0
  SeparationCensus census;             // general census (strong = false)

  /// d_k(A); defined as 0 for k = 0 and k > n.
  std::uint64_t d_k(std::size_t k) const noexcept {
    return k < d_by_k.size() ? d_by_k[k] : 0;
  }
};

/// Sum of the selected elements. The empty mask sums to 0.
std::int64_t subset_sum(const IntSet& set, SubsetMask mask);

/// True iff the selected subset is nonempty and its sum divides the set total.
bool is_divisor(const IntSet& set, SubsetMask mask);

/// Exact divisor list, per-cardinality counts and general separation census.
/// Throws CapacityError when set.size() > naive_limit.
DivisorReport divisor_report(const IntSet& set, std::size_t naive_limit = kNaiveLimit);

/// All masks whose sum is exactly half the set total, ascending by bits.
/// Empty when the total is odd. Closed under complement.
std::vector<SubsetMask> halving_sets(const IntSet& set, std::size_t naive_limit = kNaiveLimit);

/// Classifies the separation {mask, complement}.
SeparationClass classify_separation(const IntSet& set, SubsetMask mask);

/// Counts every unordered separation once. The general census covers all
/// 2^{n-1} pairs including {empty, A}; the strong census covers the
/// C(n, n/2)/2 pairs with |B| = |C| and requires even n.
SeparationCensus census(const IntSet& set, bool strong, std::size_t naive_limit = kNaiveLimit);

/// True iff the divisors of A are exactly the nonempty subsets avoiding the
/// maximum element, plus A itself. Requires n >= 2.
bool is_anti_pencil(const IntSet& set);

/// True iff the k-subset divisors of A are exactly the k-subsets avoiding
/// the maximum element. Requires 1 <= k <= n.
bool is_k_anti_pencil(const IntSet& set, std::size_t k);

/// True iff the only divisor of A is A itself.
bool is_prime_set(const IntSet& set);

/// Every element multiplied by c. Divisor structure is invariant under this.
IntSet scale(const IntSet& set, std::int64_t c);

}  // namespace divisor_lab
