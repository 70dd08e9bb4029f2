#include "divisor_lab/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

namespace divisor_lab {

std::vector<std::int64_t> divisors_of(std::int64_t total) {
  if (total < 1) {
    throw std::invalid_argument("divisors_of needs a positive integer; got " +
                                std::to_string(total));
  }
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d <= total / d; ++d) {
    if (total % d == 0) {
      low.push_back(d);
      if (d != total / d) high.push_back(total / d);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

HalfTable HalfTable::build(std::span<const std::int64_t> elements) {
  HalfTable table;
  table.half_size = elements.size();

  // (sum, card) for every subset, via the same Gray-code walk as SumStream.
  const std::uint64_t count = std::uint64_t{1} << elements.size();
  std::vector<std::pair<std::int64_t, std::uint32_t>> raw;
  raw.reserve(count);
  std::uint64_t mask = 0;
  std::int64_t sum = 0;
  raw.emplace_back(0, 0);
  for (std::uint64_t i = 1; i < count; ++i) {
    const int flip = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    mask ^= bit;
    sum += (mask & bit) ? elements[static_cast<std::size_t>(flip)]
                        : -elements[static_cast<std::size_t>(flip)];
    raw.emplace_back(sum, static_cast<std::uint32_t>(std::popcount(mask)));
  }

  std::sort(raw.begin(), raw.end());
  for (const auto& [s, c] : raw) {
    if (!table.items.empty() && table.items.back().sum == s && table.items.back().card == c) {
      table.items.back().count++;
    } else {
      table.items.push_back(Item{s, c, 1});
    }
  }
  return table;
}

std::uint64_t HalfTable::subsets() const noexcept {
  std::uint64_t n = 0;
  for (const Item& item : items) n += item.count;
  return n;
}

namespace {

void require_mitm(const IntSet& set) {
  if (set.size() > kMitmLimit) {
    throw CapacityError("meet-in-the-middle counting is limited to " +
                        std::to_string(kMitmLimit) + " elements; got " +
                        std::to_string(set.size()));
  }
}

/// Accumulates, into by_k, the number of (left, right) subset pairs whose
/// sums add to target, stratified by combined cardinality.
void convolve_at(const HalfTable& left, const HalfTable& right, std::int64_t target,
                 std::vector<std::uint64_t>& by_k) {
  std::size_t i = 0;
  std::size_t j = right.items.size();
  while (i < left.items.size() && j > 0) {
    const std::int64_t need = target - left.items[i].sum;
    // Walk the right cursor down to sums <= need.
    while (j > 0 && right.items[j - 1].sum > need) --j;
    if (j == 0) break;
    if (right.items[j - 1].sum < need) {
      // Advance left past this sum group.
      const std::int64_t s = left.items[i].sum;
      while (i < left.items.size() && left.items[i].sum == s) ++i;
      continue;
    }
    // Match: cross-multiply the two (sum-equal) groups.
    std::size_t j_lo = j;
    while (j_lo > 0 && right.items[j_lo - 1].sum == need) --j_lo;
    const std::int64_t s = left.items[i].sum;
    for (; i < left.items.size() && left.items[i].sum == s; ++i) {
      for (std::size_t r = j_lo; r < j; ++r) {
        by_k[left.items[i].card + right.items[r].card] +=
            left.items[i].count * right.items[r].count;
      }
    }
    j = j_lo;
  }
}

}  // namespace

DivisorCounts count_divisors_mitm(const IntSet& set) {
  return count_divisors_mitm_split(set, (set.size() + 1) / 2);
}

DivisorCounts count_divisors_mitm_split(const IntSet& set, std::size_t left_size) {
  require_mitm(set);
  if (left_size > set.size()) {
    throw std::invalid_argument("split point beyond set size");
  }
  const std::span<const std::int64_t> all(set.elements());
  const HalfTable left = HalfTable::build(all.first(left_size));
  const HalfTable right = HalfTable::build(all.subspan(left_size));

  DivisorCounts counts;
  counts.by_k.assign(set.size() + 1, 0);
  for (std::int64_t target : divisors_of(set.total())) {
    assert(target >= 1);  // the empty set (sum 0) can never be counted
    convolve_at(left, right, target, counts.by_k);
  }
  counts.d = std::accumulate(counts.by_k.begin(), counts.by_k.end(), std::uint64_t{0});
  return counts;
}

HalvingCounts count_halving_mitm(const IntSet& set) {
  require_mitm(set);
  HalvingCounts counts;
  counts.by_card.assign(set.size() + 1, 0);
  if (set.total() % 2 != 0) return counts;

  const std::size_t left_size = (set.size() + 1) / 2;
  const std::span<const std::int64_t> all(set.elements());
  const HalfTable left = HalfTable::build(all.first(left_size));
  const HalfTable right = HalfTable::build(all.subspan(left_size));
  convolve_at(left, right, set.total() / 2, counts.by_card);
  counts.total = std::accumulate(counts.by_card.begin(), counts.by_card.end(), std::uint64_t{0});
  return counts;
}

}  // namespace divisor_lab
