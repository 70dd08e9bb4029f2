#include "divisor_lab/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "divisor_lab/enumeration.hpp"

namespace divisor_lab {

namespace {

void require_naive(const IntSet& set, std::size_t naive_limit, const char* op) {
  if (set.size() > naive_limit) {
    throw CapacityError(std::string(op) + " enumerates all subsets and is limited to " +
                        std::to_string(naive_limit) + " elements (got " +
                        std::to_string(set.size()) +
                        "); use the enumeration module's counting paths instead");
  }
}

/// Divisor flags for every mask, indexed by mask bits. One Gray-code pass.
std::vector<bool> divisor_flags(const IntSet& set) {
  std::vector<bool> flags(std::size_t{1} << set.size());
  const std::int64_t total = set.total();
  for (SumStream s(set); !s.done(); s.advance()) {
    flags[s.mask()] = s.sum() > 0 && total % s.sum() == 0;
  }
  return flags;
}

}  // namespace

std::int64_t subset_sum(const IntSet& set, SubsetMask mask) {
  set.require_valid(mask);
  std::int64_t sum = 0;
  for (std::uint64_t bits = mask.bits; bits != 0; bits &= bits - 1) {
    sum += set[static_cast<std::size_t>(std::countr_zero(bits))];
  }
  return sum;
}

bool is_divisor(const IntSet& set, SubsetMask mask) {
  const std::int64_t sum = subset_sum(set, mask);
  return sum > 0 && set.total() % sum == 0;
}

DivisorReport divisor_report(const IntSet& set, std::size_t naive_limit) {
  require_naive(set, naive_limit, "divisor_report");
  const std::size_t n = set.size();

  DivisorReport report{set, {}, 0, std::vector<std::uint64_t>(n + 1, 0), {}};
  const std::vector<bool> flags = divisor_flags(set);
  for (std::uint64_t m = 1; m < flags.size(); ++m) {
    if (flags[m]) {
      report.divisors.push_back(SubsetMask{m});
      report.d_by_k[static_cast<std::size_t>(std::popcount(m))]++;
    }
  }
  report.d = report.divisors.size();

  // One representative per unordered pair {B, A\B}: the side avoiding a_n.
  const std::uint64_t full = set.full_mask().bits;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) {
    const int sides = (flags[m] ? 1 : 0) + (flags[full ^ m] ? 1 : 0);
    if (sides == 0) report.census.barren++;
    else if (sides == 1) report.census.neutral++;
    else report.census.abundant++;
  }
  return report;
}

std::vector<SubsetMask> halving_sets(const IntSet& set, std::size_t naive_limit) {
  require_naive(set, naive_limit, "halving_sets");
  std::vector<SubsetMask> result;
  if (set.total() % 2 != 0) return result;
  const std::int64_t target = set.total() / 2;
  for (SumStream s(set); !s.done(); s.advance()) {
    if (s.sum() == target) result.push_back(SubsetMask{s.mask()});
  }
  std::sort(result.begin(), result.end());
  return result;
}

SeparationClass classify_separation(const IntSet& set, SubsetMask mask) {
  set.require_valid(mask);
  const SubsetMask complement{set.full_mask().bits ^ mask.bits};
  const int sides = (is_divisor(set, mask) ? 1 : 0) + (is_divisor(set, complement) ? 1 : 0);
  if (sides == 2) return SeparationClass::Abundant;
  if (sides == 1) return SeparationClass::Neutral;
  return SeparationClass::Barren;
}

SeparationCensus census(const IntSet& set, bool strong, std::size_t naive_limit) {
  require_naive(set, naive_limit, "census");
  const std::size_t n = set.size();
  if (strong && n % 2 != 0) {
    throw std::invalid_argument("a strong census needs even cardinality; got n=" +
                                std::to_string(n));
  }

  SeparationCensus out;
  out.strong = strong;
  const std::vector<bool> flags = divisor_flags(set);
  const std::uint64_t full = set.full_mask().bits;

  auto tally = [&](std::uint64_t m) {
    const int sides = (flags[m] ? 1 : 0) + (flags[full ^ m] ? 1 : 0);
    if (sides == 0) out.barren++;
    else if (sides == 1) out.neutral++;
    else out.abundant++;
  };

  if (!strong) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n - 1)); ++m) tally(m);
  } else {
    // Representative: the side containing a_1.
    const int half = static_cast<int>(n) / 2;
    for (std::uint64_t m = 1; m <= full; ++m) {
      if ((m & 1) != 0 && std::popcount(m) == half) tally(m);
    }
  }
  return out;
}

bool is_anti_pencil(const IntSet& set) {
  const std::size_t n = set.size();
  if (n < 2) {
    throw std::invalid_argument("is_anti_pencil needs n >= 2");
  }
  require_naive(set, kNaiveLimit, "is_anti_pencil");
  const std::int64_t total = set.total();
  const std::uint64_t full = set.full_mask().bits;
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  for (SumStream s(set); !s.done(); s.advance()) {
    const std::uint64_t m = s.mask();
    if (m == 0 || m == full) continue;
    const bool divides = s.sum() > 0 && total % s.sum() == 0;
    const bool expected = (m & top) == 0;
    if (divides != expected) return false;
  }
  return true;
}

bool is_k_anti_pencil(const IntSet& set, std::size_t k) {
  const std::size_t n = set.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("is_k_anti_pencil needs 1 <= k <= n");
  }
  require_naive(set, kNaiveLimit, "is_k_anti_pencil");
  const std::int64_t total = set.total();
  const std::uint64_t top = std::uint64_t{1} << (n - 1);
  bool ok = true;
  stream_sums(set, [&](SubsetMask m, std::int64_t sum) {
    if (!ok || m.popcount() != static_cast<int>(k)) return;
    const bool divides = sum > 0 && total % sum == 0;
    if (divides != ((m.bits & top) == 0)) ok = false;
  });
  return ok;
}

bool is_prime_set(const IntSet& set) {
  require_naive(set, kNaiveLimit, "is_prime_set");
  const std::int64_t total = set.total();
  const std::uint64_t full = set.full_mask().bits;
  for (SumStream s(set); !s.done(); s.advance()) {
    if (s.mask() == 0 || s.mask() == full) continue;
    if (s.sum() > 0 && total % s.sum() == 0) return false;
  }
  return true;
}

IntSet scale(const IntSet& set, std::int64_t c) {
  if (c < 1) {
    throw std::invalid_argument("scale factor must be positive; got " + std::to_string(c));
  }
  std::vector<std::int64_t> scaled;
  scaled.reserve(set.size());
  for (std::int64_t a : set.elements()) scaled.push_back(checked_mul(a, c));
  return IntSet(std::move(scaled));
}

}  // namespace divisor_lab
