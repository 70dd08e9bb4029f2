#include <doctest.h>

#include <random>
#include <set>

#include "divisor_lab/enumeration.hpp"
#include "oracle.hpp"

using namespace divisor_lab;

namespace {

IntSet random_set(std::mt19937_64& rng, std::size_t n, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> dist(1, hi);
  std::set<std::int64_t> chosen;
  while (chosen.size() < n) chosen.insert(dist(rng));
  return IntSet(std::vector<std::int64_t>(chosen.begin(), chosen.end()));
}

}  // namespace

TEST_CASE("divisors_of") {
  CHECK(divisors_of(24) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 8, 12, 24});
  CHECK(divisors_of(1) == std::vector<std::int64_t>{1});
  CHECK(divisors_of(60) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60});
  CHECK_THROWS_AS(divisors_of(0), std::invalid_argument);
}

TEST_CASE("stream_sums visits every mask once in Gray order") {
  const IntSet a({3, 5, 9});
  std::vector<std::uint64_t> seen;
  std::uint64_t previous = 0;
  stream_sums(a, [&](SubsetMask m, std::int64_t sum) {
    if (!seen.empty()) CHECK(std::popcount(previous ^ m.bits) == 1);
    CHECK(sum == oracle::subset_sum(a.elements(), m.bits));
    seen.push_back(m.bits);
    previous = m.bits;
  });
  CHECK(seen.size() == 8);
  std::sort(seen.begin(), seen.end());
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("stream_sums smallest case") {
  const IntSet a({1});
  std::vector<std::pair<std::uint64_t, std::int64_t>> visits;
  stream_sums(a, [&](SubsetMask m, std::int64_t sum) { visits.emplace_back(m.bits, sum); });
  CHECK(visits == std::vector<std::pair<std::uint64_t, std::int64_t>>{{0, 0}, {1, 1}});
}

TEST_CASE("divisor counting through the stream equals divisor_report") {
  std::mt19937_64 rng(46);
  std::uniform_int_distribution<std::size_t> size_dist(1, 16);
  for (int trial = 0; trial < 100; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 1000);
    std::uint64_t d = 0;
    stream_sums(a, [&](SubsetMask m, std::int64_t sum) {
      if (m.bits != 0 && a.total() % sum == 0) ++d;
    });
    CHECK(d == divisor_report(a).d);
  }
}

TEST_CASE("HalfTable is sorted, merged, and complete") {
  const std::vector<std::int64_t> elements{2, 3, 5, 7};  // {2,3} and {5} share a sum
  const HalfTable table = HalfTable::build(std::span<const std::int64_t>(elements));
  CHECK(table.subsets() == 16);
  for (std::size_t i = 1; i < table.items.size(); ++i) {
    const auto& prev = table.items[i - 1];
    const auto& cur = table.items[i];
    CHECK((prev.sum < cur.sum || (prev.sum == cur.sum && prev.card < cur.card)));
  }
}

TEST_CASE("count_divisors_mitm frozen values") {
  const DivisorCounts quad = count_divisors_mitm(IntSet({1, 5, 7, 11}));
  CHECK(quad.d == 6);
  CHECK(quad.d_k(2) == 4);
  CHECK(count_divisors_mitm(IntSet({1, 2, 3, 6})).d == 8);

  const DivisorCounts ap = count_divisors_mitm(IntSet({1, 2, 3, 54}));
  CHECK(ap.d == 8);
  CHECK(ap.by_k == std::vector<std::uint64_t>{0, 3, 3, 1, 1});
}

TEST_CASE("count_halving_mitm frozen values") {
  CHECK(count_halving_mitm(IntSet({1, 2, 3, 4})).total == 2);
  CHECK(count_halving_mitm(IntSet({1, 2, 4, 8})).total == 0);
  CHECK(count_halving_mitm(IntSet({1, 2, 3, 4, 5, 6, 7, 8})).total == 14);
}

TEST_CASE("mitm counts equal the naive oracle on random sets") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<std::size_t> size_dist(1, 20);
  for (int trial = 0; trial < 60; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 4000);
    const DivisorCounts counts = count_divisors_mitm(a);
    CHECK(counts.d == oracle::divisor_count(a.elements()));
    CHECK(counts.by_k == oracle::divisor_count_by_k(a.elements()));

    const HalvingCounts halving = count_halving_mitm(a);
    CHECK(halving.total == oracle::halving_masks(a.elements()).size());
    CHECK(halving.abundant_general() == halving.total / 2);
  }
}

TEST_CASE("halving counts split by cardinality feed the strong census") {
  const IntSet a({1, 5, 7, 11});
  const HalvingCounts halving = count_halving_mitm(a);
  CHECK(halving.abundant_strong(4) == 1);  // only {1,11} | {5,7}
  CHECK(halving.abundant_general() == 1);
}

TEST_CASE("swapping which half is left does not change any count") {
  std::mt19937_64 rng(48);
  std::uniform_int_distribution<std::size_t> size_dist(2, 14);
  for (int trial = 0; trial < 40; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 500);
    const DivisorCounts lo = count_divisors_mitm_split(a, a.size() / 2);
    const DivisorCounts hi = count_divisors_mitm_split(a, (a.size() + 1) / 2);
    CHECK(lo.d == hi.d);
    CHECK(lo.by_k == hi.by_k);
  }
}

TEST_CASE("mitm handles a 36-element set directly") {
  std::mt19937_64 rng(49);
  const IntSet a = random_set(rng, 36, 1000000);
  const DivisorCounts counts = count_divisors_mitm(a);
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts.by_k) sum += c;
  CHECK(counts.d == sum);
  CHECK(counts.d >= 1);                      // the full set always divides
  CHECK(counts.by_k[a.size()] == 1);
  CHECK(counts.by_k[0] == 0);
}

TEST_CASE("mitm capacity limit") {
  std::vector<std::int64_t> elements;
  for (std::int64_t i = 1; i <= 41; ++i) elements.push_back(i);
  CHECK_THROWS_AS(count_divisors_mitm(IntSet(elements)), CapacityError);
}
