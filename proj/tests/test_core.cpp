#include <doctest.h>

#include <random>
#include <set>

#include "divisor_lab/core.hpp"
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

TEST_CASE("IntSet validates and normalizes its input") {
  CHECK(IntSet({7, 1, 5}).elements() == std::vector<std::int64_t>{1, 5, 7});
  CHECK(IntSet({4}).total() == 4);
  CHECK_THROWS_AS(IntSet({}), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({-3, 5}), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({2, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(IntSet({INT64_MAX, 1}), OverflowError);
}

TEST_CASE("subset_sum") {
  const IntSet a({1, 5, 7, 11});
  CHECK(subset_sum(a, SubsetMask{0b1001}) == 12);  // {a_1, a_4}
  CHECK(subset_sum(a, SubsetMask{0}) == 0);
  CHECK(subset_sum(IntSet({1, 2, 3, 6}), SubsetMask{0b1111}) == 12);
  CHECK_THROWS_AS(subset_sum(a, SubsetMask{0b10000}), InvalidMaskError);
}

TEST_CASE("is_divisor") {
  const IntSet a({1, 5, 7, 11});
  CHECK(is_divisor(a, SubsetMask{0b0011}));   // 6 | 24
  CHECK(!is_divisor(a, SubsetMask{0}));       // the empty set never divides
  CHECK(is_divisor(a, a.full_mask()));        // A | A
}

TEST_CASE("divisor_report frozen values") {
  CHECK(divisor_report(IntSet({1, 5, 7, 11})).d_k(2) == 4);
  CHECK(divisor_report(IntSet({1, 2, 3})).d == 5);
  CHECK(divisor_report(IntSet({1, 2, 3, 6})).d == 8);
  CHECK(divisor_report(IntSet({1, 11, 19, 29})).d_k(2) == 4);

  const DivisorReport r = divisor_report(IntSet({1, 2, 3, 54}));
  CHECK(r.d == 8);
  CHECK(r.d_by_k == std::vector<std::uint64_t>{0, 3, 3, 1, 1});
}

TEST_CASE("divisor_report structure") {
  const IntSet a({1, 5, 7, 11});
  const DivisorReport r = divisor_report(a);
  CHECK(std::is_sorted(r.divisors.begin(), r.divisors.end()));
  CHECK(std::adjacent_find(r.divisors.begin(), r.divisors.end()) == r.divisors.end());
  CHECK(std::find(r.divisors.begin(), r.divisors.end(), a.full_mask()) != r.divisors.end());
  CHECK(std::find(r.divisors.begin(), r.divisors.end(), SubsetMask{0}) == r.divisors.end());
  CHECK(r.d >= 1);
  CHECK(r.d_by_k[0] == 0);
  CHECK(r.d_k(0) == 0);
  CHECK(r.d_k(99) == 0);

  std::uint64_t sum = 0;
  for (std::uint64_t c : r.d_by_k) sum += c;
  CHECK(r.d == sum);

  CHECK_THROWS_AS(divisor_report(a, 3), CapacityError);
}

TEST_CASE("divisor_report matches the brute-force oracle on random sets") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::size_t> size_dist(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 500);
    const DivisorReport r = divisor_report(a);
    CHECK(r.d == oracle::divisor_count(a.elements()));
    CHECK(r.d_by_k == oracle::divisor_count_by_k(a.elements()));
    CHECK(r.d == r.census.neutral + 2 * r.census.abundant);
    CHECK(r.census.pairs() == (std::uint64_t{1} << (a.size() - 1)));
  }
}

TEST_CASE("halving_sets") {
  const auto masks = [](const std::vector<SubsetMask>& ms) {
    std::vector<std::uint64_t> bits;
    for (SubsetMask m : ms) bits.push_back(m.bits);
    return bits;
  };
  CHECK(masks(halving_sets(IntSet({1, 5, 7, 11}))) ==
        std::vector<std::uint64_t>{0b0110, 0b1001});  // {5,7} and {1,11}
  CHECK(masks(halving_sets(IntSet({1, 2, 3}))) ==
        std::vector<std::uint64_t>{0b011, 0b100});  // {1,2} and {3}
  CHECK(halving_sets(IntSet({1, 2, 4, 8})).empty());  // odd total
}

TEST_CASE("halving sets: complement-closed and Hamming-separated") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<std::size_t> size_dist(1, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 60);
    const auto halves = halving_sets(a);
    const std::uint64_t full = a.full_mask().bits;
    for (std::size_t i = 0; i < halves.size(); ++i) {
      CHECK(std::find(halves.begin(), halves.end(), SubsetMask{full ^ halves[i].bits}) !=
            halves.end());
      for (std::size_t j = i + 1; j < halves.size(); ++j) {
        CHECK(std::popcount(halves[i].bits ^ halves[j].bits) > 2);
      }
    }
  }
}

TEST_CASE("classify_separation") {
  const IntSet a({1, 5, 7, 11});
  CHECK(classify_separation(a, SubsetMask{0b1001}) == SeparationClass::Abundant);
  CHECK(classify_separation(a, SubsetMask{0b0010}) == SeparationClass::Barren);
  CHECK(classify_separation(a, SubsetMask{0}) == SeparationClass::Neutral);
  CHECK(classify_separation(IntSet({3, 9}), SubsetMask{0}) == SeparationClass::Neutral);
}

TEST_CASE("census") {
  const SeparationCensus strong = census(IntSet({1, 5, 7, 11}), true);
  CHECK(strong.abundant == 1);
  CHECK(strong.strong);
  CHECK(strong.pairs() == 3);  // C(4,2)/2

  const SeparationCensus general = census(IntSet({1, 5, 7, 11}), false);
  CHECK(general.pairs() == 8);
  CHECK(census(IntSet({1, 2, 4, 8}), false).abundant == 0);  // odd total

  CHECK_THROWS_AS(census(IntSet({1, 2, 3}), true), std::invalid_argument);
}

TEST_CASE("census identities on random sets") {
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<std::size_t> size_dist(2, 12);
  for (int trial = 0; trial < 100; ++trial) {
    IntSet a = random_set(rng, size_dist(rng), 200);
    const DivisorReport r = divisor_report(a);
    CHECK(r.d == r.census.neutral + 2 * r.census.abundant);
    if (a.size() % 2 == 0) {
      const SeparationCensus strong = census(a, true);
      CHECK(r.d_k(a.size() / 2) == strong.neutral + 2 * strong.abundant);
      std::uint64_t choose = 1;  // C(n, n/2)
      for (std::size_t i = 1; i <= a.size() / 2; ++i) {
        choose = choose * (a.size() / 2 + i) / i;
      }
      CHECK(strong.pairs() == choose / 2);
    }
  }
}

TEST_CASE("is_anti_pencil") {
  CHECK(is_anti_pencil(IntSet({1, 2, 3, 54})));
  CHECK(!is_anti_pencil(IntSet({1, 2, 3, 6})));  // {6} divides but {2,3} does not
  CHECK(is_anti_pencil(IntSet({1, 2})));
  CHECK(!is_anti_pencil(IntSet({1, 2, 3})));     // {3} divides 6
  CHECK_THROWS_AS(is_anti_pencil(IntSet({5})), std::invalid_argument);

  // Anti-pencil implies d = 2^{n-1}.
  const IntSet witness({1, 2, 3, 54});
  CHECK(divisor_report(witness).d == 8);
}

TEST_CASE("is_k_anti_pencil") {
  CHECK(is_k_anti_pencil(IntSet({1, 2, 3, 4, 5, 27705}), 3));
  CHECK(!is_k_anti_pencil(IntSet({1, 5, 7, 11}), 2));  // {1,11} divides and contains the max
  CHECK(!is_k_anti_pencil(IntSet({1, 2, 3}), 3));      // the only 3-subset is A, which divides
  CHECK_THROWS_AS(is_k_anti_pencil(IntSet({1, 2, 3}), 0), std::invalid_argument);
  CHECK_THROWS_AS(is_k_anti_pencil(IntSet({1, 2, 3}), 4), std::invalid_argument);

  // k-anti-pencil implies d_k = C(n-1, k): C(5,3) = 10 here.
  CHECK(divisor_report(IntSet({1, 2, 3, 4, 5, 27705})).d_k(3) == 10);
}

TEST_CASE("is_prime_set") {
  CHECK(is_prime_set(IntSet({2, 3, 6})));
  CHECK(!is_prime_set(IntSet({1, 4, 9})));  // {1} always divides
  CHECK(!is_prime_set(IntSet({1, 2, 3})));
  CHECK(is_prime_set(IntSet({7})));         // singleton: only divisor is A
}

TEST_CASE("scale and scaling invariance") {
  CHECK(scale(IntSet({1, 5, 7, 11}), 3).elements() == std::vector<std::int64_t>{3, 15, 21, 33});
  CHECK(scale(IntSet({1, 2, 3}), 1) == IntSet({1, 2, 3}));
  CHECK(divisor_report(scale(IntSet({1, 2, 3}), 2)).d == 5);
  CHECK_THROWS_AS(scale(IntSet({1, 2}), 0), std::invalid_argument);
  CHECK_THROWS_AS(scale(IntSet({1, INT64_MAX / 2}), 3), OverflowError);

  std::mt19937_64 rng(45);
  std::uniform_int_distribution<std::size_t> size_dist(1, 10);
  std::uniform_int_distribution<std::int64_t> factor(1, 9);
  for (int trial = 0; trial < 50; ++trial) {
    const IntSet a = random_set(rng, size_dist(rng), 100);
    const IntSet b = scale(a, factor(rng));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
      REQUIRE(is_divisor(a, SubsetMask{m}) == is_divisor(b, SubsetMask{m}));
    }
    const DivisorReport ra = divisor_report(a);
    const DivisorReport rb = divisor_report(b);
    CHECK(ra.d == rb.d);
    CHECK(ra.d_by_k == rb.d_by_k);
    CHECK(ra.census.barren == rb.census.barren);
    CHECK(ra.census.neutral == rb.census.neutral);
    CHECK(ra.census.abundant == rb.census.abundant);
  }
}

TEST_CASE("d(A) <= 2^{n-1} over an exhaustive small search, n = 4") {
  // Small-bound exhaustive sweep; the full-strength version is criterion 4.
  std::vector<std::int64_t> a(4);
  for (a[0] = 1; a[0] <= 12; ++a[0]) {
    for (a[1] = a[0] + 1; a[1] <= 13; ++a[1]) {
      for (a[2] = a[1] + 1; a[2] <= 14; ++a[2]) {
        for (a[3] = a[2] + 1; a[3] <= 15; ++a[3]) {
          REQUIRE(oracle::divisor_count(a) <= 8);
        }
      }
    }
  }
}
