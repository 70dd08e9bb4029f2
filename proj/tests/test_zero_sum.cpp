#include <doctest.h>

#include <filesystem>
#include <random>
#include <set>

#include "divisor_lab/zero_sum.hpp"
#include "oracle.hpp"

using namespace divisor_lab;

namespace {

ZeroSumSet random_zero_sum(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> dist(-40, 40);
  for (;;) {
    std::set<std::int64_t> chosen;
    while (chosen.size() < n - 1) {
      const std::int64_t v = dist(rng);
      if (v != 0) chosen.insert(v);
    }
    std::int64_t sum = 0;
    for (std::int64_t v : chosen) sum += v;
    if (sum == 0 || chosen.count(-sum)) continue;
    chosen.insert(-sum);
    return ZeroSumSet(std::vector<std::int64_t>(chosen.begin(), chosen.end()));
  }
}

}  // namespace

TEST_CASE("ZeroSumSet validation") {
  CHECK(ZeroSumSet({2, -3, 1}).elements() == std::vector<std::int64_t>{-3, 1, 2});
  CHECK_THROWS_AS(ZeroSumSet({0, 1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(ZeroSumSet({1, 2, -3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(ZeroSumSet({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(ZeroSumSet({5}), std::invalid_argument);
}

TEST_CASE("mu_report frozen values") {
  CHECK(mu_report(ZeroSumSet({-3, 1, 2})).mu == 5);
  CHECK(mu_report(ZeroSumSet({-2, -1, 1, 2})).mu == 10);
  CHECK(mu_report(make_pencil(8)).mu_k(2) == 7);  // pairs {28, -i}, i = 1..7
}

TEST_CASE("mu_report counts the empty set and the full set") {
  const MuReport r = mu_report(ZeroSumSet({-3, 1, 2}));
  CHECK(r.mu_by_k[0] == 1);
  CHECK(r.mu_by_k[3] == 1);
  CHECK(r.zero_subsets >= 2);
  CHECK(r.mu_k(99) == 0);
}

TEST_CASE("mu identity and duality on random zero-sum sets") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<std::size_t> size_dist(2, 12);
  for (int trial = 0; trial < 100; ++trial) {
    const ZeroSumSet a = random_zero_sum(rng, size_dist(rng));
    const MuReport r = mu_report(a);
    CHECK(r.mu == oracle::mu_count(a.elements()));
    CHECK(r.zero_subsets == oracle::zero_subset_count(a.elements()));
    CHECK(r.zero_subsets % 2 == 0);
    CHECK(r.mu == (std::uint64_t{1} << (a.size() - 1)) + r.zero_subsets / 2);

    // Sign-flip duality: mu_k(A) + mu_k(-A) = C(n,k) + (zero-sum k-subsets).
    std::vector<std::int64_t> negated;
    for (std::int64_t v : a.elements()) negated.push_back(-v);
    const ZeroSumSet b{negated};
    const MuReport rb = mu_report(b);
    for (std::size_t k = 0; k <= a.size(); ++k) {
      std::uint64_t choose = 1;
      for (std::size_t i = 1; i <= k; ++i) choose = choose * (a.size() - k + i) / i;
      CHECK(r.mu_k(k) + rb.mu_k(k) ==
            choose + oracle::zero_k_subset_count(a.elements(), static_cast<int>(k)));
    }
  }
}

TEST_CASE("make_pencil") {
  CHECK(make_pencil(3).elements() == std::vector<std::int64_t>{-2, -1, 3});
  CHECK(make_pencil(2).elements() == std::vector<std::int64_t>{-1, 1});
  CHECK(make_pencil(8).elements() ==
        std::vector<std::int64_t>{-7, -6, -5, -4, -3, -2, -1, 28});
  for (std::size_t n = 2; n <= 12; ++n) {
    const MuReport r = mu_report(make_pencil(n));
    CHECK(r.mu == (std::uint64_t{1} << (n - 1)) + 1);
    CHECK(r.zero_subsets == 2);  // only the empty set and A itself
  }
  CHECK_THROWS_AS(make_pencil(1), std::invalid_argument);
}

TEST_CASE("make_anti_pencil_zero") {
  CHECK(make_anti_pencil_zero(5).elements() == std::vector<std::int64_t>{-10, 1, 2, 3, 4});
  CHECK(mu_report(make_anti_pencil_zero(5)).mu_k(2) == 6);  // C(4,2)
  CHECK(mu_report(make_anti_pencil_zero(3)).mu == 5);
  CHECK(mu_report(make_anti_pencil_zero(2)).mu_k(1) == 1);
  // mu_k >= C(n-1, k), with equality while the negative element dominates.
  for (std::size_t n = 2; n <= 10; ++n) {
    const MuReport r = mu_report(make_anti_pencil_zero(n));
    for (std::size_t k = 1; k < n; ++k) {
      std::uint64_t choose = 1;
      for (std::size_t i = 1; i <= k; ++i) choose = choose * (n - 1 - k + i) / i;
      CHECK(r.mu_k(k) >= choose);
    }
  }
}

TEST_CASE("search_mu finds the bounded extrema") {
  const MuSearchRecord min4 = search_mu(MuSearchTask{4, std::nullopt, 8, MuObjective::Min, {}});
  CHECK(min4.extremal_value == 9);
  CHECK(!min4.space_empty);
  for (const auto& w : min4.witness_sets) {
    CHECK(oracle::mu_count(w) == 9);
  }

  const MuSearchRecord max4 = search_mu(MuSearchTask{4, std::nullopt, 5, MuObjective::Max, {}});
  CHECK(max4.extremal_value == 10);
  CHECK(std::find(max4.witness_sets.begin(), max4.witness_sets.end(),
                  std::vector<std::int64_t>{-2, -1, 1, 2}) != max4.witness_sets.end());
  CHECK(!max4.caveat.empty());
}

TEST_CASE("search_mu matches a direct enumeration on a small task") {
  // Oracle: all 4-subsets of [-6,6]\{0} with zero sum, minimizing mu_2.
  std::uint64_t best = UINT64_MAX;
  std::vector<std::int64_t> values;
  for (std::int64_t v = -6; v <= 6; ++v) {
    if (v != 0) values.push_back(v);
  }
  const std::size_t m = values.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (oracle::popcount_slow(mask) != 4) continue;
    std::vector<std::int64_t> candidate;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (std::uint64_t{1} << i)) candidate.push_back(values[i]);
    }
    if (oracle::total(candidate) != 0) continue;
    best = std::min(best, oracle::mu_k_count(candidate, 2));
  }
  const MuSearchRecord record = search_mu(MuSearchTask{4, 2, 6, MuObjective::Min, {}});
  CHECK(!record.space_empty);
  CHECK(record.extremal_value == best);
}

TEST_CASE("search_mu extrema are monotone in the bound") {
  std::uint64_t previous_max = 0;
  for (std::int64_t bound : {4, 5, 6, 8}) {
    const MuSearchRecord max_rec =
        search_mu(MuSearchTask{4, std::nullopt, bound, MuObjective::Max, {}});
    CHECK(max_rec.extremal_value >= previous_max);
    previous_max = max_rec.extremal_value;

    // MIN at any bound never dips below the unrestricted minimum 2^{n-1}+1.
    const MuSearchRecord min_rec =
        search_mu(MuSearchTask{4, std::nullopt, bound, MuObjective::Min, {}});
    CHECK(min_rec.extremal_value >= 9);
  }
}

TEST_CASE("search_mu reports an empty space honestly") {
  // No 3 distinct nonzero values in [-2, 2] sum to zero.
  const MuSearchRecord record = search_mu(MuSearchTask{3, std::nullopt, 2, MuObjective::Min, {}});
  CHECK(record.space_empty);
  CHECK(record.witness_sets.empty());
  CHECK(record.sets_examined == 0);
}

TEST_CASE("search_mu determinism and checkpointing") {
  const MuSearchTask task{5, 2, 9, MuObjective::Min, {}};
  const MuSearchRecord reference = search_mu(task);
  for (int threads : {1, 3}) {
    for (int depth : {1, 2, 3}) {
      RunOptions options;
      options.threads = threads;
      options.shard_depth = depth;
      const MuSearchRecord record = search_mu(task, options);
      CHECK(record.checksum == reference.checksum);
      CHECK(record.witness_sets == reference.witness_sets);
      CHECK(record.sets_examined == reference.sets_examined);
    }
  }

  const auto path = std::filesystem::temp_directory_path() / "divisor-lab-mu.checkpoint.json";
  std::filesystem::remove(path);
  RunOptions options;
  options.checkpoint_path = path.string();
  options.budget_seconds = 1e-9;
  CHECK_THROWS_AS(search_mu(task, options), BudgetExceededError);
  CHECK(std::filesystem::exists(path));
  options.budget_seconds = 0;
  const MuSearchRecord resumed = search_mu(task, options);
  CHECK(resumed.checksum == reference.checksum);
  CHECK(!std::filesystem::exists(path));
}

TEST_CASE("search_mu validation") {
  CHECK_THROWS_AS(search_mu(MuSearchTask{1, std::nullopt, 5, MuObjective::Min, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_mu(MuSearchTask{5, std::nullopt, 2, MuObjective::Min, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(search_mu(MuSearchTask{4, 5, 8, MuObjective::Min, {}}), std::invalid_argument);
  CHECK_THROWS_AS(search_mu(MuSearchTask{4, 2, 8, MuObjective::Min, {0, 1}}),
                  std::invalid_argument);
}

TEST_CASE("MMS at k = 1 within a small bound") {
  // Trivial instance of the conjectured bound: min mu_1 = C(n-1, 0) = 1.
  const MuSearchRecord record = search_mu(MuSearchTask{4, 1, 6, MuObjective::Min, {}});
  CHECK(record.extremal_value == 1);
}

TEST_CASE("check_mu_prime_feasible") {
  CHECK(check_mu_prime_feasible({-5, 1, 2}, 2));
  CHECK_THROWS_AS(check_mu_prime_feasible({-1, 2, 3}, 2), std::invalid_argument);
  CHECK(check_mu_prime_feasible({-10, 1, 2, 3}, 3));
  CHECK(!check_mu_prime_feasible({-20, 4, 5, 6}, 2));  // {4,5,6} sums 15 >= 0 with |B| = 3

  // The settled formula: mu <= C(n-1,k-1) + ... + C(n-1,0) + 1; tight here.
  CHECK(count_nonneg_subsets({-10, 1, 2, 3}) == 8);
}

TEST_CASE("count_nonneg_subsets matches the oracle") {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    std::set<std::int64_t> chosen;
    std::uniform_int_distribution<std::int64_t> dist(-30, 30);
    while (chosen.size() < n) {
      const std::int64_t v = dist(rng);
      if (v != 0) chosen.insert(v);
    }
    const std::vector<std::int64_t> elements(chosen.begin(), chosen.end());
    CHECK(count_nonneg_subsets(elements) == oracle::mu_count(elements));
  }
}
