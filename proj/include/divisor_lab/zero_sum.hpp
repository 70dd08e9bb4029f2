#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divisor_lab/core.hpp"
#include "divisor_lab/int_set.hpp"
#include "divisor_lab/search.hpp"

namespace divisor_lab {

/// A set of distinct nonzero integers summing to zero, stored strictly
/// increasing. Integer representatives stand in for the real-valued sets:
/// the subset-sum sign pattern is all that the mu statistics depend on.
class ZeroSumSet {
 public:
  /// Sorts the input; rejects zeros, duplicates, and nonzero totals.
  explicit ZeroSumSet(std::vector<std::int64_t> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::int64_t operator[](std::size_t i) const noexcept { return elements_[i]; }
  const std::vector<std::int64_t>& elements() const noexcept { return elements_; }

  friend bool operator==(const ZeroSumSet& a, const ZeroSumSet& b) {
    return a.elements_ == b.elements_;
  }

 private:
  std::vector<std::int64_t> elements_;
};

struct MuReport {
  std::uint64_t mu = 0;                  // subsets with nonnegative sum (empty set counts)
  std::vector<std::uint64_t> mu_by_k;    // index k in [0, n]
  std::uint64_t zero_subsets = 0;        // subsets with sum exactly zero

  std::uint64_t mu_k(std::size_t k) const noexcept {
    return k < mu_by_k.size() ? mu_by_k[k] : 0;
  }
};

/// Exact mu, mu_k for all k, and the zero-sum subset count.
MuReport mu_report(const ZeroSumSet& set, std::size_t naive_limit = kNaiveLimit);

/// {-1, ..., -(n-1), n(n-1)/2}: exactly one nonnegative element. Attains
/// mu = 2^{n-1} + 1 and mu_k = C(n-1, k-1).
ZeroSumSet make_pencil(std::size_t n);

/// {1, ..., n-1, -n(n-1)/2}: exactly one negative element. Attains
/// mu_k = C(n-1, k) for 0 < k < n.
ZeroSumSet make_anti_pencil_zero(std::size_t n);

enum class MuObjective { Min, Max };

struct MuSearchTask {
  int n = 0;
  std::optional<int> k;    // absent: mu; present: mu_k
  std::int64_t bound = 0;  // elements drawn from [-bound, bound] \ {0}
  MuObjective objective = MuObjective::Min;
  std::vector<std::int64_t> shard_prefix;

  friend bool operator==(const MuSearchTask&, const MuSearchTask&) = default;
};

struct MuSearchRecord {
  MuSearchTask task;
  bool space_empty = false;  // no zero-sum n-set exists within the bound
  std::uint64_t extremal_value = 0;
  std::vector<std::vector<std::int64_t>> witness_sets;  // sorted lexicographically
  std::uint64_t sets_examined = 0;
  double elapsed_seconds = 0;
  std::uint64_t checksum = 0;
  /// Always set: states the integer bound, that 0 is excluded as an element,
  /// and that the result certifies integer sets only (evidence for reals).
  std::string caveat;
};

/// Exhaustive min/max of mu (or mu_k) over all ZeroSumSets with elements in
/// [-bound, bound], with every extremal witness. Same determinism, budget
/// and checkpoint contract as run_search.
MuSearchRecord search_mu(const MuSearchTask& task, const RunOptions& options = {});

/// For a strictly increasing set of distinct nonzero integers with negative
/// total: true iff every subset with more than k elements has negative sum.
/// Throws std::invalid_argument when the total is nonnegative.
bool check_mu_prime_feasible(std::vector<std::int64_t> elements, std::size_t k);

/// Subsets with nonnegative sum of an arbitrary distinct-nonzero integer
/// set (the mu statistic without the zero-total requirement).
std::uint64_t count_nonneg_subsets(const std::vector<std::int64_t>& elements);

}  // namespace divisor_lab
