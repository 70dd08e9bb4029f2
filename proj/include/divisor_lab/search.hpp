#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "divisor_lab/int_set.hpp"

namespace divisor_lab {

/// Exact binomial coefficient; throws OverflowError past 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// A normalized description of one exhaustive search space: all strictly
/// increasing n-element subsets of [1, max_element], optionally restricted
/// to gcd-1 sets and/or to sets starting with a fixed prefix.
struct SearchTask {
  int n = 0;
  std::optional<int> k;                     // absent: maximize d; present: maximize d_k
  std::int64_t max_element = 0;
  bool normalize_gcd = true;
  std::vector<std::int64_t> shard_prefix;   // empty = whole space

  friend bool operator==(const SearchTask&, const SearchTask&) = default;
};

/// Execution knobs. These never change results, only how work is split.
struct RunOptions {
  int threads = 0;              // 0 = hardware concurrency
  int shard_depth = 2;          // prefix length defining work shards
  double budget_seconds = 0;    // 0 = unlimited
  std::string checkpoint_path;  // loaded when present on disk; written on budget stop
};

struct SearchRecord {
  SearchTask task;
  std::uint64_t max_value = 0;
  std::vector<std::vector<std::int64_t>> argmax_sets;  // sorted lexicographically
  std::uint64_t sets_examined = 0;
  double elapsed_seconds = 0;
  std::uint64_t checksum = 0;  // order-independent digest of argmax_sets and max_value
};

/// Examines every candidate set, returning the exact maximum of d (or d_k)
/// and all sets attaining it. Deterministic: identical tasks produce
/// identical records (minus elapsed time) for any threads/shard_depth.
/// Throws BudgetExceededError after writing a checkpoint when the budget
/// runs out.
SearchRecord run_search(const SearchTask& task, const RunOptions& options = {});

struct BoundCheck {
  SearchTask task;
  std::uint64_t bound = 0;
  bool holds = false;
  /// Lexicographically first violating set, when any exists.
  std::optional<std::vector<std::int64_t>> counterexample;
  std::uint64_t counterexample_value = 0;
  std::uint64_t sets_examined = 0;
  double elapsed_seconds = 0;
};

/// True result iff no examined set exceeds the bound.
BoundCheck verify_upper_bound(const SearchTask& task, std::uint64_t bound,
                              const RunOptions& options = {});

struct ClassifiedSet {
  std::vector<std::int64_t> set;
  std::string family;  // "anti-pencil", "quad-1-2-3-6 (x a)", ... or "unclassified"
  bool matches = false;
};

struct CharacterizationReport {
  SearchRecord record;
  std::uint64_t predicted_max = 0;    // the theorem's unbounded extremal value
  bool attainment_witnessed = false;  // record.max_value == predicted_max
  std::vector<ClassifiedSet> classified;
  std::vector<std::vector<std::int64_t>> unexplained;  // argmax sets outside the prediction
  bool consistent = false;  // no unexplained sets (vacuously true when unattained)
  std::string note;
};

/// Runs the search and checks every argmax set against the predicted
/// extremal family: anti-pencils / {a,2a,3a,6a} / {a,2a,3a} for total-d
/// tasks, the two quads or k-anti-pencils for k-subset tasks with n = 2k.
/// When max_element is too small to witness the true maximum the report is
/// vacuously consistent and says so.
CharacterizationReport verify_characterization(const SearchTask& task,
                                               const RunOptions& options = {});

struct DknProbe {
  SearchRecord record;
  std::uint64_t reference = 0;  // C(n-1, k)
  bool exceeds = false;         // max_value > reference
};

/// Empirical probe of d(k, n) against the conjectured C(n-1, k), any n, k.
DknProbe probe_dkn(int n, int k, std::int64_t max_element, const RunOptions& options = {});

}  // namespace divisor_lab
