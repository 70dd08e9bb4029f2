#include "divisor_lab/zero_sum.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <span>

#include "divisor_lab/report.hpp"
#include "shard_runner.hpp"

namespace divisor_lab {

ZeroSumSet::ZeroSumSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.size() < 2) {
    throw std::invalid_argument("a ZeroSumSet needs at least two elements");
  }
  if (elements_.size() > kMaxElements) {
    throw CapacityError("a ZeroSumSet holds at most " + std::to_string(kMaxElements) +
                        " elements");
  }
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("ZeroSumSet elements must be distinct");
  }
  std::int64_t total = 0;
  for (std::int64_t a : elements_) {
    if (a == 0) throw std::invalid_argument("0 is excluded as a ZeroSumSet element");
    total = checked_add(total, a);
  }
  if (total != 0) {
    throw std::invalid_argument("ZeroSumSet elements must sum to zero; got " +
                                std::to_string(total));
  }
}

namespace {

using Clock = std::chrono::steady_clock;

/// Gray-code walk over all subsets of an arbitrary integer list.
template <class Visitor>
void walk_subsets(std::span<const std::int64_t> elements, Visitor&& visit) {
  const std::size_t n = elements.size();
  std::uint64_t mask = 0;
  std::int64_t sum = 0;
  visit(std::uint64_t{0}, std::int64_t{0});
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < limit; ++i) {
    const int flip = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    mask ^= bit;
    sum += (mask & bit) ? elements[static_cast<std::size_t>(flip)]
                        : -elements[static_cast<std::size_t>(flip)];
    visit(mask, sum);
  }
}

/// mu_k(A) for one candidate set: k-subsets with nonnegative sum.
std::uint64_t mu_k_stat(std::span<const std::int64_t> elements, int k) {
  const std::size_t n = elements.size();
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::uint64_t count = 0;
  // Gosper's hack over all popcount-k masks.
  for (std::uint64_t mask = (std::uint64_t{1} << k) - 1; mask < limit;) {
    std::int64_t sum = 0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      sum += elements[static_cast<std::size_t>(std::countr_zero(bits))];
    }
    if (sum >= 0) ++count;
    const std::uint64_t u = mask & (~mask + 1);
    const std::uint64_t v = mask + u;
    if (v == 0) break;
    mask = v | (((v ^ mask) / u) >> 2);
  }
  return count;
}

std::uint64_t mu_stat(std::span<const std::int64_t> elements, const std::optional<int>& k) {
  if (k) return mu_k_stat(elements, *k);
  std::uint64_t count = 0;
  walk_subsets(elements, [&](std::uint64_t, std::int64_t sum) {
    if (sum >= 0) ++count;
  });
  return count;
}

void validate_distinct_nonzero(const std::vector<std::int64_t>& elements) {
  if (elements.empty()) throw std::invalid_argument("need at least one element");
  for (std::int64_t a : elements) {
    if (a == 0) throw std::invalid_argument("0 is excluded as an element");
  }
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end()) {
    throw std::invalid_argument("elements must be distinct");
  }
}

struct MuShardOutcome {
  std::uint64_t best = 0;
  bool any = false;
  std::vector<std::vector<std::int64_t>> witnesses;
  std::uint64_t examined = 0;
};

struct MuAccumulator {
  std::uint64_t value = 0;
  bool any = false;
  std::vector<std::vector<std::int64_t>> witnesses;
  std::uint64_t examined = 0;
};

void merge(MuAccumulator& acc, MuShardOutcome&& outcome, MuObjective objective) {
  acc.examined += outcome.examined;
  if (!outcome.any) return;
  const bool improves = !acc.any || (objective == MuObjective::Max ? outcome.best > acc.value
                                                                   : outcome.best < acc.value);
  if (improves) {
    acc.value = outcome.best;
    acc.witnesses = std::move(outcome.witnesses);
    acc.any = true;
  } else if (outcome.best == acc.value) {
    acc.witnesses.insert(acc.witnesses.end(), std::make_move_iterator(outcome.witnesses.begin()),
                         std::make_move_iterator(outcome.witnesses.end()));
  }
}

/// The candidate elements [-bound, -1] then [1, bound], ascending.
struct Ladder {
  std::vector<std::int64_t> vals;
  std::vector<std::int64_t> psum;  // psum[i] = vals[0] + ... + vals[i-1]
  std::int64_t bound;

  explicit Ladder(std::int64_t b) : bound(b) {
    for (std::int64_t v = -b; v <= b; ++v) {
      if (v != 0) vals.push_back(v);
    }
    psum.assign(vals.size() + 1, 0);
    for (std::size_t i = 0; i < vals.size(); ++i) psum[i + 1] = psum[i] + vals[i];
  }

  std::size_t size() const noexcept { return vals.size(); }

  /// Index of value v, or SIZE_MAX when v is 0 or out of range.
  std::size_t index_of(std::int64_t v) const noexcept {
    if (v == 0 || v < -bound || v > bound) return SIZE_MAX;
    return static_cast<std::size_t>(v < 0 ? v + bound : v + bound - 1);
  }
};

void validate(const MuSearchTask& task) {
  if (task.n < 2 || task.n > 12) {
    throw std::invalid_argument("search_mu needs 2 <= n <= 12; got n=" + std::to_string(task.n));
  }
  if (task.bound < 1) throw std::invalid_argument("search_mu needs bound >= 1");
  if (2 * task.bound < task.n) {
    throw std::invalid_argument("fewer than n distinct nonzero values within the bound");
  }
  if (task.k && (*task.k < 1 || *task.k > task.n)) {
    throw std::invalid_argument("search_mu needs 1 <= k <= n when k is given");
  }
  std::int64_t prev = -task.bound - 1;
  for (std::int64_t v : task.shard_prefix) {
    if (v == 0 || v <= prev || v > task.bound || v < -task.bound) {
      throw std::invalid_argument("shard prefix must be strictly increasing nonzero values "
                                  "within [-bound, bound]");
    }
    prev = v;
  }
  if (task.shard_prefix.size() > static_cast<std::size_t>(task.n)) {
    throw std::invalid_argument("shard prefix longer than n");
  }
}

std::vector<std::vector<std::size_t>> make_shards(const MuSearchTask& task, const Ladder& ladder,
                                                  int shard_depth) {
  const std::size_t depth = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(shard_depth, 1)), task.shard_prefix.size(),
      static_cast<std::size_t>(task.n));
  std::vector<std::size_t> prefix;
  for (std::int64_t v : task.shard_prefix) prefix.push_back(ladder.index_of(v));

  std::vector<std::vector<std::size_t>> shards;
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == depth) {
      shards.push_back(prefix);
      return;
    }
    const std::size_t lo = prefix.empty() ? 0 : prefix.back() + 1;
    const std::size_t room = static_cast<std::size_t>(task.n) - prefix.size() - 1;
    for (std::size_t i = lo; i + room < ladder.size(); ++i) {
      prefix.push_back(i);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return shards;
}

/// Exhausts one shard: every zero-sum completion of the index prefix, in
/// lexicographic order, with interval pruning on the reachable sums.
MuShardOutcome scan_shard(const MuSearchTask& task, const Ladder& ladder,
                          const std::vector<std::size_t>& prefix_indices) {
  MuShardOutcome outcome;
  const std::size_t n = static_cast<std::size_t>(task.n);
  const std::size_t total_vals = ladder.size();
  std::vector<std::int64_t> set(n);

  std::int64_t prefix_sum = 0;
  for (std::size_t i = 0; i < prefix_indices.size(); ++i) {
    set[i] = ladder.vals[prefix_indices[i]];
    prefix_sum += set[i];
  }

  auto leaf = [&] {
    outcome.examined++;
    const std::uint64_t value = mu_stat(set, task.k);
    const bool improves =
        !outcome.any || (task.objective == MuObjective::Max ? value > outcome.best
                                                            : value < outcome.best);
    if (improves) {
      outcome.best = value;
      outcome.any = true;
      outcome.witnesses.assign(1, set);
    } else if (value == outcome.best) {
      outcome.witnesses.push_back(set);
    }
  };

  auto dfs = [&](auto&& self, std::size_t from, std::size_t chosen, std::int64_t sum) -> void {
    const std::size_t left = n - chosen;
    if (left == 1) {
      // The last element is forced: it must cancel the running sum.
      const std::size_t i = ladder.index_of(-sum);
      if (i != SIZE_MAX && i >= from) {
        set[n - 1] = -sum;
        leaf();
      }
      return;
    }
    for (std::size_t i = from; i + left <= total_vals; ++i) {
      const std::int64_t s = sum + ladder.vals[i];
      // Smallest / largest reachable completion sums for the left-1 slots.
      const std::int64_t min_rest = ladder.psum[i + left] - ladder.psum[i + 1];
      const std::int64_t max_rest =
          ladder.psum[total_vals] - ladder.psum[total_vals - (left - 1)];
      if (s + min_rest > 0) break;  // monotone in i: nothing further can reach 0
      if (s + max_rest < 0) continue;
      set[chosen] = ladder.vals[i];
      self(self, i + 1, chosen + 1, s);
    }
  };

  // The prefix itself may already be infeasible; the same interval test applies.
  const std::size_t chosen = prefix_indices.size();
  if (chosen == n) {
    if (prefix_sum == 0) leaf();
    return outcome;
  }
  const std::size_t from = chosen == 0 ? 0 : prefix_indices.back() + 1;
  dfs(dfs, from, chosen, prefix_sum);
  return outcome;
}

std::string bound_caveat(const MuSearchTask& task) {
  return "exhaustive over sets of " + std::to_string(task.n) +
         " distinct nonzero integers in [-" + std::to_string(task.bound) + ", " +
         std::to_string(task.bound) +
         "] with zero total (0 excluded as an element); certifies integer sets within this "
         "bound and is evidence, not proof, for real-valued sets";
}

struct MuCheckpointState {
  std::vector<char> done;
  MuAccumulator acc;
  double prior_elapsed = 0;
};

MuCheckpointState load_checkpoint(const std::string& path, const MuSearchTask& task,
                                  int shard_depth, std::size_t shard_count) {
  MuCheckpointState state;
  state.done.assign(shard_count, 0);
  if (path.empty() || !std::filesystem::exists(path)) return state;

  std::ifstream in(path);
  Json j = Json::parse(in);
  if (j.value("kind", "") != "mu" || !(mu_task_from_json(j.at("task")) == task) ||
      j.value("shard_depth", -1) != shard_depth) {
    throw std::invalid_argument("checkpoint " + path + " belongs to a different task");
  }
  for (std::size_t i : j.at("shards_done").get<std::vector<std::size_t>>()) {
    if (i < shard_count) state.done[i] = 1;
  }
  state.acc.value = j.at("max_value").get<std::uint64_t>();
  state.acc.witnesses = j.at("argmax_sets").get<std::vector<std::vector<std::int64_t>>>();
  state.acc.any = j.value("any", !state.acc.witnesses.empty());
  state.acc.examined = j.at("sets_examined").get<std::uint64_t>();
  state.prior_elapsed = j.value("elapsed_seconds", 0.0);
  return state;
}

void write_checkpoint(const std::string& path, const MuSearchTask& task, int shard_depth,
                      const std::vector<char>& done, const MuAccumulator& acc, double elapsed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "mu";
  j["task"] = task_json(task);
  j["shard_depth"] = shard_depth;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < done.size(); ++i) {
    if (done[i]) indices.push_back(i);
  }
  j["shards_done"] = indices;
  j["max_value"] = acc.value;  // the running extremum, min or max objective alike
  j["any"] = acc.any;
  j["argmax_sets"] = acc.witnesses;
  j["sets_examined"] = acc.examined;
  j["elapsed_seconds"] = elapsed;
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

}  // namespace

MuReport mu_report(const ZeroSumSet& set, std::size_t naive_limit) {
  if (set.size() > naive_limit) {
    throw CapacityError("mu_report enumerates all subsets and is limited to " +
                        std::to_string(naive_limit) + " elements");
  }
  MuReport report;
  report.mu_by_k.assign(set.size() + 1, 0);
  walk_subsets(set.elements(), [&](std::uint64_t mask, std::int64_t sum) {
    if (sum >= 0) {
      report.mu++;
      report.mu_by_k[static_cast<std::size_t>(std::popcount(mask))]++;
    }
    if (sum == 0) report.zero_subsets++;
  });
  return report;
}

ZeroSumSet make_pencil(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_pencil needs n >= 2");
  std::vector<std::int64_t> elements;
  for (std::size_t i = 1; i < n; ++i) elements.push_back(-static_cast<std::int64_t>(i));
  elements.push_back(static_cast<std::int64_t>(n * (n - 1) / 2));
  return ZeroSumSet(std::move(elements));
}

ZeroSumSet make_anti_pencil_zero(std::size_t n) {
  if (n < 2) throw std::invalid_argument("make_anti_pencil_zero needs n >= 2");
  std::vector<std::int64_t> elements;
  for (std::size_t i = 1; i < n; ++i) elements.push_back(static_cast<std::int64_t>(i));
  elements.push_back(-static_cast<std::int64_t>(n * (n - 1) / 2));
  return ZeroSumSet(std::move(elements));
}

MuSearchRecord search_mu(const MuSearchTask& task, const RunOptions& options) {
  validate(task);
  const auto start = Clock::now();
  const Ladder ladder(task.bound);
  const auto shards = make_shards(task, ladder, options.shard_depth);

  MuCheckpointState state =
      load_checkpoint(options.checkpoint_path, task, options.shard_depth, shards.size());

  std::optional<Clock::time_point> deadline;
  if (options.budget_seconds > 0) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.budget_seconds));
  }

  std::vector<std::optional<MuShardOutcome>> slots;
  const bool finished = detail::run_shards<MuShardOutcome>(
      shards.size(), state.done, options.threads, deadline, slots,
      [&](std::size_t i) { return scan_shard(task, ladder, shards[i]); });

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) {
      merge(state.acc, std::move(*slots[i]), task.objective);
      state.done[i] = 1;
    }
  }
  const double elapsed =
      state.prior_elapsed + std::chrono::duration<double>(Clock::now() - start).count();

  if (!finished) {
    const std::string path =
        options.checkpoint_path.empty() ? "divisor-lab.checkpoint.json" : options.checkpoint_path;
    write_checkpoint(path, task, options.shard_depth, state.done, state.acc, elapsed);
    throw BudgetExceededError("search budget of " + std::to_string(options.budget_seconds) +
                                  "s exceeded; resumable checkpoint written to " + path,
                              path);
  }
  if (!options.checkpoint_path.empty()) {
    std::filesystem::remove(options.checkpoint_path);
  }

  MuSearchRecord record;
  record.task = task;
  record.space_empty = !state.acc.any;
  record.extremal_value = state.acc.value;
  record.witness_sets = std::move(state.acc.witnesses);
  std::sort(record.witness_sets.begin(), record.witness_sets.end());
  record.sets_examined = state.acc.examined;
  record.elapsed_seconds = elapsed;
  record.checksum = detail::witness_checksum(record.witness_sets, record.extremal_value);
  record.caveat = bound_caveat(task);
  return record;
}

bool check_mu_prime_feasible(std::vector<std::int64_t> elements, std::size_t k) {
  std::sort(elements.begin(), elements.end());
  validate_distinct_nonzero(elements);
  if (elements.size() > kNaiveLimit) {
    throw CapacityError("check_mu_prime_feasible is limited to " + std::to_string(kNaiveLimit) +
                        " elements");
  }
  std::int64_t total = 0;
  for (std::int64_t a : elements) total = checked_add(total, a);
  if (total >= 0) {
    throw std::invalid_argument("check_mu_prime_feasible needs a negative total; got " +
                                std::to_string(total));
  }
  bool feasible = true;
  walk_subsets(elements, [&](std::uint64_t mask, std::int64_t sum) {
    if (static_cast<std::size_t>(std::popcount(mask)) > k && sum >= 0) feasible = false;
  });
  return feasible;
}

std::uint64_t count_nonneg_subsets(const std::vector<std::int64_t>& elements) {
  std::vector<std::int64_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  validate_distinct_nonzero(sorted);
  if (sorted.size() > kNaiveLimit) {
    throw CapacityError("count_nonneg_subsets is limited to " + std::to_string(kNaiveLimit) +
                        " elements");
  }
  std::uint64_t count = 0;
  walk_subsets(sorted, [&](std::uint64_t, std::int64_t sum) {
    if (sum >= 0) ++count;
  });
  return count;
}

}  // namespace divisor_lab
