#include "divisor_lab/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <span>

#include "divisor_lab/core.hpp"
#include "divisor_lab/constructions.hpp"
#include "divisor_lab/report.hpp"
#include "shard_runner.hpp"

namespace divisor_lab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // Exact at every step: result * (n-k+i) is divisible by i here.
    const std::uint64_t numerator = n - k + i;
    if (result > UINT64_MAX / numerator) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
    }
    result = result * numerator / i;
  }
  return result;
}

namespace {

using Clock = std::chrono::steady_clock;

/// d(A) or d_k(A) for a small candidate set, by Gray-code walk. The caller
/// guarantees n <= 12 and an overflow-free total.
std::uint64_t divisor_stat(std::span<const std::int64_t> elements, std::optional<int> k) {
  const std::size_t n = elements.size();
  std::int64_t total = 0;
  for (std::int64_t a : elements) total += a;

  std::uint64_t mask = 0;
  std::int64_t sum = 0;
  std::uint64_t count = 0;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < limit; ++i) {
    const int flip = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << flip;
    mask ^= bit;
    sum += (mask & bit) ? elements[static_cast<std::size_t>(flip)]
                        : -elements[static_cast<std::size_t>(flip)];
    if (total % sum == 0 && (!k || std::popcount(mask) == *k)) ++count;
  }
  return count;
}

struct ShardOutcome {
  std::uint64_t best = 0;
  bool any = false;
  std::vector<std::vector<std::int64_t>> arg;
  std::uint64_t examined = 0;
  std::optional<std::vector<std::int64_t>> violator;  // first in DFS order
  std::uint64_t violator_value = 0;
};

struct Accumulator {
  std::uint64_t max_value = 0;
  bool any = false;
  std::vector<std::vector<std::int64_t>> argmax;
  std::uint64_t examined = 0;
  std::optional<std::vector<std::int64_t>> counterexample;
  std::uint64_t counterexample_value = 0;
  std::size_t counterexample_shard = SIZE_MAX;
};

void merge(Accumulator& acc, ShardOutcome&& outcome, std::size_t shard_index) {
  acc.examined += outcome.examined;
  if (outcome.any) {
    if (!acc.any || outcome.best > acc.max_value) {
      acc.max_value = outcome.best;
      acc.argmax = std::move(outcome.arg);
      acc.any = true;
    } else if (outcome.best == acc.max_value) {
      acc.argmax.insert(acc.argmax.end(), std::make_move_iterator(outcome.arg.begin()),
                        std::make_move_iterator(outcome.arg.end()));
    }
  }
  if (outcome.violator && shard_index < acc.counterexample_shard) {
    acc.counterexample = std::move(outcome.violator);
    acc.counterexample_value = outcome.violator_value;
    acc.counterexample_shard = shard_index;
  }
}

/// Work shards: every strictly increasing prefix of the requested depth.
std::vector<std::vector<std::int64_t>> make_shards(const SearchTask& task, int shard_depth) {
  const std::size_t depth = std::clamp<std::size_t>(
      static_cast<std::size_t>(std::max(shard_depth, 1)), task.shard_prefix.size(),
      static_cast<std::size_t>(task.n));
  std::vector<std::vector<std::int64_t>> shards;
  std::vector<std::int64_t> prefix = task.shard_prefix;
  // Depth-first extension keeps the shard list in lexicographic order.
  auto extend = [&](auto&& self) -> void {
    if (prefix.size() == depth) {
      shards.push_back(prefix);
      return;
    }
    const std::int64_t lo = prefix.empty() ? 1 : prefix.back() + 1;
    // Leave room for the elements still to be chosen after the prefix.
    const std::int64_t hi =
        task.max_element - static_cast<std::int64_t>(task.n - prefix.size() - 1);
    for (std::int64_t v = lo; v <= hi; ++v) {
      prefix.push_back(v);
      self(self);
      prefix.pop_back();
    }
  };
  extend(extend);
  return shards;
}

/// Exhausts one shard: every increasing completion of the prefix, with the
/// gcd-1 filter applied at the leaves.
ShardOutcome scan_shard(const SearchTask& task, const std::vector<std::int64_t>& prefix,
                        std::optional<std::uint64_t> bound) {
  ShardOutcome outcome;
  std::vector<std::int64_t> set = prefix;
  set.resize(static_cast<std::size_t>(task.n));

  std::int64_t prefix_gcd = 0;
  for (std::int64_t v : prefix) prefix_gcd = std::gcd(prefix_gcd, v);

  auto dfs = [&](auto&& self, std::size_t depth, std::int64_t running_gcd) -> void {
    if (depth == static_cast<std::size_t>(task.n)) {
      if (task.normalize_gcd && running_gcd != 1) return;
      outcome.examined++;
      const std::uint64_t value = divisor_stat(set, task.k);
      if (!outcome.any || value > outcome.best) {
        outcome.best = value;
        outcome.any = true;
        outcome.arg.assign(1, set);
      } else if (value == outcome.best) {
        outcome.arg.push_back(set);
      }
      if (bound && value > *bound && !outcome.violator) {
        outcome.violator = set;
        outcome.violator_value = value;
      }
      return;
    }
    const std::int64_t lo = depth == 0 ? 1 : set[depth - 1] + 1;
    const std::int64_t hi = task.max_element - static_cast<std::int64_t>(task.n) +
                            static_cast<std::int64_t>(depth) + 1;
    for (std::int64_t v = lo; v <= hi; ++v) {
      set[depth] = v;
      self(self, depth + 1, std::gcd(running_gcd, v));
    }
  };
  dfs(dfs, prefix.size(), prefix_gcd);
  return outcome;
}

void validate(const SearchTask& task) {
  if (task.n < 1 || task.n > 12) {
    throw std::invalid_argument("search needs 1 <= n <= 12; got n=" + std::to_string(task.n));
  }
  if (task.max_element < task.n) {
    throw std::invalid_argument("search needs max_element >= n");
  }
  if (task.k && (*task.k < 1 || *task.k > task.n)) {
    throw std::invalid_argument("search needs 1 <= k <= n when k is given");
  }
  if (task.shard_prefix.size() > static_cast<std::size_t>(task.n)) {
    throw std::invalid_argument("shard prefix longer than n");
  }
  std::int64_t prev = 0;
  for (std::int64_t v : task.shard_prefix) {
    if (v <= prev || v > task.max_element) {
      throw std::invalid_argument("shard prefix must be strictly increasing within [1, max]");
    }
    prev = v;
  }
  checked_mul(task.max_element, task.n);  // total of any candidate set fits
}

struct CheckpointState {
  std::vector<char> done;
  Accumulator acc;
  double prior_elapsed = 0;
};

CheckpointState load_checkpoint(const std::string& path, const SearchTask& task, int shard_depth,
                                std::optional<std::uint64_t> bound, std::size_t shard_count) {
  CheckpointState state;
  state.done.assign(shard_count, 0);
  if (path.empty() || !std::filesystem::exists(path)) return state;

  std::ifstream in(path);
  Json j = Json::parse(in);
  if (j.value("kind", "") != "dmax" || !(task_from_json(j.at("task")) == task) ||
      j.value("shard_depth", -1) != shard_depth ||
      j.value("bound", Json()) != (bound ? Json(*bound) : Json())) {
    throw std::invalid_argument("checkpoint " + path + " belongs to a different task");
  }
  for (std::size_t i : j.at("shards_done").get<std::vector<std::size_t>>()) {
    if (i < shard_count) state.done[i] = 1;
  }
  state.acc.max_value = j.at("max_value").get<std::uint64_t>();
  state.acc.argmax = j.at("argmax_sets").get<std::vector<std::vector<std::int64_t>>>();
  state.acc.any = j.value("any", !state.acc.argmax.empty());
  state.acc.examined = j.at("sets_examined").get<std::uint64_t>();
  state.prior_elapsed = j.value("elapsed_seconds", 0.0);
  if (j.contains("counterexample")) {
    state.acc.counterexample = j["counterexample"].get<std::vector<std::int64_t>>();
    state.acc.counterexample_value = j["counterexample_value"].get<std::uint64_t>();
    state.acc.counterexample_shard = j["counterexample_shard"].get<std::size_t>();
  }
  return state;
}

void write_checkpoint(const std::string& path, const SearchTask& task, int shard_depth,
                      std::optional<std::uint64_t> bound, const std::vector<char>& done,
                      const Accumulator& acc, double elapsed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "dmax";
  j["task"] = task_json(task);
  j["shard_depth"] = shard_depth;
  if (bound) j["bound"] = *bound;
  std::vector<std::size_t> indices;
  for (std::size_t i = 0; i < done.size(); ++i) {
    if (done[i]) indices.push_back(i);
  }
  j["shards_done"] = indices;
  j["max_value"] = acc.max_value;
  j["any"] = acc.any;
  j["argmax_sets"] = acc.argmax;
  j["sets_examined"] = acc.examined;
  j["elapsed_seconds"] = elapsed;
  if (acc.counterexample) {
    j["counterexample"] = *acc.counterexample;
    j["counterexample_value"] = acc.counterexample_value;
    j["counterexample_shard"] = acc.counterexample_shard;
  }
  std::ofstream out(path);
  out << j.dump(2) << '\n';
}

/// Shared driver for run_search and verify_upper_bound.
Accumulator search_impl(const SearchTask& task, const RunOptions& options,
                        std::optional<std::uint64_t> bound, double& elapsed_out) {
  validate(task);
  const auto start = Clock::now();
  const auto shards = make_shards(task, options.shard_depth);

  CheckpointState state =
      load_checkpoint(options.checkpoint_path, task, options.shard_depth, bound, shards.size());

  std::optional<Clock::time_point> deadline;
  if (options.budget_seconds > 0) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(options.budget_seconds));
  }

  std::vector<std::optional<ShardOutcome>> slots;
  const bool finished = detail::run_shards<ShardOutcome>(
      shards.size(), state.done, options.threads, deadline, slots,
      [&](std::size_t i) { return scan_shard(task, shards[i], bound); });

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i]) {
      merge(state.acc, std::move(*slots[i]), i);
      state.done[i] = 1;
    }
  }
  elapsed_out = state.prior_elapsed + std::chrono::duration<double>(Clock::now() - start).count();

  if (!finished) {
    const std::string path =
        options.checkpoint_path.empty() ? "divisor-lab.checkpoint.json" : options.checkpoint_path;
    write_checkpoint(path, task, options.shard_depth, bound, state.done, state.acc, elapsed_out);
    throw BudgetExceededError("search budget of " + std::to_string(options.budget_seconds) +
                                  "s exceeded; resumable checkpoint written to " + path,
                              path);
  }
  if (!options.checkpoint_path.empty()) {
    std::filesystem::remove(options.checkpoint_path);  // complete: state no longer needed
  }
  std::sort(state.acc.argmax.begin(), state.acc.argmax.end());
  return state.acc;
}

bool matches_scaled(const std::vector<std::int64_t>& set,
                    std::initializer_list<std::int64_t> pattern) {
  if (set.size() != pattern.size()) return false;
  const std::int64_t a = set.front();  // patterns all start at 1
  std::size_t i = 0;
  for (std::int64_t f : pattern) {
    if (set[i++] != a * f) return false;
  }
  return true;
}

ClassifiedSet classify_argmax(const std::vector<std::int64_t>& elements,
                              const std::optional<int>& k) {
  ClassifiedSet out{elements, "unclassified", false};
  const IntSet set{elements};
  if (!k) {
    if (set.size() == 1) {
      out.family = "singleton";
      out.matches = true;
    } else if (set.size() == 3 && matches_scaled(elements, {1, 2, 3})) {
      out.family = "triple-1-2-3";
      out.matches = true;
    } else if (set.size() == 4 && matches_scaled(elements, {1, 2, 3, 6})) {
      out.family = "quad-1-2-3-6";
      out.matches = true;
    } else if (set.size() != 3 && is_anti_pencil(set)) {
      out.family = "anti-pencil";
      out.matches = true;
    }
  } else if (*k == 2) {
    if (matches_scaled(elements, {1, 5, 7, 11})) {
      out.family = "quad-1-5-7-11";
      out.matches = true;
    } else if (matches_scaled(elements, {1, 11, 19, 29})) {
      out.family = "quad-1-11-19-29";
      out.matches = true;
    }
  } else if (is_k_anti_pencil(set, static_cast<std::size_t>(*k))) {
    out.family = "k-anti-pencil";
    out.matches = true;
  }
  return out;
}

std::uint64_t predicted_extremal(const SearchTask& task) {
  if (!task.k) {
    switch (task.n) {
      case 1: return 1;
      case 2: return 2;
      case 3: return 5;
      default: return std::uint64_t{1} << (task.n - 1);
    }
  }
  const int k = *task.k;
  if (k == 1) return 1;
  if (k == 2) return 4;
  return binomial(static_cast<std::uint64_t>(task.n), static_cast<std::uint64_t>(k)) / 2;
}

}  // namespace

SearchRecord run_search(const SearchTask& task, const RunOptions& options) {
  SearchRecord record;
  record.task = task;
  Accumulator acc = search_impl(task, options, std::nullopt, record.elapsed_seconds);
  record.max_value = acc.max_value;
  record.argmax_sets = std::move(acc.argmax);
  record.sets_examined = acc.examined;
  record.checksum = detail::witness_checksum(record.argmax_sets, record.max_value);
  return record;
}

BoundCheck verify_upper_bound(const SearchTask& task, std::uint64_t bound,
                              const RunOptions& options) {
  BoundCheck check;
  check.task = task;
  check.bound = bound;
  Accumulator acc = search_impl(task, options, bound, check.elapsed_seconds);
  check.holds = !acc.counterexample.has_value();
  check.counterexample = std::move(acc.counterexample);
  check.counterexample_value = acc.counterexample_value;
  check.sets_examined = acc.examined;
  return check;
}

CharacterizationReport verify_characterization(const SearchTask& task,
                                               const RunOptions& options) {
  if (task.k && task.n != 2 * *task.k) {
    throw std::invalid_argument(
        "characterizations are known for total-d searches and for k-subset searches with "
        "n = 2k only");
  }
  CharacterizationReport report;
  report.record = run_search(task, options);
  report.predicted_max = predicted_extremal(task);
  report.attainment_witnessed = report.record.max_value == report.predicted_max;

  for (const auto& set : report.record.argmax_sets) {
    report.classified.push_back(classify_argmax(set, task.k));
    if (!report.classified.back().matches) report.unexplained.push_back(set);
  }

  if (!report.attainment_witnessed) {
    report.consistent = true;  // vacuous: no argmax set claims the global maximum
    report.note = "max_element " + std::to_string(task.max_element) +
                  " too small to witness attainment (observed " +
                  std::to_string(report.record.max_value) + " < predicted " +
                  std::to_string(report.predicted_max) + "); vacuously consistent";
  } else if (report.unexplained.empty()) {
    report.consistent = true;
    report.note = "attainment witnessed; every argmax set lies in the predicted family";
  } else {
    report.consistent = false;
    report.note = std::to_string(report.unexplained.size()) +
                  " argmax set(s) outside the predicted family";
  }
  return report;
}

DknProbe probe_dkn(int n, int k, std::int64_t max_element, const RunOptions& options) {
  SearchTask task;
  task.n = n;
  task.k = k;
  task.max_element = max_element;
  DknProbe probe;
  probe.record = run_search(task, options);
  probe.reference = binomial(static_cast<std::uint64_t>(n - 1), static_cast<std::uint64_t>(k));
  probe.exceeds = probe.record.max_value > probe.reference;
  return probe;
}

}  // namespace divisor_lab
