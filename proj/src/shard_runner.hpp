#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace divisor_lab::detail {

/// Runs fn(i) for every shard index not marked done, pulling indices from a
/// shared atomic counter. A worker checks the deadline before taking new
/// work, so an in-flight shard always completes and the done/not-done state
/// stays shard-granular. Results land in slots[i]; callers merge in index
/// order, which makes the outcome independent of thread count.
/// Returns false when the deadline cut the run short.
template <class Result, class Fn>
bool run_shards(std::size_t shard_count, const std::vector<char>& done, int threads,
                std::optional<std::chrono::steady_clock::time_point> deadline,
                std::vector<std::optional<Result>>& slots, Fn&& fn) {
  slots.assign(shard_count, std::nullopt);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> out_of_time{false};

  auto worker = [&] {
    for (;;) {
      if (deadline && std::chrono::steady_clock::now() >= *deadline) {
        out_of_time.store(true, std::memory_order_relaxed);
        return;
      }
      const std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= shard_count) return;
      if (done[i]) continue;
      slots[i] = fn(i);
    }
  };

  int n = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  return !out_of_time.load();
}

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Order-independent digest of a witness list plus the extremal value.
inline std::uint64_t witness_checksum(const std::vector<std::vector<std::int64_t>>& sets,
                                      std::uint64_t value) {
  std::uint64_t acc = 0;
  std::string buffer;
  for (const auto& set : sets) {
    buffer.clear();
    for (std::int64_t a : set) {
      buffer += std::to_string(a);
      buffer += ',';
    }
    acc += fnv1a64(buffer);  // wrapping add: order independent
  }
  return splitmix64(acc ^ value);
}

}  // namespace divisor_lab::detail
