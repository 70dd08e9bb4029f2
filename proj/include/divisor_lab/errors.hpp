#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace divisor_lab {

/// A SubsetMask with bits outside the associated set's index range.
class InvalidMaskError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A request beyond a hard size limit (naive enumeration, half tables, masks).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exact 64-bit arithmetic would wrap. Divisibility is meaningless modulo
/// 2^64, so every sum/product in this library is checked.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A search ran out of time budget. The resumable state was written to
/// checkpoint_path() before unwinding.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& message, std::string checkpoint_path)
      : std::runtime_error(message), checkpoint_path_(std::move(checkpoint_path)) {}

  const std::string& checkpoint_path() const noexcept { return checkpoint_path_; }

 private:
  std::string checkpoint_path_;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("integer sum exceeds 64 bits: " + std::to_string(a) + " + " +
                        std::to_string(b));
  }
  return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("integer product exceeds 64 bits: " + std::to_string(a) + " * " +
                        std::to_string(b));
  }
  return out;
}

}  // namespace divisor_lab
