#include "divisor_lab/int_set.hpp"

#include <algorithm>
#include <string>

namespace divisor_lab {

IntSet::IntSet(std::vector<std::int64_t> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw std::invalid_argument("an IntSet needs at least one element");
  }
  if (elements_.size() > kMaxElements) {
    throw CapacityError("an IntSet holds at most " + std::to_string(kMaxElements) +
                        " elements; got " + std::to_string(elements_.size()));
  }
  std::sort(elements_.begin(), elements_.end());
  if (elements_.front() < 1) {
    throw std::invalid_argument("IntSet elements must be positive; got " +
                                std::to_string(elements_.front()));
  }
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end()) {
    throw std::invalid_argument("IntSet elements must be distinct (sets, not multisets)");
  }
  for (std::int64_t a : elements_) total_ = checked_add(total_, a);
}

void IntSet::require_valid(SubsetMask mask) const {
  if (mask.bits >> elements_.size() != 0) {
    throw InvalidMaskError("mask 0x" + std::to_string(mask.bits) + " addresses elements beyond n=" +
                           std::to_string(elements_.size()));
  }
}

}  // namespace divisor_lab
