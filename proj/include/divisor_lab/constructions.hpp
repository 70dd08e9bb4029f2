#pragma once

#include <cstdint>
#include <optional>

#include "divisor_lab/int_set.hpp"

namespace divisor_lab {

/// The closed-form extremal families, plus the three generic constructions.
enum class FamilyKind {
  Triple_1_2_3,      // {a, 2a, 3a}, d = 5
  Quad_1_2_3_6,      // {a, 2a, 3a, 6a}, d = 8
  Quad_1_5_7_11,     // {a, 5a, 7a, 11a}, d_2 = 4
  Quad_1_11_19_29,   // {a, 11a, 19a, 29a}, d_2 = 4
  AntiPencil,        // lcm construction over a base set
  KAntiPencil,       // lcm construction over k-subset sums of a base set
  PrimeSet,          // prime-total construction over a base set
};

struct FamilyId {
  FamilyKind kind;
  std::int64_t scale = 1;        // closed-form families
  std::optional<IntSet> base;    // constructive families
  std::size_t k = 0;             // KAntiPencil only
};

/// Extends the base with a = l' - sum(base), where l is the lcm of all
/// nonempty subset sums of the base and l' the smallest multiple of l making
/// a positive and distinct from the base elements. Every nonempty subset of
/// the base divides the result, so d >= 2^{n-1} for the n-element result.
IntSet construct_anti_pencil(const IntSet& base);

/// Same recipe with l = lcm of the k-subset sums of the base; every k-subset
/// of the base divides the result, so d_k >= C(n-1, k).
IntSet construct_k_anti_pencil(const IntSet& base, std::size_t k);

/// Extends the base (which must not contain 1) with a = p - sum(base) for
/// the smallest prime p >= 2*sum(base) with a not in the base. The result's
/// total is prime and exceeds twice any proper subset sum, so d = 1.
IntSet construct_prime_set(const IntSet& base);

/// The named family at the given scale / over the given base.
IntSet family(const FamilyId& id);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t x);

}  // namespace divisor_lab
