#include "divisor_lab/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "divisor_lab/enumeration.hpp"

namespace divisor_lab {

namespace {

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
  const std::int64_t g = std::gcd(a, b);
  return checked_mul(a / g, b);
}

/// lcm of the given sums; reports the pair that overflowed when one does.
std::int64_t lcm_of(const std::vector<std::int64_t>& sums) {
  std::int64_t l = 1;
  for (std::int64_t s : sums) {
    try {
      l = checked_lcm(l, s);
    } catch (const OverflowError&) {
      throw OverflowError("lcm of subset sums exceeds 64 bits (lcm so far " + std::to_string(l) +
                          ", next sum " + std::to_string(s) + ")");
    }
  }
  return l;
}

/// Smallest a = m*l - base_total with a >= 1 and a not an element of base.
IntSet extend_by_multiple(const IntSet& base, std::int64_t l) {
  const std::int64_t total = base.total();
  for (std::int64_t target = l;; target = checked_add(target, l)) {
    const std::int64_t a = target - total;
    if (a < 1) continue;
    if (std::binary_search(base.elements().begin(), base.elements().end(), a)) continue;
    std::vector<std::int64_t> elements = base.elements();
    elements.push_back(a);
    return IntSet(std::move(elements));
  }
}

std::vector<std::int64_t> nonempty_subset_sums(const IntSet& base) {
  std::vector<std::int64_t> sums;
  stream_sums(base, [&](SubsetMask m, std::int64_t sum) {
    if (m.bits != 0) sums.push_back(sum);
  });
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int r = std::countr_zero(d);
  d >>= r;
  // These witnesses decide primality for every 64-bit integer.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 0; i < r - 1; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

IntSet construct_anti_pencil(const IntSet& base) {
  return extend_by_multiple(base, lcm_of(nonempty_subset_sums(base)));
}

IntSet construct_k_anti_pencil(const IntSet& base, std::size_t k) {
  if (k < 1 || k > base.size()) {
    throw std::invalid_argument("construct_k_anti_pencil needs 1 <= k <= |base|");
  }
  std::vector<std::int64_t> sums;
  stream_sums(base, [&](SubsetMask m, std::int64_t sum) {
    if (m.popcount() == static_cast<int>(k)) sums.push_back(sum);
  });
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return extend_by_multiple(base, lcm_of(sums));
}

IntSet construct_prime_set(const IntSet& base) {
  if (base.elements().front() == 1) {
    throw std::invalid_argument("construct_prime_set needs 1 not in the base ({1} divides everything)");
  }
  const std::int64_t total = base.total();
  for (std::int64_t p = checked_mul(total, 2);; p = checked_add(p, 1)) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
    const std::int64_t a = p - total;
    if (std::binary_search(base.elements().begin(), base.elements().end(), a)) continue;
    std::vector<std::int64_t> elements = base.elements();
    elements.push_back(a);
    return IntSet(std::move(elements));
  }
}

IntSet family(const FamilyId& id) {
  auto closed_form = [&](std::initializer_list<std::int64_t> pattern) {
    std::vector<std::int64_t> elements;
    for (std::int64_t f : pattern) elements.push_back(checked_mul(f, id.scale));
    return IntSet(std::move(elements));
  };
  auto base = [&]() -> const IntSet& {
    if (!id.base) throw std::invalid_argument("this family needs a base set");
    return *id.base;
  };

  switch (id.kind) {
    case FamilyKind::Triple_1_2_3: return closed_form({1, 2, 3});
    case FamilyKind::Quad_1_2_3_6: return closed_form({1, 2, 3, 6});
    case FamilyKind::Quad_1_5_7_11: return closed_form({1, 5, 7, 11});
    case FamilyKind::Quad_1_11_19_29: return closed_form({1, 11, 19, 29});
    case FamilyKind::AntiPencil: return construct_anti_pencil(base());
    case FamilyKind::KAntiPencil: return construct_k_anti_pencil(base(), id.k);
    case FamilyKind::PrimeSet: return construct_prime_set(base());
  }
  throw std::invalid_argument("unknown family kind");
}

}  // namespace divisor_lab
