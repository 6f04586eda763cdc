#pragma once

// Fixed-width fast paths used by the enumeration oracles. Each kernel has a
// serial reference schedule; the exact mpz code in reduction.cpp is the
// ground truth both are tested against.

#include <cstdint>
#include <optional>
#include <utility>

#include "hecke/subgroups.hpp"

namespace hecke::kernel {

struct SmallElt {
  std::int64_t a = 0;
  std::int64_t b = 0;
};

struct SmallReduction {
  bool coprime = false;
  long e = 0;  // valid when coprime
};

/// Reduced factor of x/y (y != 0) in 64/128-bit arithmetic; nullopt when an
/// intermediate leaves the safe range.
std::optional<SmallReduction> small_reduced_factor(SmallElt x, SmallElt y);

/// Least (in the order (y, x), each lexicographic on coefficients) pair with
/// x/(r y) reduced and x^2 != 1 mod r, over coefficients in [-bound, bound].
std::optional<std::pair<RingElt, RingElt>> elementary_box_search(const RingElt& r,
                                                                 long bound,
                                                                 Schedule schedule);

}  // namespace hecke::kernel
