#pragma once

// Fixed-width arithmetic in Z[L]/(t) for moduli small enough to enumerate.
// Residues are encoded as b * n + a with 0 <= a < n, 0 <= b < g, matching
// the Hermite normal form used by ResidueCtx.

#include <cstdint>
#include <vector>

#include "hecke/ideals.hpp"

namespace hecke::detail {

class SmallResidue {
 public:
  /// Throws BoundExceeded if |Z[L]/(t)| > max_size.
  SmallResidue(const ResidueCtx& ctx, std::int64_t max_size);

  std::int64_t size() const { return n_ * g_; }

  std::int64_t index(std::int64_t a, std::int64_t b) const {
    std::int64_t k = floor_div(b, g_);
    a -= k * s_;
    b -= k * g_;
    a %= n_;
    if (a < 0) a += n_;
    return b * n_ + a;
  }

  std::int64_t from(const RingElt& x) const;
  RingElt to_elt(std::int64_t i) const { return RingElt(i % n_, i / n_); }

  std::int64_t mul(std::int64_t i, std::int64_t j) const {
    std::int64_t a1 = i % n_, b1 = i / n_;
    std::int64_t a2 = j % n_, b2 = j / n_;
    std::int64_t bb = b1 * b2;
    return index(a1 * a2 + bb, a1 * b2 + a2 * b1 + bb);
  }
  std::int64_t add(std::int64_t i, std::int64_t j) const {
    return index(i % n_ + j % n_, i / n_ + j / n_);
  }
  std::int64_t neg(std::int64_t i) const { return index(-(i % n_), -(i / n_)); }
  std::int64_t times_lambda(std::int64_t i) const {
    std::int64_t a = i % n_, b = i / n_;
    return index(b, a + b);
  }

  std::int64_t one() const { return index(1, 0); }
  const std::vector<std::int64_t>& units() const { return units_; }
  bool is_unit(std::int64_t i) const { return unit_flag_[static_cast<std::size_t>(i)]; }

 private:
  static std::int64_t floor_div(std::int64_t x, std::int64_t y) {
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return q;
  }

  std::int64_t n_ = 1;
  std::int64_t s_ = 0;
  std::int64_t g_ = 1;
  std::vector<std::int64_t> units_;
  std::vector<bool> unit_flag_;
};

}  // namespace hecke::detail
