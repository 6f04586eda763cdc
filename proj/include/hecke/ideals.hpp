#pragma once

// Ideals of Z[L]: factorization, the half-power part [t], h(t), the index
// of G0(t) in G5, and residue arithmetic modulo t.

#include <cstdint>
#include <string_view>
#include <vector>

#include "hecke/ring.hpp"

namespace hecke {

/// A nonzero ideal, stored through its canonical generator.
class Ideal {
 public:
  explicit Ideal(const RingElt& generator);

  const RingElt& generator() const { return generator_; }
  Integer abs_norm() const { return hecke::abs_norm(generator_); }
  bool is_unit() const { return hecke::is_unit(generator_); }
  bool divides(const RingElt& x) const { return hecke::divides(generator_, x); }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  RingElt generator_;
};

enum class Splitting { Split, Inert, Ramified };
std::string_view splitting_name(Splitting s);

struct PrimeFactor {
  RingElt generator;  // canonical associate
  Integer residue_characteristic;
  Splitting splitting = Splitting::Inert;
  Integer absolute_norm;

  friend bool operator==(const PrimeFactor&, const PrimeFactor&) = default;
};

struct Factorization {
  UnitRep unit;
  std::vector<std::pair<PrimeFactor, int>> factors;

  /// unit * prod generator^multiplicity
  RingElt recompose() const;
};

inline constexpr std::uint64_t kDefaultTrialDivisionCap = 1'000'000;

/// Primes of Z[L] above a rational prime p, sorted by generator.
std::vector<PrimeFactor> primes_above(const Integer& p);

Factorization factor(const RingElt& tau,
                     std::uint64_t trial_cap = kDefaultTrialDivisionCap);

/// [t] = prod p^(m - floor(m/2)).
Ideal half_power_part(const RingElt& tau);

/// Largest h in {1, 2, 4} with h^2 | t.
int h_of(const RingElt& tau);

/// [G5 : G0(t)] = N(t) prod_{P | t} (1 + 1/N(P)).
Integer index_in_G5(const RingElt& tau);

/// [G0(coarse) : G0(fine)] for coarse | fine.
Integer relative_index(const RingElt& fine, const RingElt& coarse);

/// Least n > 0 with t | n.
Integer smallest_rational_integer(const RingElt& tau);

/// All divisors of t up to associates (canonical generators), sorted by
/// (norm, generator).
std::vector<RingElt> divisors(const RingElt& tau);

/// Canonical generators of every nonzero ideal of norm <= bound, sorted by
/// (norm, generator).
std::vector<RingElt> ideals_up_to_norm(const Integer& bound);

/// Coefficient lattice of (t) in Hermite normal form: columns (n, 0) and
/// (s, g) in the (1, L) basis with 0 <= s < n, n * g = |N(t)|.
class ResidueCtx {
 public:
  explicit ResidueCtx(const RingElt& tau);

  const Ideal& modulus() const { return modulus_; }
  /// smallest positive rational integer in (t)
  const Integer& n() const { return n_; }
  const Integer& s() const { return s_; }
  const Integer& g() const { return g_; }
  /// |Z[L] / (t)|
  Integer size() const { return n_ * g_; }

  /// Representative with 0 <= b < g and 0 <= a < n.
  RingElt reduce(const RingElt& x) const;
  bool congruent(const RingElt& x, const RingElt& y) const;

 private:
  Ideal modulus_;
  Integer n_;
  Integer s_;
  Integer g_;
};

RingElt residue_reduce(const RingElt& x, const ResidueCtx& ctx);

}  // namespace hecke
