#pragma once

// Congruence subgroups G0(t) and G(t) of G5, coset enumeration over the
// projective line of Z[L]/(t), and the Omega-coset criterion.

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "hecke/ideals.hpp"
#include "hecke/reduction.hpp"

namespace hecke {

bool g0_contains(const GMatrix& M, const RingElt& tau);
bool principal_contains(const GMatrix& M, const RingElt& tau);

/// T, [[2L+1, -L-2], [2L+2, -2L-1]], [[2L+1, -L], [2L, -1]]: generators of G0(2).
std::array<GMatrix, 3> g0_2_generators();

inline constexpr std::size_t kDefaultCosetBound = 10'000;

enum class Schedule { Serial, Parallel };

namespace detail {
struct CosetLookup;
}

/// Right cosets G0(t) g of G0(t) in G5, identified with points (c : d) of
/// the projective line over Z[L]/(t) via the bottom row of g.
class CosetTable {
 public:
  const Ideal& modulus() const { return modulus_; }
  std::size_t size() const { return points_.size(); }

  /// Canonical (c, d) residues, sorted.
  const std::vector<std::pair<RingElt, RingElt>>& points() const { return points_; }
  /// reps()[i] evaluates to a matrix whose bottom row is a unit multiple of
  /// point i.
  const std::vector<Word>& reps() const { return reps_; }
  const std::vector<std::uint32_t>& action_S() const { return action_S_; }
  const std::vector<std::uint32_t>& action_T() const { return action_T_; }

  GMatrix rep_matrix(std::size_t i) const { return reps_[i].evaluate(); }

  /// Index of the coset G0(t) g, found through the bottom row of g.
  std::size_t locate(const GMatrix& g) const;

  friend bool operator==(const CosetTable& x, const CosetTable& y) {
    return x.modulus_ == y.modulus_ && x.points_ == y.points_ && x.reps_ == y.reps_ &&
           x.action_S_ == y.action_S_ && x.action_T_ == y.action_T_;
  }

 private:
  friend CosetTable coset_table(const RingElt&, std::size_t, Schedule);

  explicit CosetTable(Ideal m) : modulus_(std::move(m)) {}

  Ideal modulus_;
  std::vector<std::pair<RingElt, RingElt>> points_;
  std::vector<Word> reps_;
  std::vector<std::uint32_t> action_S_;
  std::vector<std::uint32_t> action_T_;
  std::shared_ptr<const detail::CosetLookup> lookup_;
};

/// Breadth-first closure of (0 : 1) under S, T, T^-1. Throws BoundExceeded
/// when the predicted index exceeds `bound`, IntegrityError when the orbit
/// size disagrees with index_in_G5.
CosetTable coset_table(const RingElt& tau, std::size_t bound = kDefaultCosetBound,
                       Schedule schedule = Schedule::Parallel);

/// Schreier generators r_i s r_j^-1 (s in {S, T}) of G0(t), one per coset
/// and generator, with the identity dropped. Together they generate G0(t).
std::vector<GMatrix> schreier_generators(const CosetTable& table);

/// A_xy = [[1, xL], [0, 1]] [[1, 0], [y n(v) L, 1]].
struct OmegaElement {
  long x = 0;
  long y = 0;
  GMatrix matrix;
};

OmegaElement omega_element(long x, long y, const RingElt& nu);

/// Congruence criterion y = y', y^2 (x - x') = 0 (mod 3^m) for
/// A1 G0(3^m v) = A2 G0(3^m v). The result is checked against the direct
/// membership test and IntegrityError is raised on disagreement.
bool omega_coset_equal(const OmegaElement& e1, const OmegaElement& e2, int m,
                       const RingElt& nu);

/// A2^-1 A1 in G0(3^m v).
bool omega_coset_equal_direct(const OmegaElement& e1, const OmegaElement& e2, int m,
                              const RingElt& nu);

/// Deterministic pseudo-random products of T^k and [[1, 0], [k n(t) L, 1]].
/// Every output lies in G0(t); the samples need not generate all of G0(t).
std::vector<GMatrix> sample_subgroup(const RingElt& tau, std::size_t count,
                                     std::uint64_t seed);

}  // namespace hecke
