#pragma once

// Pseudo-Euclidean reduction: a = (q L) b + r with the remainder's real value
// in (-|bL|/2, |bL|/2]. Iterating it on coprime (a, b) ends in a unit
// remainder +-L^-e, which yields the reduced factor e(a/b), the reduced form
// (a L^e) / (b L^e), and a G5 word witnessing it.

#include <optional>

#include "hecke/matrix.hpp"

namespace hecke {

/// Remainder window of a division step. UpperClosed, (-|bL|/2, |bL|/2], is
/// the library convention. LowerClosed moves the closed end; reduced factors
/// do not depend on it. Floor, [0, |bL|), is a faulty rounding whose chains
/// do not terminate; both exist for fault injection in the self-test.
enum class TieRule { UpperClosed, LowerClosed, Floor };

struct ReductionOptions {
  TieRule tie = TieRule::UpperClosed;
  /// Overrides the default step cap of 64 * (bit length of the largest
  /// input coefficient).
  std::optional<std::size_t> max_steps;
};

struct PseudoStep {
  Integer q;
  RingElt r;
};

PseudoStep pseudo_divide(const RingElt& a, const RingElt& b,
                         TieRule tie = TieRule::UpperClosed);

struct ReducedFormResult {
  /// Reduced factor; negative only when the denominator is a unit of real
  /// absolute value > 1 (or for a/0 with |a| > 1).
  long e = 0;
  RingElt reduced_num;
  RingElt reduced_den;
  /// (reduced_num, reduced_den) is, up to sign, the second column.
  GMatrix witness;
  Word word;
  /// Quotients of the division chain, in order.
  std::vector<Integer> quotients;
  /// Last nonzero remainder (a unit).
  RingElt last_remainder;
};

ReducedFormResult reduced_factor(const RingElt& a, const RingElt& b,
                                 const ReductionOptions& opts = {});

bool is_reduced_form(const RingElt& x, const RingElt& y,
                     const ReductionOptions& opts = {});

/// A G5 element whose first column is exactly (reduced_num, reduced_den).
GMatrix first_column_witness(const ReducedFormResult& r);
Word first_column_word(const ReducedFormResult& r);

/// Word for M if M lies in G5, nullopt otherwise.
std::optional<Word> g5_decompose(const GMatrix& M);
bool in_G5(const GMatrix& M);

}  // namespace hecke
