#pragma once

// The normalizer N(G0(t)) = G0(t/h) of G0(t) in PSL2(R), the quotient
// G0(t/h)/G0(t), the supergroup derivation chain, and the search for
// G5-elementary elements.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/subgroups.hpp"

namespace hecke {

enum class QuotientType { Trivial, Klein4, Z4xZ4, Unclassified };
std::string_view quotient_name(QuotientType q);

struct NormalizerResult {
  Ideal modulus{RingElt(1)};  // t / h
  int h = 1;
  QuotientType quotient = QuotientType::Trivial;
};

NormalizerResult normalizer_of(const RingElt& tau);

/// Membership in G0(t / h(t)).
bool normalizes(const GMatrix& M, const RingElt& tau);

/// Check independent of the formula above: conjugates `count` elements of G0(t) by M.
/// The elements are the Schreier generators of G0(t) followed by random
/// products of them (when the coset table fits the default bound), then
/// sample_subgroup output. It can only refute; `refuted == false` certifies
/// nothing.
struct SampledCheck {
  bool refuted = false;
  std::size_t checked = 0;
  std::optional<GMatrix> counterexample;  // the sampled B with M B M^-1 outside
};
SampledCheck normalizes_sampled(const GMatrix& M, const RingElt& tau, std::size_t count,
                                std::uint64_t seed);

struct QuotientTable {
  Ideal modulus{RingElt(1)};  // t
  int h = 1;
  std::vector<Word> reps;
  std::vector<std::vector<std::uint32_t>> table;  // table[i][j] = index of r_i r_j
  std::size_t identity = 0;
  std::vector<int> element_orders;
  std::map<int, int> order_profile;  // order -> count
  bool abelian = true;
  QuotientType type = QuotientType::Trivial;

  std::size_t order() const { return reps.size(); }
};

QuotientTable quotient_table(const RingElt& tau, std::size_t bound = kDefaultCosetBound);

/// Least k >= 1 with g^k in G0(t), or 0 if none up to max_power. g must lie
/// in G5.
int order_modulo(const GMatrix& g, const RingElt& tau, int max_power = 64);

/// t / gcd(t/[t], u^2 - 1); requires u/(w t) in reduced form.
Ideal reduced_form_bound(const RingElt& tau, const RingElt& u, const RingElt& w);

struct ChainStep {
  std::string label;           // "3-part" or "sqrt5-part"
  RingElt stripped;            // the removed prime power
  RingElt nu;                  // t with that part removed
  Integer n;                   // smallest rational integer of nu
  std::vector<RingElt> numerators;  // p L^e(p / n L), reduced forms over n L^(e+1)
  std::vector<RingElt> gcds;        // gcd(nu/[nu], numerator^2 - 1)
  Ideal bound{RingElt(1)};     // step bound on N(G0(t))
  Ideal running{RingElt(1)};   // lcm of all bounds so far
};

struct ChainReport {
  Ideal input{RingElt(1)};
  Ideal half_power_bound{RingElt(1)};  // [t]
  std::vector<ChainStep> steps;
  Ideal final{RingElt(1)};
  int h = 1;
};

/// Throws IntegrityError if the final bound differs from t / h(t).
ChainReport supergroup_chain(const RingElt& tau);

inline constexpr long kDefaultElementaryBound = 40;

enum class ElementaryOutcome { CounterexampleFound, NoCounterexampleUpTo };

struct ElementaryVerdict {
  RingElt r;
  ElementaryOutcome verdict = ElementaryOutcome::NoCounterexampleUpTo;
  /// (x, y) with x/(r y) reduced and x^2 != 1 mod r.
  std::optional<std::pair<RingElt, RingElt>> witness;
  long bound = kDefaultElementaryBound;
  std::string source;  // "trivial", "targeted" or "box"
};

ElementaryVerdict is_g5_elementary(const RingElt& r, long bound = kDefaultElementaryBound,
                                   Schedule schedule = Schedule::Parallel);

struct StrongVerdict {
  bool holds = true;
  std::vector<RingElt> divisors;  // non-unit divisors examined
  std::optional<ElementaryVerdict> failure;
};

StrongVerdict strongly_elementary(const RingElt& r, long bound = kDefaultElementaryBound,
                                  Schedule schedule = Schedule::Parallel);

}  // namespace hecke
