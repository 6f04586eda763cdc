#include "hecke/normalizer.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "hecke/kernels.hpp"

namespace hecke {

std::string_view quotient_name(QuotientType q) {
  switch (q) {
    case QuotientType::Trivial: return "Trivial";
    case QuotientType::Klein4: return "Klein4";
    case QuotientType::Z4xZ4: return "Z4xZ4";
    case QuotientType::Unclassified: return "Unclassified";
  }
  return "Unclassified";
}

namespace {

RingElt divide_exact(const RingElt& x, const RingElt& d) {
  auto q = exact_divide(x, d);
  if (!q) throw Error(ErrorCode::IntegrityError, "expected exact division");
  return *q;
}

void require_modulus(const RingElt& tau) {
  if (tau.is_zero()) throw Error(ErrorCode::ZeroInput, "modulus must be nonzero");
}

QuotientType type_for_h(int h) {
  switch (h) {
    case 2: return QuotientType::Klein4;
    case 4: return QuotientType::Z4xZ4;
    default: return QuotientType::Trivial;
  }
}

}  // namespace

NormalizerResult normalizer_of(const RingElt& tau) {
  require_modulus(tau);
  if (is_unit(tau)) throw Error(ErrorCode::UnitModulus, "G0 of a unit is G5 itself");
  int h = h_of(tau);
  return {Ideal(divide_exact(tau, RingElt(h))), h, type_for_h(h)};
}

bool normalizes(const GMatrix& M, const RingElt& tau) {
  return g0_contains(M, normalizer_of(tau).modulus.generator());
}

SampledCheck normalizes_sampled(const GMatrix& M, const RingElt& tau, std::size_t count,
                                std::uint64_t seed) {
  require_modulus(tau);
  SampledCheck out;
  std::vector<GMatrix> pool;
  try {
    std::vector<GMatrix> gens = schreier_generators(coset_table(tau));
    pool = gens;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.empty() ? 0 : gens.size() - 1);
    std::uniform_int_distribution<int> length(2, 4);
    while (!gens.empty() && pool.size() < count) {
      GMatrix g;
      for (int k = length(rng); k > 0; --k) g *= gens[pick(rng)];
      pool.push_back(std::move(g));
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BoundExceeded) throw;
  }
  if (pool.size() > count) pool.resize(count);
  std::vector<GMatrix> extra = sample_subgroup(tau, count - pool.size(), seed);
  pool.insert(pool.end(), extra.begin(), extra.end());
  for (const GMatrix& B : pool) {
    ++out.checked;
    if (!g0_contains(conjugate(M, B), tau)) {
      out.refuted = true;
      out.counterexample = B;
      break;
    }
  }
  return out;
}

int order_modulo(const GMatrix& g, const RingElt& tau, int max_power) {
  GMatrix p = g;
  for (int k = 1; k <= max_power; ++k) {
    if (divides(tau, p.c())) return k;
    p *= g;
  }
  return 0;
}

QuotientTable quotient_table(const RingElt& tau, std::size_t bound) {
  NormalizerResult nr = normalizer_of(tau);
  QuotientTable out;
  out.modulus = Ideal(tau);
  out.h = nr.h;
  if (nr.h == 1) {
    out.reps.emplace_back();
    out.table = {{0}};
    out.element_orders = {1};
    out.order_profile = {{1, 1}};
    return out;
  }

  CosetTable cosets = coset_table(tau, bound);
  const RingElt& coarse = nr.modulus.generator();
  std::vector<std::size_t> members;
  std::vector<GMatrix> mats;
  std::unordered_map<std::size_t, std::uint32_t> position;
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    GMatrix m = cosets.rep_matrix(i);
    if (!divides(coarse, m.c())) continue;
    position.emplace(i, static_cast<std::uint32_t>(members.size()));
    members.push_back(i);
    mats.push_back(std::move(m));
    out.reps.push_back(cosets.reps()[i]);
  }
  const std::size_t n = members.size();
  if (Integer(static_cast<unsigned long>(n)) != relative_index(tau, coarse)) {
    throw Error(ErrorCode::NotAGroup, "coset count disagrees with the relative index");
  }
  out.identity = position.at(cosets.locate(GMatrix()));

  out.table.assign(n, std::vector<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> hit(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      auto it = position.find(cosets.locate(mats[i] * mats[j]));
      if (it == position.end()) {
        throw Error(ErrorCode::NotAGroup, "product left the normalizer");
      }
      out.table[i][j] = it->second;
      if (hit[it->second]) throw Error(ErrorCode::NotAGroup, "row is not a permutation");
      hit[it->second] = true;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (out.table[out.identity][i] != i || out.table[i][out.identity] != i) {
      throw Error(ErrorCode::NotAGroup, "identity coset is not neutral");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (out.table[i][j] != out.table[j][i]) out.abelian = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (out.table[out.table[i][j]][k] != out.table[i][out.table[j][k]]) {
          throw Error(ErrorCode::NotAGroup, "coset product is not associative");
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    int k = 1;
    for (std::size_t p = i; p != out.identity; p = out.table[p][i]) ++k;
    out.element_orders.push_back(k);
    ++out.order_profile[k];
  }

  const std::map<int, int> klein{{1, 1}, {2, 3}};
  const std::map<int, int> z4z4{{1, 1}, {2, 3}, {4, 12}};
  if (out.abelian && out.order_profile == klein) {
    out.type = QuotientType::Klein4;
  } else if (out.abelian && out.order_profile == z4z4) {
    out.type = QuotientType::Z4xZ4;
  } else {
    out.type = QuotientType::Unclassified;
  }
  return out;
}

Ideal reduced_form_bound(const RingElt& tau, const RingElt& u, const RingElt& w) {
  require_modulus(tau);
  bool reduced = false;
  try {
    reduced = is_reduced_form(u, w * tau);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCoprime && e.code() != ErrorCode::DivisionByZero) throw;
  }
  if (!reduced) throw Error(ErrorCode::NotReduced, "u / (w t) is not in reduced form");
  RingElt quotient = divide_exact(tau, half_power_part(tau).generator());
  RingElt x = gcd(quotient, u * u - 1);
  return Ideal(divide_exact(tau, x));
}

namespace {

ChainStep chain_step(std::string label, const Factorization& f, const Integer& p,
                     const std::vector<long>& numerators) {
  ChainStep st;
  st.label = std::move(label);
  st.stripped = RingElt(1);
  RingElt nu = f.recompose();
  for (const auto& [prime, m] : f.factors) {
    if (prime.residue_characteristic != p) continue;
    for (int i = 0; i < m; ++i) st.stripped = st.stripped * prime.generator;
  }
  st.nu = divide_exact(nu, st.stripped);
  st.n = smallest_rational_integer(st.nu);
  const RingElt den = RingElt(st.n) * RingElt::lambda();
  const RingElt quotient = divide_exact(st.nu, half_power_part(st.nu).generator());
  RingElt joint(0);
  for (long num : numerators) {
    ReducedFormResult rf = reduced_factor(RingElt(num), den);
    RingElt w = divide_exact(rf.reduced_den, st.nu);
    Ideal b = reduced_form_bound(st.nu, rf.reduced_num, w);
    st.numerators.push_back(rf.reduced_num);
    st.gcds.push_back(gcd(quotient, rf.reduced_num * rf.reduced_num - 1));
    joint = joint.is_zero() ? b.generator() : lcm(joint, b.generator());
  }
  st.bound = Ideal(joint);
  return st;
}

}  // namespace

ChainReport supergroup_chain(const RingElt& tau) {
  require_modulus(tau);
  if (is_unit(tau)) throw Error(ErrorCode::UnitModulus, "G0 of a unit is G5 itself");
  ChainReport out;
  out.input = Ideal(tau);
  out.half_power_bound = half_power_part(tau);
  out.h = h_of(tau);
  Factorization f = factor(tau);

  RingElt running = out.half_power_bound.generator();
  out.steps.push_back(chain_step("3-part", f, Integer(3), {3, 9}));
  out.steps.push_back(chain_step("sqrt5-part", f, Integer(5), {5}));
  for (ChainStep& st : out.steps) {
    running = lcm(running, st.bound.generator());
    st.running = Ideal(running);
  }
  out.final = Ideal(running);
  if (!(out.final == normalizer_of(tau).modulus)) {
    throw Error(ErrorCode::IntegrityError, "derived bound differs from t / h(t)");
  }
  return out;
}

namespace {

bool squares_to_one(const RingElt& x, const RingElt& r) {
  return divides(r, x * x - 1);
}

// p L^e(p / n L) over n L^(e+1) for the fixed probes p.
std::optional<std::pair<RingElt, RingElt>> targeted_witness(const RingElt& r) {
  const Integer n = smallest_rational_integer(r);
  const RingElt den = RingElt(n) * RingElt::lambda();
  for (long p : {2L, 3L, 9L, 5L}) {
    Integer g;
    Integer pp(p);
    mpz_gcd(g.get_mpz_t(), pp.get_mpz_t(), n.get_mpz_t());
    if (g != 1) continue;
    ReducedFormResult rf = reduced_factor(RingElt(p), den);
    if (squares_to_one(rf.reduced_num, r)) continue;
    return std::make_pair(rf.reduced_num, divide_exact(rf.reduced_den, r));
  }
  return std::nullopt;
}

ElementaryVerdict found(const RingElt& r, long bound, std::pair<RingElt, RingElt> w,
                        std::string source) {
  const auto& [x, y] = w;
  if (!is_reduced_form(x, r * y) || squares_to_one(x, r)) {
    throw Error(ErrorCode::IntegrityError, "elementary counterexample failed verification");
  }
  return {r, ElementaryOutcome::CounterexampleFound, std::move(w), bound, std::move(source)};
}

}  // namespace

ElementaryVerdict is_g5_elementary(const RingElt& r, long bound, Schedule schedule) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "r must be nonzero");
  if (bound < 1) throw Error(ErrorCode::BadRange, "search bound must be positive");
  if (is_unit(r)) return {r, ElementaryOutcome::NoCounterexampleUpTo, std::nullopt, bound, "trivial"};
  if (auto w = targeted_witness(r)) return found(r, bound, std::move(*w), "targeted");
  if (auto w = kernel::elementary_box_search(r, bound, schedule)) {
    return found(r, bound, std::move(*w), "box");
  }
  return {r, ElementaryOutcome::NoCounterexampleUpTo, std::nullopt, bound, "box"};
}

StrongVerdict strongly_elementary(const RingElt& r, long bound, Schedule schedule) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "r must be nonzero");
  StrongVerdict out;
  for (const RingElt& d : divisors(r)) {
    if (!is_unit(d)) out.divisors.push_back(d);
  }
  // cheap probes over every divisor before any box search
  for (const RingElt& d : out.divisors) {
    if (auto w = targeted_witness(d)) {
      out.holds = false;
      out.failure = found(d, bound, std::move(*w), "targeted");
      return out;
    }
  }
  for (const RingElt& d : out.divisors) {
    ElementaryVerdict v = is_g5_elementary(d, bound, schedule);
    if (v.verdict == ElementaryOutcome::CounterexampleFound) {
      out.holds = false;
      out.failure = std::move(v);
      return out;
    }
  }
  return out;
}

}  // namespace hecke
