#include "hecke/ideals.hpp"

#include <algorithm>

namespace hecke {

namespace {

bool factor_order(const PrimeFactor& x, const PrimeFactor& y) {
  if (x.absolute_norm != y.absolute_norm) return x.absolute_norm < y.absolute_norm;
  return lex_less(x.generator, y.generator);
}

bool norm_then_lex(const RingElt& x, const RingElt& y) {
  Integer nx = abs_norm(x), ny = abs_norm(y);
  if (nx != ny) return nx < ny;
  return lex_less(x, y);
}

Integer mod_pos(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Tonelli-Shanks; p an odd prime and a a quadratic residue mod p.
Integer sqrt_mod(const Integer& a_in, const Integer& p) {
  Integer a = mod_pos(a_in, p);
  if (a == 0) return 0;
  Integer q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  Integer half = (p - 1) / 2;
  Integer t;
  for (;; ++z) {
    mpz_powm(t.get_mpz_t(), z.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) break;
  }
  Integer c, r, tt;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  Integer e = (q + 1) / 2;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(tt.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (tt != 1) {
    unsigned long i = 0;
    Integer t2 = tt;
    while (t2 != 1) {
      t2 = mod_pos(t2 * t2, p);
      ++i;
    }
    Integer b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod_pos(b * b, p);
    m = i;
    c = mod_pos(b * b, p);
    tt = mod_pos(tt * c, p);
    r = mod_pos(r * b, p);
  }
  return r;
}

std::vector<Integer> rational_prime_divisors(Integer n, std::uint64_t cap) {
  std::vector<Integer> primes;
  for (Integer d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (d > cap) {
      throw Error(ErrorCode::FactorCapExceeded,
                  "trial division cap exceeded while factoring the norm");
    }
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      primes.push_back(d);
      while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) n /= d;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

RingElt power(const RingElt& x, int k) {
  RingElt r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

void require_nonzero(const RingElt& tau) {
  if (tau.is_zero()) throw Error(ErrorCode::ZeroInput, "modulus must be nonzero");
}

}  // namespace

Ideal::Ideal(const RingElt& generator)
    : generator_(canonical_associate(generator)) {}

std::string_view splitting_name(Splitting s) {
  switch (s) {
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

RingElt Factorization::recompose() const {
  RingElt r = unit_value(unit);
  for (const auto& [prime, mult] : factors) r *= power(prime.generator, mult);
  return r;
}

std::vector<PrimeFactor> primes_above(const Integer& p) {
  std::vector<PrimeFactor> out;
  Integer r5 = mod_pos(p, 5);
  if (p == 5) {
    out.push_back({canonical_associate(RingElt(-1, 2)), p, Splitting::Ramified, p});
  } else if (r5 == 2 || r5 == 3) {
    out.push_back({canonical_associate(RingElt(p)), p, Splitting::Inert, p * p});
  } else {
    // root of x^2 - x - 1: (1 + sqrt 5) / 2 mod p
    Integer root5 = sqrt_mod(5, p);
    Integer inv2 = (p + 1) / 2;
    Integer root = mod_pos((1 + root5) * inv2, p);
    RingElt pi = gcd(RingElt(p), RingElt(-root, 1));
    RingElt pi_bar = canonical_associate(conj(pi));
    out.push_back({pi, p, Splitting::Split, p});
    out.push_back({pi_bar, p, Splitting::Split, p});
    std::sort(out.begin(), out.end(), factor_order);
  }
  return out;
}

Factorization factor(const RingElt& tau, std::uint64_t trial_cap) {
  require_nonzero(tau);
  Factorization f;
  RingElt rest = tau;
  for (const Integer& p : rational_prime_divisors(abs_norm(tau), trial_cap)) {
    for (const PrimeFactor& prime : primes_above(p)) {
      int mult = 0;
      while (auto q = exact_divide(rest, prime.generator)) {
        rest = std::move(*q);
        ++mult;
      }
      if (mult > 0) f.factors.emplace_back(prime, mult);
    }
  }
  if (!is_unit(rest)) {
    throw Error(ErrorCode::IntegrityError, "factorization residual is not a unit");
  }
  f.unit = unit_decompose(rest);
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& x, const auto& y) { return factor_order(x.first, y.first); });
  return f;
}

Ideal half_power_part(const RingElt& tau) {
  RingElt r(1);
  for (const auto& [prime, m] : factor(tau).factors) {
    r *= power(prime.generator, m - m / 2);
  }
  return Ideal(r);
}

int h_of(const RingElt& tau) {
  require_nonzero(tau);
  if (divides(RingElt(16), tau)) return 4;
  if (divides(RingElt(4), tau)) return 2;
  return 1;
}

Integer index_in_G5(const RingElt& tau) {
  Integer index = 1;
  for (const auto& [prime, m] : factor(tau).factors) {
    Integer np = prime.absolute_norm;
    Integer pw;
    mpz_pow_ui(pw.get_mpz_t(), np.get_mpz_t(), static_cast<unsigned long>(m - 1));
    index *= pw * (np + 1);
  }
  return index;
}

Integer relative_index(const RingElt& fine, const RingElt& coarse) {
  if (!divides(coarse, fine)) {
    throw Error(ErrorCode::BadRange, "coarse modulus must divide the fine one");
  }
  Integer big = index_in_G5(fine);
  Integer small = index_in_G5(coarse);
  if (!mpz_divisible_p(big.get_mpz_t(), small.get_mpz_t())) {
    throw Error(ErrorCode::IntegrityError, "relative index is not an integer");
  }
  return big / small;
}

Integer smallest_rational_integer(const RingElt& tau) {
  return ResidueCtx(tau).n();
}

std::vector<RingElt> divisors(const RingElt& tau) {
  std::vector<RingElt> out{RingElt(1)};
  for (const auto& [prime, m] : factor(tau).factors) {
    std::vector<RingElt> next;
    for (const RingElt& d : out) {
      RingElt pw(1);
      for (int k = 0; k <= m; ++k) {
        next.push_back(d * pw);
        pw *= prime.generator;
      }
    }
    out = std::move(next);
  }
  for (RingElt& d : out) d = canonical_associate(d);
  std::sort(out.begin(), out.end(), norm_then_lex);
  return out;
}

std::vector<RingElt> ideals_up_to_norm(const Integer& bound) {
  std::vector<PrimeFactor> primes;
  for (Integer p = 2; p <= bound; ++p) {
    if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) continue;
    for (PrimeFactor& pf : primes_above(p)) {
      if (pf.absolute_norm <= bound) primes.push_back(std::move(pf));
    }
  }
  std::vector<RingElt> out;
  // depth-first over nondecreasing prime indices
  struct Frame {
    RingElt value;
    Integer norm;
    std::size_t next;
  };
  std::vector<Frame> stack{{RingElt(1), 1, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    out.push_back(canonical_associate(f.value));
    for (std::size_t i = f.next; i < primes.size(); ++i) {
      Integer nn = f.norm * primes[i].absolute_norm;
      if (nn > bound) continue;
      stack.push_back({f.value * primes[i].generator, nn, i});
    }
  }
  std::sort(out.begin(), out.end(), norm_then_lex);
  return out;
}

ResidueCtx::ResidueCtx(const RingElt& tau)
    : modulus_((require_nonzero(tau), tau)) {
  const RingElt& t = modulus_.generator();
  // lattice columns u = t = (a, b), w = t L = (b, a + b)
  Integer u1 = t.a(), u2 = t.b();
  Integer w1 = t.b(), w2 = t.a() + t.b();
  Integer alpha, beta;
  mpz_gcdext(g_.get_mpz_t(), alpha.get_mpz_t(), beta.get_mpz_t(), u2.get_mpz_t(),
             w2.get_mpz_t());
  n_ = abs_norm(t) / g_;
  s_ = mod_pos(alpha * u1 + beta * w1, n_);
}

RingElt ResidueCtx::reduce(const RingElt& x) const {
  Integer k;
  mpz_fdiv_q(k.get_mpz_t(), x.b().get_mpz_t(), g_.get_mpz_t());
  Integer a = x.a() - k * s_;
  Integer b = x.b() - k * g_;
  return RingElt(mod_pos(a, n_), std::move(b));
}

bool ResidueCtx::congruent(const RingElt& x, const RingElt& y) const {
  return reduce(x) == reduce(y);
}

RingElt residue_reduce(const RingElt& x, const ResidueCtx& ctx) {
  return ctx.reduce(x);
}

}  // namespace hecke
