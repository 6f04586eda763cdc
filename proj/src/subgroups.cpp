#include "hecke/subgroups.hpp"

#include <random>

namespace hecke {

bool g0_contains(const GMatrix& M, const RingElt& tau) {
  return in_G5(M) && divides(tau, M.c());
}

bool principal_contains(const GMatrix& M, const RingElt& tau) {
  if (tau.is_zero() || is_unit(tau)) {
    throw Error(ErrorCode::UnitModulus, "principal congruence subgroup needs a non-unit modulus");
  }
  if (!in_G5(M)) return false;
  ResidueCtx ctx(tau);
  auto zero = [&](const RingElt& x) { return ctx.reduce(x).is_zero(); };
  if (!zero(M.b()) || !zero(M.c())) return false;
  return (zero(M.a() - 1) && zero(M.d() - 1)) || (zero(M.a() + 1) && zero(M.d() + 1));
}

std::array<GMatrix, 3> g0_2_generators() {
  const RingElt L = RingElt::lambda();
  return {GMatrix::T(),
          GMatrix::from_entries(2 * L + 1, -L - 2, 2 * L + 2, -2 * L - 1),
          GMatrix::from_entries(2 * L + 1, -L, 2 * L, -1)};
}

OmegaElement omega_element(long x, long y, const RingElt& nu) {
  Integer n = smallest_rational_integer(nu);
  return {x, y, GMatrix::T(x) * GMatrix::lower(RingElt(Integer(y) * n))};
}

namespace {

Integer pow3(int m) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(m));
  return r;
}

void check_omega(const OmegaElement& e, const Integer& q) {
  if (e.x < 0 || e.y < 0 || e.x >= q || e.y >= q || e.y % 3 == 0) {
    throw Error(ErrorCode::BadRange, "Omega element outside 0 <= x, y < 3^m with 3 not dividing y");
  }
}

}  // namespace

bool omega_coset_equal_direct(const OmegaElement& e1, const OmegaElement& e2, int m,
                              const RingElt& nu) {
  RingElt modulus = RingElt(pow3(m)) * nu;
  return g0_contains(e2.matrix.inverse() * e1.matrix, modulus);
}

bool omega_coset_equal(const OmegaElement& e1, const OmegaElement& e2, int m,
                       const RingElt& nu) {
  if (m < 1) throw Error(ErrorCode::BadRange, "m must be at least 1");
  if (divides(RingElt(3), nu)) {
    throw Error(ErrorCode::BadRange, "nu must be coprime to 3");
  }
  const Integer q = pow3(m);
  check_omega(e1, q);
  check_omega(e2, q);
  Integer dy = Integer(e1.y) - e2.y;
  Integer y2dx = Integer(e1.y) * e1.y * (Integer(e1.x) - e2.x);
  bool criterion = mpz_divisible_p(dy.get_mpz_t(), q.get_mpz_t()) &&
                   mpz_divisible_p(y2dx.get_mpz_t(), q.get_mpz_t());
  if (criterion != omega_coset_equal_direct(e1, e2, m, nu)) {
    throw Error(ErrorCode::IntegrityError,
                "Omega congruence criterion disagrees with direct membership");
  }
  return criterion;
}

std::vector<GMatrix> schreier_generators(const CosetTable& table) {
  const RingElt& tau = table.modulus().generator();
  std::vector<GMatrix> reps, inverses;
  reps.reserve(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    reps.push_back(table.rep_matrix(i));
    inverses.push_back(reps.back().inverse());
  }
  std::vector<GMatrix> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (int s = 0; s < 2; ++s) {
      std::uint32_t j = s == 0 ? table.action_S()[i] : table.action_T()[i];
      GMatrix g = reps[i] * (s == 0 ? GMatrix::S() : GMatrix::T()) * inverses[j];
      if (g == GMatrix()) continue;
      if (!g0_contains(g, tau)) {
        throw Error(ErrorCode::IntegrityError, "Schreier generator outside G0");
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<GMatrix> sample_subgroup(const RingElt& tau, std::size_t count,
                                     std::uint64_t seed) {
  const Integer n = smallest_rational_integer(tau);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> length(1, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> mult(1, 3);
  std::vector<GMatrix> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GMatrix m;
    for (int len = length(rng); len > 0; --len) {
      long k = mult(rng);
      if (coin(rng)) k = -k;
      const bool translation = coin(rng) != 0;
      m *= translation ? GMatrix::T(k) : GMatrix::lower(RingElt(Integer(k) * n));
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace hecke
