#include <atomic>
#include <cmath>
#include <limits>

#include "hecke/kernels.hpp"

namespace hecke::kernel {

namespace {

using i128 = __int128;

// states up to 2^56 keep every predicate operand below 2^60
constexpr std::int64_t kStateLimit = std::int64_t{1} << 56;
constexpr i128 kPredicateLimit = i128{1} << 60;
constexpr double kPhi = 1.6180339887498948482;

struct Wide {
  i128 a, b;
};

i128 abs128(i128 v) { return v < 0 ? -v : v; }

bool in_range(const Wide& z, i128 limit) {
  return abs128(z.a) <= limit && abs128(z.b) <= limit;
}

// Exact sign of a + b phi; |a|, |b| <= 2^60.
int sign_real(const Wide& z) {
  i128 s = 2 * z.a + z.b;
  if (s >= 0 && z.b >= 0) return (s == 0 && z.b == 0) ? 0 : 1;
  if (s <= 0 && z.b <= 0) return -1;
  i128 lhs = s * s;
  i128 rhs = 5 * z.b * z.b;
  if (s > 0) return lhs > rhs ? 1 : -1;
  return lhs > rhs ? -1 : 1;
}

// Real value, computed through norm / conjugate when a + b phi cancels.
double real_value(const Wide& z) {
  auto a = static_cast<double>(z.a);
  auto b = static_cast<double>(z.b);
  double v = a + b * kPhi;
  double c = a + b * (1.0 - kPhi);
  if (std::fabs(v) >= std::fabs(c)) return v;
  i128 n = z.a * z.a + z.a * z.b - z.b * z.b;
  return static_cast<double>(n) / c;
}

struct Step {
  bool ok;
  Wide r;
};

// Mirrors pseudo_divide with the upper-closed window.
Step pseudo_divide(const Wide& x, const Wide& y) {
  const Wide beta{y.b, y.a + y.b};
  const int s_beta = sign_real(beta);
  const Wide abs_beta = s_beta > 0 ? beta : Wide{-beta.a, -beta.b};
  double t = real_value(x) / real_value(beta);
  if (!(std::fabs(t) < static_cast<double>(kStateLimit))) return {false, {}};
  auto q = static_cast<i128>(std::floor(t));
  for (int tries = 0; tries < 8; ++tries) {
    Wide r{x.a - q * beta.a, x.b - q * beta.b};
    Wide hi{abs_beta.a - 2 * r.a, abs_beta.b - 2 * r.b};
    Wide lo{2 * r.a + abs_beta.a, 2 * r.b + abs_beta.b};
    if (!in_range(hi, kPredicateLimit) || !in_range(lo, kPredicateLimit)) return {false, {}};
    bool hi_ok = sign_real(hi) >= 0;
    bool lo_ok = sign_real(lo) > 0;
    if (hi_ok && lo_ok) return {true, r};
    bool grow = !hi_ok;
    q += ((s_beta > 0) == grow) ? 1 : -1;
  }
  return {false, {}};
}

// Exponent k with g = +-L^k, for a unit g of moderate size.
std::optional<long> unit_exponent(Wide g) {
  if (sign_real(g) < 0) g = {-g.a, -g.b};
  long k = 0;
  for (int guard = 0; guard < 256; ++guard) {
    if (g.a == 1 && g.b == 0) return k;
    Wide gm1{g.a - 1, g.b};
    if (sign_real(gm1) > 0) {
      g = {g.b - g.a, g.a};  // divide by L
      ++k;
    } else {
      g = {g.b, g.a + g.b};  // multiply by L
      --k;
    }
    if (!in_range(g, kPredicateLimit)) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SmallReduction> small_reduced_factor(SmallElt x0, SmallElt y0) {
  Wide x{x0.a, x0.b};
  Wide y{y0.a, y0.b};
  if (y.a == 0 && y.b == 0) return std::nullopt;
  for (int steps = 0; steps < 4096; ++steps) {
    if (!in_range(x, kStateLimit) || !in_range(y, kStateLimit)) return std::nullopt;
    Step st = pseudo_divide(x, y);
    if (!st.ok) return std::nullopt;
    if (st.r.a == 0 && st.r.b == 0) {
      i128 n = y.a * y.a + y.a * y.b - y.b * y.b;
      if (n != 1 && n != -1) return SmallReduction{false, 0};
      auto k = unit_exponent(y);
      if (!k) return std::nullopt;
      return SmallReduction{true, -*k};
    }
    x = y;
    y = st.r;
  }
  return std::nullopt;
}

namespace {

struct Candidate {
  SmallElt small;
  RingElt exact;
};

// (a, b) with a < 0, or a = 0 and b < 0, in lexicographic order. Both
// properties searched for are invariant under x -> -x and y -> -y, so the
// least full-box pair always lies in these halves.
std::vector<Candidate> negative_half(long bound) {
  std::vector<Candidate> out;
  for (long a = -bound; a <= 0; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      if (a == 0 && b >= 0) break;
      out.push_back({{a, b}, RingElt(Integer(a), Integer(b))});
    }
  }
  return out;
}

bool fits_small(const RingElt& x) {
  auto ok = [](const Integer& v) {
    return v.fits_slong_p() && std::abs(v.get_si()) <= kStateLimit;
  };
  return ok(x.a()) && ok(x.b());
}

bool reduced_exact(const RingElt& x, const RingElt& d) {
  try {
    return reduced_factor(x, d).e == 0;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotCoprime) return false;
    throw;
  }
}

// Index of the first x with x / d reduced, or -1.
long first_hit(const std::vector<Candidate>& xs, const RingElt& d) {
  if (fits_small(d)) {
    SmallElt ds{d.a().get_si(), d.b().get_si()};
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto fast = small_reduced_factor(xs[i].small, ds);
      bool hit = fast ? (fast->coprime && fast->e == 0) : reduced_exact(xs[i].exact, d);
      if (hit) return static_cast<long>(i);
    }
    return -1;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (reduced_exact(xs[i].exact, d)) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace

std::optional<std::pair<RingElt, RingElt>> elementary_box_search(const RingElt& r,
                                                                 long bound,
                                                                 Schedule schedule) {
  if (bound < 1) throw Error(ErrorCode::BadRange, "search bound must be positive");
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "r must be nonzero");
  if (is_unit(r)) return std::nullopt;

  ResidueCtx ctx(r);
  std::vector<Candidate> ys = negative_half(bound);
  std::vector<Candidate> xs;
  for (Candidate& c : negative_half(bound)) {
    if (!is_unit(gcd(c.exact, r))) continue;
    if (ctx.reduce(c.exact * c.exact - 1).is_zero()) continue;
    xs.push_back(std::move(c));
  }
  if (xs.empty()) return std::nullopt;

  const auto ny = static_cast<long>(ys.size());
  long found_y = -1, found_x = -1;
  if (schedule == Schedule::Serial) {
    for (long j = 0; j < ny && found_y < 0; ++j) {
      long i = first_hit(xs, r * ys[static_cast<std::size_t>(j)].exact);
      if (i >= 0) {
        found_y = j;
        found_x = i;
      }
    }
  } else {
    std::vector<long> hits(static_cast<std::size_t>(ny), -1);
    std::atomic<long> best{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic, 1)
    for (long j = 0; j < ny; ++j) {
      if (j > best.load(std::memory_order_relaxed)) continue;
      long i = first_hit(xs, r * ys[static_cast<std::size_t>(j)].exact);
      if (i < 0) continue;
      hits[static_cast<std::size_t>(j)] = i;
      long cur = best.load();
      while (j < cur && !best.compare_exchange_weak(cur, j)) {
      }
    }
    for (long j = 0; j < ny; ++j) {
      if (hits[static_cast<std::size_t>(j)] >= 0) {
        found_y = j;
        found_x = hits[static_cast<std::size_t>(j)];
        break;
      }
    }
  }
  if (found_y < 0) return std::nullopt;
  return std::make_pair(xs[static_cast<std::size_t>(found_x)].exact,
                        ys[static_cast<std::size_t>(found_y)].exact);
}

}  // namespace hecke::kernel
