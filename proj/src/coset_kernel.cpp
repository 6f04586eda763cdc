#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "hecke/subgroups.hpp"
#include "small_residue.hpp"

namespace hecke {

namespace detail {

SmallResidue::SmallResidue(const ResidueCtx& ctx, std::int64_t max_size) {
  if (ctx.size() > max_size) {
    throw Error(ErrorCode::BoundExceeded, "residue ring too large to enumerate");
  }
  n_ = ctx.n().get_si();
  s_ = ctx.s().get_si();
  g_ = ctx.g().get_si();

  struct PrimeLattice {
    std::int64_t n, s, g;
  };
  std::vector<PrimeLattice> primes;
  for (const auto& [p, m] : factor(ctx.modulus().generator()).factors) {
    ResidueCtx pc(p.generator);
    primes.push_back({pc.n().get_si(), pc.s().get_si(), pc.g().get_si()});
  }
  const std::int64_t total = size();
  unit_flag_.assign(static_cast<std::size_t>(total), true);
  for (std::int64_t i = 0; i < total; ++i) {
    std::int64_t a = i % n_, b = i / n_;
    for (const PrimeLattice& p : primes) {
      // a + bL lies in P iff it reduces to zero in P's lattice
      if (b % p.g != 0) continue;
      std::int64_t k = b / p.g;
      if ((a - k * p.s) % p.n == 0) {
        unit_flag_[static_cast<std::size_t>(i)] = false;
        break;
      }
    }
    if (unit_flag_[static_cast<std::size_t>(i)]) units_.push_back(i);
  }
}

std::int64_t SmallResidue::from(const RingElt& x) const {
  Integer k;
  Integer g(g_), n(n_), s(s_);
  mpz_fdiv_q(k.get_mpz_t(), x.b().get_mpz_t(), g.get_mpz_t());
  Integer a = x.a() - k * s;
  Integer b = x.b() - k * g;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  return b.get_si() * n_ + r.get_si();
}

struct CosetLookup {
  SmallResidue ring;
  std::int64_t N;
  std::unordered_map<std::int64_t, std::uint32_t> index;

  CosetLookup(const ResidueCtx& ctx, std::int64_t bound)
      : ring(ctx, bound), N(ring.size()) {}

  std::int64_t canonical(std::int64_t c, std::int64_t d) const {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (std::int64_t u : ring.units()) {
      std::int64_t code = ring.mul(u, c) * N + ring.mul(u, d);
      best = std::min(best, code);
    }
    return best;
  }

  // right multiplication of the bottom row by S, T or T^-1
  std::int64_t step(std::int64_t code, int letter) const {
    std::int64_t c = code / N, d = code % N;
    switch (letter) {
      case 0: return canonical(d, ring.neg(c));
      case 1: return canonical(c, ring.add(ring.times_lambda(c), d));
      default: return canonical(c, ring.add(ring.neg(ring.times_lambda(c)), d));
    }
  }
};

}  // namespace detail

namespace {

constexpr int kLetters = 3;  // S, T, T^-1

struct Discovery {
  std::vector<std::int64_t> order;
  std::vector<std::uint32_t> parent;
  std::vector<int> letter;
};

void check_growth(std::size_t found, std::size_t expected) {
  if (found > expected) {
    throw Error(ErrorCode::IntegrityError, "coset orbit exceeds the index formula");
  }
}

Discovery bfs_serial(const detail::CosetLookup& lk, std::int64_t start,
                     std::size_t expected) {
  Discovery out;
  std::unordered_map<std::int64_t, std::uint32_t> seen;
  out.order.push_back(start);
  out.parent.push_back(0);
  out.letter.push_back(-1);
  seen.emplace(start, 0);
  for (std::size_t head = 0; head < out.order.size(); ++head) {
    for (int l = 0; l < kLetters; ++l) {
      std::int64_t nb = lk.step(out.order[head], l);
      if (seen.emplace(nb, static_cast<std::uint32_t>(out.order.size())).second) {
        out.order.push_back(nb);
        out.parent.push_back(static_cast<std::uint32_t>(head));
        out.letter.push_back(l);
        check_growth(out.order.size(), expected);
      }
    }
  }
  return out;
}

// Level-synchronous: neighbours of a whole frontier are canonicalized in
// parallel, then merged in (frontier, letter) order, which reproduces the
// serial discovery order exactly.
Discovery bfs_parallel(const detail::CosetLookup& lk, std::int64_t start,
                       std::size_t expected) {
  Discovery out;
  std::unordered_map<std::int64_t, std::uint32_t> seen;
  out.order.push_back(start);
  out.parent.push_back(0);
  out.letter.push_back(-1);
  seen.emplace(start, 0);
  std::size_t begin = 0;
  std::vector<std::int64_t> nbs;
  while (begin < out.order.size()) {
    const std::size_t end = out.order.size();
    const auto width = static_cast<std::int64_t>((end - begin) * kLetters);
    nbs.assign(static_cast<std::size_t>(width), 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < width; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      nbs[idx] = lk.step(out.order[begin + idx / kLetters], static_cast<int>(k % kLetters));
    }
    for (std::size_t k = 0; k < nbs.size(); ++k) {
      if (seen.emplace(nbs[k], static_cast<std::uint32_t>(out.order.size())).second) {
        out.order.push_back(nbs[k]);
        out.parent.push_back(static_cast<std::uint32_t>(begin + k / kLetters));
        out.letter.push_back(static_cast<int>(k % kLetters));
        check_growth(out.order.size(), expected);
      }
    }
    begin = end;
  }
  return out;
}

}  // namespace

CosetTable coset_table(const RingElt& tau, std::size_t bound, Schedule schedule) {
  const Integer predicted = index_in_G5(tau);
  if (predicted > bound) {
    throw Error(ErrorCode::BoundExceeded, "coset table larger than the configured bound");
  }
  const auto expected = static_cast<std::size_t>(predicted.get_ui());

  ResidueCtx ctx(tau);
  CosetTable table{Ideal(tau)};
  auto lookup = std::make_shared<detail::CosetLookup>(ctx, static_cast<std::int64_t>(bound));
  const detail::CosetLookup& lk = *lookup;

  const std::int64_t start = lk.canonical(0, lk.ring.one());
  Discovery found = schedule == Schedule::Serial ? bfs_serial(lk, start, expected)
                                                 : bfs_parallel(lk, start, expected);
  if (found.order.size() != expected) {
    throw Error(ErrorCode::IntegrityError, "coset orbit size disagrees with the index formula");
  }

  std::vector<Word> words(found.order.size());
  for (std::size_t i = 1; i < found.order.size(); ++i) {
    words[i] = words[found.parent[i]];
    switch (found.letter[i]) {
      case 0: words[i].push_S(); break;
      case 1: words[i].push_T(1); break;
      default: words[i].push_T(-1); break;
    }
  }

  std::vector<std::size_t> perm(found.order.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t x, std::size_t y) { return found.order[x] < found.order[y]; });

  const std::size_t n = perm.size();
  auto& index = lookup->index;
  table.points_.reserve(n);
  table.reps_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t code = found.order[perm[i]];
    index.emplace(code, static_cast<std::uint32_t>(i));
    table.points_.emplace_back(lk.ring.to_elt(code / lk.N), lk.ring.to_elt(code % lk.N));
    table.reps_.push_back(std::move(words[perm[i]]));
  }

  table.action_S_.resize(n);
  table.action_T_.resize(n);
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (schedule == Schedule::Parallel)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    std::int64_t code = found.order[perm[ui]];
    table.action_S_[ui] = index.at(lk.step(code, 0));
    table.action_T_[ui] = index.at(lk.step(code, 1));
  }
  table.lookup_ = std::move(lookup);
  return table;
}

std::size_t CosetTable::locate(const GMatrix& g) const {
  const detail::SmallResidue& ring = lookup_->ring;
  std::int64_t code = lookup_->canonical(ring.from(g.c()), ring.from(g.d()));
  auto it = lookup_->index.find(code);
  if (it == lookup_->index.end()) {
    throw Error(ErrorCode::IntegrityError, "bottom row is not a point of the coset table");
  }
  return it->second;
}

}  // namespace hecke
