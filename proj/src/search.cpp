#include "squarepairs/search.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <thread>

namespace squarepairs {

std::optional<ParamTriple> normalize_triple(const Integer& p, const Integer& q,
                                            const Integer& r) {
  if (sgn(p) == 0 && sgn(q) == 0 && sgn(r) == 0) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.get_mpz_t());
  Integer np = p / g, nq = q / g, nr = r / g;
  const int lead = sgn(np) != 0 ? sgn(np) : (sgn(nq) != 0 ? sgn(nq) : sgn(nr));
  if (lead < 0) {
    np = -np;
    nq = -nq;
    nr = -nr;
  }
  return ParamTriple{Rational(np), Rational(nq), Rational(nr)};
}

int default_workers() {
  if (const char* env = std::getenv("SQUAREPAIRS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Quadratic-residue tables for cheap non-square rejection. A perfect square
// must be a square residue mod 64 and mod each factor of 45045 = 63*65*11;
// the tables only ever produce false for true non-squares, so the exact
// check below never sees a false negative.
constexpr u64 kSquareMask64 = [] {
  u64 m = 0;
  for (int i = 0; i < 64; ++i) m |= u64{1} << ((i * i) & 63);
  return m;
}();

template <int M>
constexpr std::array<bool, M> square_table() {
  std::array<bool, M> t{};
  for (int i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}
constexpr auto kSquares63 = square_table<63>();
constexpr auto kSquares65 = square_table<65>();
constexpr auto kSquares11 = square_table<11>();

int clz_u128(u128 n) {
  const u64 hi = static_cast<u64>(n >> 64);
  if (hi != 0) return __builtin_clzll(hi);
  return 64 + __builtin_clzll(static_cast<u64>(n));
}

// Floor square root by Newton iteration from an upper-bound seed.
u128 isqrt_u128(u128 n) {
  if (n < 4) return n == 0 ? 0 : 1;
  const int bits = 128 - clz_u128(n);
  u128 x = u128{1} << ((bits + 1) / 2);
  for (;;) {
    const u128 y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = y;
  }
}

bool is_perfect_square_u128(u128 n) {
  if (((kSquareMask64 >> static_cast<unsigned>(n & 63)) & 1) == 0) return false;
  const u64 rem = static_cast<u64>(n % 45045);
  if (!kSquares63[rem % 63] || !kSquares65[rem % 65] || !kSquares11[rem % 11]) {
    return false;
  }
  const u128 s = isqrt_u128(n);
  return s * s == n;
}

// The residual coefficients in machine integers. Under |p|+|q|+|r| <= N the
// coefficient mass gives |A| <= N^3 and |B| <= 2 N^3, so both fit in int64
// and their product fits in int128 for every N <= 10^6.
i64 eval_a(i64 p, i64 q, i64 r) {
  return p * p * p + p * p * q - p * p * r + p * q * q - 2 * p * q * r +
         p * r * r + q * q * q - q * q * r + q * r * r - r * r * r;
}

i64 eval_b(i64 p, i64 q, i64 r) {
  return 2 * (p * p * q - p * p * r + p * q * q + p * r * r - q * q * r + q * r * r) +
         12 * (p * q * r);
}

struct WorkerOutput {
  u64 scanned = 0;
  std::vector<std::array<i64, 3>> candidates;
  std::vector<std::array<i64, 3>> flags;  // A == 0 and B == 0
};

// Scans canonical triples with p congruent to `worker` modulo `stride`.
// Canonical means gcd(|p|,|q|,|r|) == 1 with the first nonzero coordinate
// positive; p >= 0 always holds here since negative p cannot lead.
void scan_slice(i64 bound, i64 first_p, i64 stride, WorkerOutput& out) {
  for (i64 p = first_p; p <= bound; p += stride) {
    const i64 q_max = bound - p;
    for (i64 q = -q_max; q <= q_max; ++q) {
      if (p == 0 && q < 0) continue;
      const i64 gpq = std::gcd(p, q);
      const i64 r_max = q_max - (q < 0 ? -q : q);
      for (i64 r = -r_max; r <= r_max; ++r) {
        if (p == 0 && q == 0 && r <= 0) continue;
        if (gpq != 1 && std::gcd(gpq, r) != 1) continue;
        ++out.scanned;
        const i64 a = eval_a(p, q, r);
        const i64 b = eval_b(p, q, r);
        if (a == 0) {
          if (b == 0) out.flags.push_back({p, q, r});
          continue;  // residual has no invertible leading coefficient
        }
        // A vanishing linear factor of the residual difference forces a
        // trivial configuration for every u; skip without solving.
        if (q + r == 0 || p + r == 0 || p == q || p + q - r == 0) continue;
        const i128 prod = -static_cast<i128>(a) * static_cast<i128>(b);
        if (prod < 0) continue;
        if (!is_perfect_square_u128(static_cast<u128>(prod))) continue;
        out.candidates.push_back({p, q, r});
      }
    }
  }
}

bool lex_less3(const std::array<i64, 3>& a, const std::array<i64, 3>& b) {
  return a < b;
}

}  // namespace

SearchReport search(std::int64_t bound, int workers) {
  if (bound < 1 || bound > 1'000'000) {
    throw std::invalid_argument("search: bound must be in [1, 1000000]");
  }
  const auto start = std::chrono::steady_clock::now();
  int w = workers > 0 ? workers : default_workers();
  if (w > bound + 1) w = static_cast<int>(bound + 1);

  std::vector<WorkerOutput> outputs(static_cast<size_t>(w));
  if (w == 1) {
    scan_slice(bound, 0, 1, outputs[0]);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) {
      pool.emplace_back(scan_slice, bound, static_cast<i64>(i),
                        static_cast<i64>(w), std::ref(outputs[static_cast<size_t>(i)]));
    }
    for (std::thread& t : pool) t.join();
  }

  SearchReport rep;
  rep.bound = bound;
  rep.workers = w;
  std::vector<std::array<i64, 3>> candidates;
  std::vector<std::array<i64, 3>> flags;
  for (const WorkerOutput& out : outputs) {
    rep.triples_scanned += out.scanned;
    candidates.insert(candidates.end(), out.candidates.begin(), out.candidates.end());
    flags.insert(flags.end(), out.flags.begin(), out.flags.end());
  }
  // Enumeration order is ascending (p, q, r); restoring it here makes the
  // result independent of how the slices were interleaved.
  std::sort(candidates.begin(), candidates.end(), lex_less3);
  std::sort(flags.begin(), flags.end(), lex_less3);
  for (const auto& f : flags) {
    rep.special_flags.push_back(
        ParamTriple{Rational(Integer(static_cast<long>(f[0]))),
                    Rational(Integer(static_cast<long>(f[1]))),
                    Rational(Integer(static_cast<long>(f[2])))});
  }

  // Exact confirmation: machine-width filtering only nominated candidates;
  // acceptance is decided by the arbitrary-precision pipeline.
  std::map<TrianglePair, size_t> seen;
  for (const auto& cand : candidates) {
    PipelineResult res = pair_from_pqr(Rational(Integer(static_cast<long>(cand[0]))),
                                       Rational(Integer(static_cast<long>(cand[1]))),
                                       Rational(Integer(static_cast<long>(cand[2]))));
    ParamSolution* sol = std::get_if<ParamSolution>(&res);
    if (sol == nullptr) continue;
    if (seen.emplace(sol->pair, rep.solutions.size()).second) {
      rep.solutions.push_back(std::move(*sol));
    }
  }
  std::sort(rep.solutions.begin(), rep.solutions.end(),
            [](const ParamSolution& a, const ParamSolution& b) {
              const int c = cmp(a.pair.perimeter, b.pair.perimeter);
              if (c != 0) return c < 0;
              return a.pair < b.pair;
            });

  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace squarepairs
