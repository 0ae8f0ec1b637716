#pragma once

#include "squarepairs/parametrization.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace squarepairs {

// Canonical representative of an integer triple under scaling and global
// negation: gcd 1, first nonzero coordinate positive. Absent only for
// (0, 0, 0).
std::optional<ParamTriple> normalize_triple(const Integer& p, const Integer& q,
                                            const Integer& r);

struct SearchReport {
  std::int64_t bound = 0;
  int workers = 1;
  // Canonical triples visited (|p| + |q| + |r| <= bound).
  std::uint64_t triples_scanned = 0;
  // Deduplicated by canonical pair; each entry keeps the first discovering
  // triple in enumeration order, and the list is sorted by pair perimeter,
  // then by roots.
  std::vector<ParamSolution> solutions;
  // Triples with A == 0 and B == 0 (residual vanishes identically), in
  // enumeration order. Not solutions; surfaced for inspection.
  std::vector<ParamTriple> special_flags;
  // Wall-clock time; informational only and excluded from structured
  // serialization so identical searches serialize identically.
  std::chrono::milliseconds elapsed{0};
};

// Exhaustive scan of canonical integer triples with |p| + |q| + |r| <= bound.
// Workers partition the p-range; results are independent of the worker count.
// Candidate filtering uses overflow-checked machine arithmetic; every
// candidate is confirmed by the exact pipeline before being reported.
// workers <= 0 selects the environment/hardware default. bound must be in
// [1, 1000000] (the machine-width fast path is proven exact below 10^6).
SearchReport search(std::int64_t bound, int workers = 0);

// Default worker count: the SQUAREPAIRS_WORKERS environment variable when set
// to a positive integer, otherwise the hardware concurrency.
int default_workers();

}  // namespace squarepairs
