#pragma once

// Deliberately naive reference implementations. Nothing here reuses the
// factorization, divisor or Euclid machinery of the fast paths; each routine
// is a direct search over the defining equations.
//
// Costs (per call):
//   brute_configurations(D)  O(D * d(D)): every a in [2, D), then every x
//                            in [1, a) for the exterior pairs found.
//   brute_triple_sums(L)     O(L^2): every leg pair x <= y < L.
//   brute_square_sweep(S)    O(n) per side, O(S^2) in total.

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "donut/core.hpp"

namespace donut::oracle {

struct SweepLimits {
    u64 max_area = 1;
    u64 max_side = 1;
};

/// Every (a, b, x, y) with ab = D satisfying the definition, in no
/// particular order.
std::vector<Quad> brute_configurations(u64 D);

struct TripleSums {
    std::set<u64> all;        // x + y + z <= limit over every triple
    std::set<u64> primitive;  // restricted to gcd(x, y) = 1
};

TripleSums brute_triple_sums(u64 limit);

struct SquareSearch {
    std::vector<Quad> square;        // (n, n, a, b)
    std::vector<Quad> square_holed;  // (a, b, n, n)
};

/// side n -> every square donut and square-holed donut with that side.
/// Uses limits.max_side only.
std::map<u64, SquareSearch> brute_square_sweep(const SweepLimits& limits);

/// Same search for a single side.
SquareSearch brute_square_search(u64 n);

}  // namespace donut::oracle
