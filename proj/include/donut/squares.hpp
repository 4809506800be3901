#pragma once

// Square-holed donuts (a, b, n, n) and square donuts (n, n, a, b).
//
// (a, b, n, n) exists iff n has coprime divisors p < q < 2p; then
// a = 2pn/q, b = qn/p. (n, n, a, b) exists iff n is the sum of a
// Pythagorean triple; n = 2kp(p+q) gives a = 2kp^2, b = k(p+q)^2.

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "donut/core.hpp"
#include "donut/pythagoras.hpp"
#include "donut/sweep.hpp"

namespace donut {

struct CoprimeDivisorPair {
    u64 p = 0;
    u64 q = 0;

    friend auto operator<=>(const CoprimeDivisorPair&, const CoprimeDivisorPair&) = default;
};

/// p | n, q | n, gcd(p, q) = 1 and p < q < 2p.
bool is_witness(u64 n, const CoprimeDivisorPair& w);

/// Lexicographically smallest witness for n, if any.
std::optional<CoprimeDivisorPair> square_hole_witness(u64 n);

/// Every witness for n, lexicographically ordered.
std::vector<CoprimeDivisorPair> square_hole_witnesses(u64 n);

/// The donut built from a witness, exterior sides ordered descending.
/// Throws DomainError if `w` is not a witness for n.
DonutConfig square_hole_construct(u64 n, const CoprimeDivisorPair& w);

/// Every valid (a, b, n, n), a descending.
std::vector<DonutConfig> square_hole_all(u64 n);

/// Every valid (n, n, a, b), hole side a descending.
std::vector<DonutConfig> square_donut_all(u64 n);

/// (n, n, 2kp^2, k(p+q)^2). Throws DomainError unless q < p and
/// n = 2kp(p+q).
DonutConfig square_donut_from_params(u64 n, const EuclidParams& e);

/// h = gcd(n, a), k = gcd(n, b), n = h * n_h = k * n_k.
/// For a valid square donut lcm(h, k) = n and n_h * n_k is the perimeter of
/// a primitive triple.
struct GcdDecomposition {
    u64 h = 0;
    u64 k = 0;
    u64 n_h = 0;
    u64 n_k = 0;

    friend bool operator==(const GcdDecomposition&, const GcdDecomposition&) = default;
};

/// Throws DomainError unless (n, n, a, b) is a valid donut.
GcdDecomposition gcd_decompose(u64 n, u64 a, u64 b);

/// Checks the prime-exponent relation of a square donut (n, n, a, b):
/// v2(a) + v2(b) + 1 = 2 v2(n), vP(a) + vP(b) = 2 vP(n) for odd P | n, and
/// a, b have no prime factor outside n. Uses the factorization of n only.
bool valuation_identity_holds(u64 n, u64 a, u64 b);

/// Square-holed donuts exist exactly for sides with a witness.
VerificationReport verify_theorem3(u64 limit, const SweepOptions& options = {});

/// Square donuts exist exactly for sides that are triple sums, and every one
/// satisfies the gcd/lcm and valuation relations.
VerificationReport verify_theorem4(u64 limit, const SweepOptions& options = {});

/// No (n, n, x, x) is a donut for n <= limit. Every candidate hole side is
/// checked through the batch kernels.
VerificationReport verify_no_square_square_hole(u64 limit, const SweepOptions& options = {});

std::ostream& operator<<(std::ostream& os, const CoprimeDivisorPair& w);

}  // namespace donut
