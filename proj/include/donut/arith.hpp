#pragma once

// Integer helpers shared by the fast-path modules: checked arithmetic,
// divisor lists, trial-division factorization and prime valuations.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace donut {

using u64 = std::uint64_t;

class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Raised when an argument lies outside an operation's domain (zero sides,
/// q >= p, a witness that does not divide n, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline u64 checked_mul(u64 lhs, u64 rhs) {
    u64 out = 0;
    if (__builtin_mul_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow: " + std::to_string(lhs) + " * " +
                            std::to_string(rhs));
    }
    return out;
}

inline u64 checked_add(u64 lhs, u64 rhs) {
    u64 out = 0;
    if (__builtin_add_overflow(lhs, rhs, &out)) {
        throw OverflowError("integer overflow: " + std::to_string(lhs) + " + " +
                            std::to_string(rhs));
    }
    return out;
}

inline u64 gcd(u64 lhs, u64 rhs) { return std::gcd(lhs, rhs); }

/// lcm with overflow detection; lcm(0, x) = 0.
inline u64 lcm(u64 lhs, u64 rhs) {
    if (lhs == 0 || rhs == 0) return 0;
    return checked_mul(lhs / gcd(lhs, rhs), rhs);
}

/// floor(sqrt(n)), exact for the full 64-bit range.
u64 isqrt(u64 n);

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(u64 n);

/// All positive divisors of n, ascending. Built from the factorization.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const std::vector<PrimePower>& factors);

/// Exponent of `prime` in n. n must be nonzero.
unsigned valuation(u64 n, u64 prime);

}  // namespace donut
