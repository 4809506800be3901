#pragma once

// Pythagorean triples through Euclid's parameterization
//   x = k(p^2 - q^2), y = 2kpq, z = k(p^2 + q^2),   q < p,
// with perimeter x + y + z = 2kp(p + q).

#include <cstdint>
#include <map>
#include <ostream>
#include <vector>

#include "donut/arith.hpp"

namespace donut {

struct PythTriple {
    u64 leg_small = 0;  // x, legs stored ascending
    u64 leg_large = 0;  // y
    u64 hyp = 0;        // z
    bool primitive = false;

    u64 perimeter() const { return leg_small + leg_large + hyp; }

    friend auto operator<=>(const PythTriple&, const PythTriple&) = default;
};

std::ostream& operator<<(std::ostream& os, const PythTriple& t);

struct EuclidParams {
    u64 k = 1;
    u64 p = 2;
    u64 q = 1;

    /// gcd(p, q) = 1, p - q odd and k = 1.
    bool primitive_generating() const;

    friend auto operator<=>(const EuclidParams&, const EuclidParams&) = default;
};

std::ostream& operator<<(std::ostream& os, const EuclidParams& e);

/// Throws DomainError unless 0 < q < p and k >= 1; OverflowError on overflow.
PythTriple euclid_triple(const EuclidParams& e);

/// Distinct perimeters 2p(p+q) <= limit of primitive triples, ascending.
std::vector<u64> primitive_perimeters(u64 limit);

/// Perimeter -> number of primitive triples with that perimeter.
std::map<u64, u64> primitive_perimeter_multiplicity(u64 limit);

/// All primitive triples with x + y + z = n, ordered by smallest leg.
std::vector<PythTriple> primitive_triples_with_perimeter(u64 n);

/// Every (k, p, q) with coprime, opposite-parity q < p and n = 2kp(p+q).
/// Ordered by p, then q.
std::vector<EuclidParams> triple_sum_decompositions(u64 n);

/// n is the sum x + y + z of some (not necessarily primitive) triple.
bool is_triple_sum(u64 n);

}  // namespace donut
