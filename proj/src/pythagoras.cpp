#include "donut/pythagoras.hpp"

#include <algorithm>

namespace donut {

std::ostream& operator<<(std::ostream& os, const PythTriple& t) {
    return os << '(' << t.leg_small << ',' << t.leg_large << ',' << t.hyp << ')';
}

std::ostream& operator<<(std::ostream& os, const EuclidParams& e) {
    return os << "(k=" << e.k << ",p=" << e.p << ",q=" << e.q << ')';
}

bool EuclidParams::primitive_generating() const {
    return k == 1 && q < p && gcd(p, q) == 1 && (p - q) % 2 == 1;
}

PythTriple euclid_triple(const EuclidParams& e) {
    if (e.k == 0 || e.q == 0 || e.q >= e.p) {
        throw DomainError("euclid_triple: need k >= 1 and 0 < q < p");
    }
    const u64 pp = checked_mul(e.p, e.p);
    const u64 qq = checked_mul(e.q, e.q);
    const u64 odd_leg = checked_mul(e.k, pp - qq);
    const u64 even_leg = checked_mul(checked_mul(2, e.k), checked_mul(e.p, e.q));
    const u64 hyp = checked_mul(e.k, checked_add(pp, qq));
    // the perimeter must be representable too
    checked_add(checked_add(odd_leg, even_leg), hyp);
    return PythTriple{std::min(odd_leg, even_leg), std::max(odd_leg, even_leg), hyp,
                      e.primitive_generating()};
}

std::map<u64, u64> primitive_perimeter_multiplicity(u64 limit) {
    std::map<u64, u64> out;
    // 2p(p+q) >= 2p(p+1), so p is bounded by roughly sqrt(limit / 2)
    for (u64 p = 2; checked_mul(2 * p, p + 1) <= limit; ++p) {
        for (u64 q = (p % 2 == 0) ? 1 : 2; q < p; q += 2) {
            if (gcd(p, q) != 1) continue;
            const u64 perimeter = 2 * p * (p + q);
            if (perimeter > limit) break;
            ++out[perimeter];
        }
    }
    return out;
}

std::vector<u64> primitive_perimeters(u64 limit) {
    std::vector<u64> out;
    for (const auto& [perimeter, count] : primitive_perimeter_multiplicity(limit)) {
        out.push_back(perimeter);
    }
    return out;
}

std::vector<PythTriple> primitive_triples_with_perimeter(u64 n) {
    std::vector<PythTriple> out;
    if (n == 0 || n % 2 != 0) return out;
    const u64 half = n / 2;  // p(p+q)
    for (u64 p = 2; p * (p + 1) <= half; ++p) {
        if (half % p != 0) continue;
        const u64 s = half / p;
        if (s <= p || s >= 2 * p) continue;
        const u64 q = s - p;
        if (q % 2 == p % 2 || gcd(p, q) != 1) continue;
        out.push_back(euclid_triple({1, p, q}));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EuclidParams> triple_sum_decompositions(u64 n) {
    std::vector<EuclidParams> out;
    if (n == 0 || n % 2 != 0) return out;
    const u64 half = n / 2;  // k * p * (p+q)
    const auto divs = divisors(half);
    for (const u64 p : divs) {
        const u64 rest = half / p;
        for (const u64 s : divs) {
            if (s <= p) continue;
            if (s >= 2 * p) break;
            if (rest % s != 0) continue;
            const u64 q = s - p;
            if (q % 2 == p % 2 || gcd(p, q) != 1) continue;
            out.push_back({rest / s, p, q});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const EuclidParams& l, const EuclidParams& r) {
                  return l.p != r.p ? l.p < r.p : l.q < r.q;
              });
    return out;
}

bool is_triple_sum(u64 n) { return !triple_sum_decompositions(n).empty(); }

}  // namespace donut
