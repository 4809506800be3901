#include "donut/squares.hpp"

#include <algorithm>
#include <sstream>

#include "donut/kernels.hpp"

namespace donut {

std::ostream& operator<<(std::ostream& os, const CoprimeDivisorPair& w) {
    return os << "(p=" << w.p << ",q=" << w.q << ')';
}

namespace {

/// Factorization of n^2 * 2^shift, shift in {-1, 0, +1}.
std::vector<PrimePower> square_factors(u64 n, int shift) {
    auto factors = factorize(n);
    for (auto& f : factors) f.exponent *= 2;
    if (shift != 0) {
        if (factors.empty() || factors.front().prime != 2) {
            if (shift < 0) throw DomainError("n^2 / 2 is not an integer");
            factors.insert(factors.begin(), PrimePower{2, 1});
        } else {
            factors.front().exponent = static_cast<unsigned>(
                static_cast<int>(factors.front().exponent) + shift);
            if (factors.front().exponent == 0) factors.erase(factors.begin());
        }
    }
    return factors;
}

template <typename Range>
bool contains(const Range& r, const DonutConfig& d) {
    return std::find(r.begin(), r.end(), d) != r.end();
}

}  // namespace

bool is_witness(u64 n, const CoprimeDivisorPair& w) {
    return n != 0 && w.p != 0 && w.q != 0 && n % w.p == 0 && n % w.q == 0 && gcd(w.p, w.q) == 1 &&
           w.p < w.q && w.q < 2 * w.p;
}

namespace {

template <typename Visit>
void for_each_witness(u64 n, Visit&& visit) {
    if (n == 0) throw DomainError("square hole witnesses: n must be positive");
    const auto divs = divisors(n);
    for (const u64 p : divs) {
        for (const u64 q : divs) {
            if (q <= p) continue;
            if (q >= 2 * p) break;
            if (gcd(p, q) == 1 && !visit(CoprimeDivisorPair{p, q})) return;
        }
    }
}

}  // namespace

std::optional<CoprimeDivisorPair> square_hole_witness(u64 n) {
    std::optional<CoprimeDivisorPair> first;
    for_each_witness(n, [&](const CoprimeDivisorPair& w) {
        first = w;
        return false;
    });
    return first;
}

std::vector<CoprimeDivisorPair> square_hole_witnesses(u64 n) {
    std::vector<CoprimeDivisorPair> out;
    for_each_witness(n, [&](const CoprimeDivisorPair& w) {
        out.push_back(w);
        return true;
    });
    return out;
}

DonutConfig square_hole_construct(u64 n, const CoprimeDivisorPair& w) {
    if (!is_witness(n, w)) {
        std::ostringstream os;
        os << "square_hole_construct: " << w << " is not a coprime divisor pair p < q < 2p of " << n;
        throw DomainError(os.str());
    }
    const u64 a = checked_mul(2 * w.p, n / w.q);
    const u64 b = checked_mul(w.q, n / w.p);
    return DonutConfig::checked(std::max(a, b), std::min(a, b), n, n);
}

std::vector<DonutConfig> square_hole_all(u64 n) {
    if (n == 0) throw DomainError("square_hole_all: n must be positive");
    std::vector<DonutConfig> out;
    const u64 area = checked_mul(2, checked_mul(n, n));
    for (const u64 b : divisors(square_factors(n, +1))) {
        if (b <= n) continue;
        const u64 a = area / b;
        if (a < b) break;
        if (auto d = DonutConfig::make(a, b, n, n)) out.push_back(*d);
    }
    std::sort(out.begin(), out.end(),
              [](const DonutConfig& l, const DonutConfig& r) { return l.a() > r.a(); });
    return out;
}

std::vector<DonutConfig> square_donut_all(u64 n) {
    if (n == 0) throw DomainError("square_donut_all: n must be positive");
    std::vector<DonutConfig> out;
    if (n % 2 != 0) return out;
    const u64 half = checked_mul(n, n) / 2;
    const auto hole_sides = divisors(square_factors(n, -1));
    for (auto it = hole_sides.rbegin(); it != hole_sides.rend(); ++it) {
        const u64 a = *it;
        if (a >= n) continue;
        const u64 b = half / a;
        if (b >= n) break;
        if (auto d = DonutConfig::make(n, n, a, b)) out.push_back(*d);
    }
    return out;
}

DonutConfig square_donut_from_params(u64 n, const EuclidParams& e) {
    if (e.k == 0 || e.q == 0 || e.q >= e.p) {
        throw DomainError("square_donut_from_params: need k >= 1 and 0 < q < p");
    }
    const u64 sum = checked_mul(checked_mul(2 * e.k, e.p), e.p + e.q);
    if (sum != n) {
        std::ostringstream os;
        os << "square_donut_from_params: 2kp(p+q) = " << sum << " for " << e << ", not " << n;
        throw DomainError(os.str());
    }
    const u64 a = checked_mul(2 * e.k, checked_mul(e.p, e.p));
    const u64 b = checked_mul(e.k, checked_mul(e.p + e.q, e.p + e.q));
    return DonutConfig::checked(n, n, a, b);
}

GcdDecomposition gcd_decompose(u64 n, u64 a, u64 b) {
    if (n == 0 || a == 0 || b == 0 || !is_valid({n, n, a, b})) {
        throw DomainError("gcd_decompose: " + to_string(Quad{n, n, a, b}) + " is not a square donut");
    }
    const u64 h = gcd(n, a);
    const u64 k = gcd(n, b);
    return {h, k, n / h, n / k};
}

bool valuation_identity_holds(u64 n, u64 a, u64 b) {
    if (n == 0 || a == 0 || b == 0) return false;
    const auto factors = factorize(n);
    if (factors.empty() || factors.front().prime != 2) return false;
    u64 a_rest = a;
    u64 b_rest = b;
    for (const auto& [prime, exponent] : factors) {
        const unsigned va = valuation(a, prime);
        const unsigned vb = valuation(b, prime);
        const unsigned expected = 2 * exponent - (prime == 2 ? 1 : 0);
        if (va + vb != expected) return false;
        for (unsigned i = 0; i < va; ++i) a_rest /= prime;
        for (unsigned i = 0; i < vb; ++i) b_rest /= prime;
    }
    return a_rest == 1 && b_rest == 1;
}

VerificationReport verify_theorem3(u64 limit, const SweepOptions& options) {
    enum : std::size_t { kSides, kHoledSides, kHoledDonuts, kWitnesses };
    std::vector<std::string> names{"sides", "square_holed_sides", "square_holed_donuts", "witnesses"};
    auto check = [](u64 lo, u64 hi, ChunkResult& out) {
        auto& t = out.tallies;
        auto fail = [&](u64 n, std::string why) { out.counterexamples.push_back({n, std::move(why)}); };
        for (u64 n = lo; n <= hi; ++n) {
            ++t[kSides];
            const auto all = square_hole_all(n);
            const auto witness = square_hole_witness(n);
            if (!all.empty()) ++t[kHoledSides];
            t[kHoledDonuts] += all.size();
            if (all.empty() != !witness.has_value()) {
                fail(n, witness ? "witness exists but no square-holed donut"
                                : "square-holed donut exists without a witness");
            }
            for (const auto& w : square_hole_witnesses(n)) {
                ++t[kWitnesses];
                const auto built = square_hole_construct(n, w);
                if (!contains(all, built)) fail(n, "constructed " + to_string(built.quad()) + " not enumerated");
            }
            const u64 area = 2 * n * n;
            for (const auto& d : all) {
                if (donut::area(d) != area) fail(n, to_string(d.quad()) + " area is not 2n^2");
                if (!is_twistable_fast(d)) fail(n, to_string(d.quad()) + " not twistable");
            }
            if (!all.empty() && factorize(n).size() < 2) fail(n, "square-holed donut for a prime power");
        }
    };
    return run_sweep("theorem3", limit, std::move(names), check, options);
}

VerificationReport verify_theorem4(u64 limit, const SweepOptions& options) {
    enum : std::size_t { kSides, kSquareSides, kSquareDonuts, kConstructed };
    std::vector<std::string> names{"sides", "square_sides", "square_donuts", "constructed"};
    auto check = [](u64 lo, u64 hi, ChunkResult& out) {
        auto& t = out.tallies;
        auto fail = [&](u64 n, std::string why) { out.counterexamples.push_back({n, std::move(why)}); };
        for (u64 n = lo; n <= hi; ++n) {
            ++t[kSides];
            const auto all = square_donut_all(n);
            const auto decompositions = triple_sum_decompositions(n);
            if (!all.empty()) ++t[kSquareSides];
            t[kSquareDonuts] += all.size();
            if (all.empty() != decompositions.empty()) {
                fail(n, all.empty() ? "triple sum without a square donut"
                                    : "square donut for a side that is not a triple sum");
            }
            for (const auto& e : decompositions) {
                ++t[kConstructed];
                const auto built = square_donut_from_params(n, e);
                if (!contains(all, built)) fail(n, "constructed " + to_string(built.quad()) + " not enumerated");
            }
            for (const auto& d : all) {
                const std::string tag = to_string(d.quad());
                const u64 a = d.x();
                const u64 b = d.y();
                if (gcd(n, a) == 1 || gcd(n, b) == 1) fail(n, tag + " has a side coprime to n");
                const auto g = gcd_decompose(n, a, b);
                if (lcm(g.h, g.k) != n) fail(n, tag + " lcm(gcd(n,a), gcd(n,b)) != n");
                if (primitive_triples_with_perimeter(checked_mul(g.n_h, g.n_k)).empty()) {
                    fail(n, tag + " n_h * n_k is not a primitive perimeter");
                }
                if (!valuation_identity_holds(n, a, b)) fail(n, tag + " valuation identity fails");
                if (!is_twistable_fast(d)) fail(n, tag + " not twistable");
            }
            if (!all.empty() && n % 2 != 0) fail(n, "square donut with odd side");
        }
    };
    return run_sweep("theorem4", limit, std::move(names), check, options);
}

VerificationReport verify_no_square_square_hole(u64 limit, const SweepOptions& options) {
    enum : std::size_t { kSides, kCandidates, kFound };
    std::vector<std::string> names{"sides", "candidates", "found"};
    auto check = [](u64 lo, u64 hi, ChunkResult& out) {
        auto& t = out.tallies;
        kernels::QuadBatch batch;
        std::vector<std::uint16_t> masks;
        for (u64 n = lo; n <= hi; ++n) {
            ++t[kSides];
            batch.clear();
            batch.reserve(n);
            for (u64 x = 1; x < n; ++x) batch.push_back({n, n, x, x});
            masks.assign(batch.size(), 0);
            kernels::violation_masks(batch.a, batch.b, batch.x, batch.y, masks);
            t[kCandidates] += batch.size();
            for (std::size_t i = 0; i < masks.size(); ++i) {
                if (masks[i] == 0) {
                    ++t[kFound];
                    out.counterexamples.push_back({n, to_string(batch[i]) + " is a donut"});
                }
            }
        }
    };
    return run_sweep("no-square-square-hole", limit, std::move(names), check, options);
}

}  // namespace donut
