#include "donut/arith.hpp"

#include <algorithm>
#include <cmath>

namespace donut {

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && (r > n / r)) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

std::vector<PrimePower> factorize(u64 n) {
    std::vector<PrimePower> out;
    if (n == 0) throw DomainError("factorize: n must be positive");
    auto strip = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e != 0) out.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (u64 p = 5; p <= n / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<u64> divisors(const std::vector<PrimePower>& factors) {
    std::vector<u64> out{1};
    for (const auto& [prime, exponent] : factors) {
        const std::size_t base = out.size();
        u64 power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

unsigned valuation(u64 n, u64 prime) {
    if (n == 0) throw DomainError("valuation: n must be nonzero");
    if (prime < 2) throw DomainError("valuation: prime must be >= 2");
    unsigned e = 0;
    while (n % prime == 0) {
        n /= prime;
        ++e;
    }
    return e;
}

}  // namespace donut
