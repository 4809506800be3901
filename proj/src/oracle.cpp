#include "donut/oracle.hpp"

#include <stdexcept>

namespace donut::oracle {

namespace {

u64 slow_gcd(u64 a, u64 b) {
    while (b != 0) {
        const u64 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// straight from the definition, no shared code with core::validate
bool satisfies_definition(u64 a, u64 b, u64 x, u64 y) {
    return 1 < b && b <= a && a < a * b && a * b == 2 * x * y && 1 <= x && x < a && 1 <= y && y < b;
}

void require_limits(const SweepLimits& limits) {
    if (limits.max_area == 0 || limits.max_side == 0) {
        throw std::invalid_argument("sweep limits must be >= 1");
    }
}

}  // namespace

std::vector<Quad> brute_configurations(u64 D) {
    if (D == 0) throw std::invalid_argument("D must be positive");
    if (D > (u64{1} << 31)) throw std::invalid_argument("brute_configurations is for small D");
    std::vector<Quad> out;
    for (u64 a = 2; a < D; ++a) {
        if (D % a != 0) continue;
        const u64 b = D / a;
        if (b < 2 || b > a) continue;
        for (u64 x = 1; x < a; ++x) {
            if ((a * b) % (2 * x) != 0) continue;
            const u64 y = a * b / (2 * x);
            if (satisfies_definition(a, b, x, y)) out.push_back({a, b, x, y});
        }
    }
    return out;
}

TripleSums brute_triple_sums(u64 limit) {
    if (limit == 0) throw std::invalid_argument("limit must be positive");
    TripleSums out;
    for (u64 x = 1; x < limit; ++x) {
        u64 z = x + 1;  // the hypotenuse only grows with y
        for (u64 y = x; x + y < limit; ++y) {
            const u64 zz = x * x + y * y;
            while (z * z < zz) ++z;
            if (z * z != zz) continue;
            if (x + y + z > limit) break;
            out.all.insert(x + y + z);
            if (slow_gcd(x, y) == 1) out.primitive.insert(x + y + z);
        }
    }
    return out;
}

SquareSearch brute_square_search(u64 n) {
    SquareSearch out;
    const u64 nn = n * n;
    // (n, n, a, b): a, b < n with 2ab = n^2
    for (u64 a = 1; a < n; ++a) {
        if (nn % (2 * a) != 0) continue;
        const u64 b = nn / (2 * a);
        if (satisfies_definition(n, n, a, b)) out.square.push_back({n, n, a, b});
    }
    // (a, b, n, n): n < b <= a with ab = 2n^2, so a < 2n
    for (u64 a = n + 1; a <= 2 * n; ++a) {
        if ((2 * nn) % a != 0) continue;
        const u64 b = 2 * nn / a;
        if (satisfies_definition(a, b, n, n)) out.square_holed.push_back({a, b, n, n});
    }
    return out;
}

std::map<u64, SquareSearch> brute_square_sweep(const SweepLimits& limits) {
    require_limits(limits);
    std::map<u64, SquareSearch> out;
    for (u64 n = 1; n <= limits.max_side; ++n) out.emplace(n, brute_square_search(n));
    return out;
}

}  // namespace donut::oracle
