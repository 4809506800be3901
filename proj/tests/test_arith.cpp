#include <doctest.h>

#include <limits>
#include <random>

#include "donut/arith.hpp"

using namespace donut;

TEST_CASE("isqrt is exact at perfect squares and their neighbours") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    const u64 big = 4294967295ull;  // 2^32 - 1
    CHECK(isqrt(big * big) == big);
    CHECK(isqrt(big * big - 1) == big - 1);
    CHECK(isqrt(std::numeric_limits<u64>::max()) == big);
}

TEST_CASE("factorize and divisors agree with trial enumeration") {
    CHECK(factorize(1).empty());
    CHECK(factorize(84) == std::vector<PrimePower>{{2, 2}, {3, 1}, {7, 1}});
    CHECK(factorize(4294967291ull) == std::vector<PrimePower>{{4294967291ull, 1}});
    CHECK_THROWS_AS(factorize(0), DomainError);

    for (u64 n = 1; n <= 2000; ++n) {
        std::vector<u64> naive;
        for (u64 d = 1; d <= n; ++d) {
            if (n % d == 0) naive.push_back(d);
        }
        REQUIRE(divisors(n) == naive);
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(96, 2) == 5);
    CHECK(valuation(96, 3) == 1);
    CHECK(valuation(96, 5) == 0);
    CHECK_THROWS_AS(valuation(0, 2), DomainError);
    CHECK_THROWS_AS(valuation(8, 1), DomainError);
}

TEST_CASE("checked arithmetic reports overflow instead of wrapping") {
    const u64 max = std::numeric_limits<u64>::max();
    CHECK(checked_mul(1ull << 32, (1ull << 32) - 1) == (1ull << 32) * ((1ull << 32) - 1));
    CHECK_THROWS_AS(checked_mul(1ull << 32, 1ull << 32), OverflowError);
    CHECK_THROWS_AS(checked_add(max, 1), OverflowError);
    CHECK(lcm(4, 6) == 12);
    CHECK(lcm(0, 6) == 0);
    CHECK_THROWS_AS(lcm(max, max - 1), OverflowError);
}

TEST_CASE("gcd * lcm = product on random pairs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<u64> dist(1, 1'000'000);
    for (int i = 0; i < 1000; ++i) {
        const u64 a = dist(rng), b = dist(rng);
        CHECK(gcd(a, b) * lcm(a, b) == a * b);
    }
}
