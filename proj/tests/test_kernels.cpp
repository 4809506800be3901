#include <doctest.h>

#include <random>

#include "donut/census.hpp"
#include "donut/kernels.hpp"

using namespace donut;
namespace k = donut::kernels;

namespace {

// Mix of valid donuts, their twists and random near-misses.
k::QuadBatch sample_batch(std::mt19937_64& rng, std::size_t target, u64 max_side) {
    k::QuadBatch batch;
    std::uniform_int_distribution<u64> side(1, max_side);
    while (batch.size() < target) {
        switch (rng() % 3) {
            case 0: {
                const auto configs = configurations(2 * (1 + rng() % 3000));
                if (configs.empty()) break;
                const auto& d = configs[rng() % configs.size()];
                batch.push_back(d.quad());
                batch.push_back(twist(d));
                break;
            }
            case 1: {
                const u64 a = side(rng), b = side(rng);
                batch.push_back({a, b, 1 + rng() % a, 1 + rng() % b});
                break;
            }
            default: batch.push_back({side(rng), side(rng), side(rng), side(rng)});
        }
    }
    return batch;
}

struct IsaGuard {
    ~IsaGuard() { k::force_isa(std::nullopt); }
};

}  // namespace

TEST_CASE("scalar kernels match the core predicates") {
    std::mt19937_64 rng(1);
    const auto batch = sample_batch(rng, 5000, 200);
    std::vector<std::uint16_t> masks(batch.size());
    std::vector<std::uint8_t> fast(batch.size());
    k::scalar::violation_masks(batch.a, batch.b, batch.x, batch.y, masks);
    k::scalar::twistable_fast(batch.a, batch.x, batch.y, fast);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const Quad q = batch[i];
        REQUIRE(masks[i] == violation_mask(q));
        if (auto d = DonutConfig::make(q)) REQUIRE((fast[i] != 0) == is_twistable_fast(*d));
    }
}

TEST_CASE("avx2 kernels equal scalar kernels") {
    if (!k::isa_supported(k::Isa::Avx2)) {
        MESSAGE("AVX2 not available; skipping");
        return;
    }
    std::mt19937_64 rng(2);
    for (u64 max_side : {u64{20}, u64{5000}, k::kVectorValueLimit - 1}) {
        // odd sizes exercise the scalar tail
        for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 1001u}) {
            const auto batch = sample_batch(rng, n, max_side);
            const std::size_t len = batch.size();
            std::vector<std::uint16_t> ms(len), mv(len);
            std::vector<std::uint8_t> fs(len), fv(len);
            k::scalar::violation_masks(batch.a, batch.b, batch.x, batch.y, ms);
            k::avx2::violation_masks(batch.a, batch.b, batch.x, batch.y, mv);
            k::scalar::twistable_fast(batch.a, batch.x, batch.y, fs);
            k::avx2::twistable_fast(batch.a, batch.x, batch.y, fv);
            REQUIRE(ms == mv);
            REQUIRE(fs == fv);
        }
    }
}

TEST_CASE("avx2 boundary lanes: equalities and the largest admissible sides") {
    if (!k::isa_supported(k::Isa::Avx2)) return;
    const u64 top = k::kVectorValueLimit - 1;
    k::QuadBatch batch;
    batch.push_back({22, 20, 20, 11});
    batch.push_back({22, 20, 11, 20});
    batch.push_back({2, 2, 1, 2});
    batch.push_back({top, top, top, top});
    batch.push_back({top, 1, top - 1, 1});
    batch.push_back({4, 3, 3, 2});
    batch.push_back({1, 1, 1, 1});
    batch.push_back({top, 2, top, 1});
    std::vector<std::uint16_t> ms(batch.size()), mv(batch.size());
    std::vector<std::uint8_t> fs(batch.size()), fv(batch.size());
    k::scalar::violation_masks(batch.a, batch.b, batch.x, batch.y, ms);
    k::avx2::violation_masks(batch.a, batch.b, batch.x, batch.y, mv);
    k::scalar::twistable_fast(batch.a, batch.x, batch.y, fs);
    k::avx2::twistable_fast(batch.a, batch.x, batch.y, fv);
    CHECK(ms == mv);
    CHECK(fs == fv);
    CHECK(ms[0] == 0);
    CHECK(ms[1] == static_cast<std::uint16_t>(Constraint::HoleFitsShort));
}

TEST_CASE("dispatch falls back to scalar for sides beyond the vector range") {
    IsaGuard guard;
    const u64 s = u64{1} << 40;
    k::QuadBatch batch;
    batch.push_back({4 * s, 3 * s, 3 * s, 2 * s});  // valid; products need 128 bits
    batch.push_back({4, 3, 3, 2});
    std::vector<std::uint16_t> masks(2, 0xffff);
    std::vector<std::uint8_t> fast(2, 9);
    k::violation_masks(batch.a, batch.b, batch.x, batch.y, masks);
    k::twistable_fast(batch.a, batch.x, batch.y, fast);
    CHECK(masks == std::vector<std::uint16_t>{0, 0});
    CHECK(fast == std::vector<std::uint8_t>{0, 0});
}

TEST_CASE("force_isa") {
    IsaGuard guard;
    k::force_isa(k::Isa::Scalar);
    CHECK(k::active_isa() == k::Isa::Scalar);
    if (k::isa_supported(k::Isa::Avx2)) {
        k::force_isa(k::Isa::Avx2);
        CHECK(k::active_isa() == k::Isa::Avx2);
    } else {
        CHECK_THROWS_AS(k::force_isa(k::Isa::Avx2), DomainError);
    }
    CHECK(k::isa_name(k::Isa::Avx2) == "avx2");
}

TEST_CASE("sweeps give identical reports on every ISA") {
    IsaGuard guard;
    k::force_isa(k::Isa::Scalar);
    const auto twist_scalar = verify_twistability(3000);
    if (!k::isa_supported(k::Isa::Avx2)) return;
    k::force_isa(k::Isa::Avx2);
    const auto twist_vector = verify_twistability(3000);
    CHECK(twist_scalar.tallies == twist_vector.tallies);
    CHECK(twist_scalar.counterexamples == twist_vector.counterexamples);
}

TEST_CASE("kernels reject short inputs") {
    std::vector<u64> three{1, 2, 3};
    std::vector<std::uint16_t> out(4);
    CHECK_THROWS_AS(k::violation_masks(three, three, three, three, out), DomainError);
}
