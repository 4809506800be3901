#include <doctest.h>

#include <algorithm>

#include "donut/census.hpp"
#include "donut/pythagoras.hpp"

using namespace donut;

namespace {

std::vector<Quad> quads(const std::vector<DonutConfig>& configs) {
    std::vector<Quad> out;
    for (const auto& d : configs) out.push_back(d.quad());
    return out;
}

}  // namespace

TEST_CASE("configurations: worked examples") {
    CHECK(quads(configurations(84)) == std::vector<Quad>{{28, 3, 21, 2}, {21, 4, 14, 3}, {12, 7, 7, 6}});
    CHECK(configurations(13).empty());
    CHECK(quads(configurations(12)) == std::vector<Quad>{{4, 3, 3, 2}});
    for (u64 small = 1; small < 12; ++small) CHECK(configurations(small).empty());
}

TEST_CASE("configurations: sorted, valid and of the right area") {
    for (u64 n = 1; n <= 3000; ++n) {
        const auto configs = configurations(n);
        for (std::size_t i = 0; i < configs.size(); ++i) {
            REQUIRE(validate(configs[i].quad()).valid);
            REQUIRE(area(configs[i]) == n);
            if (i > 0) {
                const auto& p = configs[i - 1];
                const auto& c = configs[i];
                REQUIRE((p.a() > c.a() || (p.a() == c.a() && p.x() > c.x())));
            }
        }
        if (n % 2 != 0) REQUIRE(classify(n).kind == DonutKind::NotADonut);
    }
}

TEST_CASE("classify") {
    auto cls = classify(84);
    CHECK(cls.kind == DonutKind::Primitive);
    CHECK(cls.total_config_count == 3);
    CHECK(cls.coprime_config_count == 1);

    cls = classify(90);
    CHECK(cls.coprime_config_count >= 1);
    const auto configs = configurations(90);
    CHECK(std::find(configs.begin(), configs.end(), DonutConfig::checked(10, 9, 9, 5)) != configs.end());

    CHECK(classify(13).kind == DonutKind::NotADonut);
    CHECK(classify(24).kind == DonutKind::PlainDonut);
    CHECK(classify(1716).kind == DonutKind::QuasiPrimitive);
    CHECK(classify(1716).coprime_config_count == 2);
}

TEST_CASE("DonutClass kind follows the counts") {
    for (u64 n = 1; n <= 5000; ++n) {
        const auto c = classify(n);
        REQUIRE((c.kind == DonutKind::NotADonut) == (c.total_config_count == 0));
        REQUIRE((c.kind == DonutKind::Primitive) == (c.coprime_config_count == 1));
        REQUIRE((c.kind == DonutKind::QuasiPrimitive) == (c.coprime_config_count >= 2));
        REQUIRE((c.kind == DonutKind::PlainDonut) ==
                (c.total_config_count >= 1 && c.coprime_config_count == 0));
        REQUIRE(c.coprime_orbit_count <= c.coprime_config_count);
    }
}

TEST_CASE("donut_numbers") {
    const std::set<DonutKind> coprime{DonutKind::Primitive, DonutKind::QuasiPrimitive};
    CHECK(donut_numbers(99, coprime) == std::vector<u64>{12, 30, 40, 56, 70, 84, 90});
    CHECK(donut_numbers(99, coprime) == primitive_perimeters(99));
    CHECK(donut_numbers(11, coprime).empty());
    CHECK(donut_numbers(11, {DonutKind::PlainDonut}).empty());
    // frozen from the brute-force configuration search
    CHECK(donut_numbers(500, {DonutKind::QuasiPrimitive}).empty());
    CHECK(donut_numbers(5000, {DonutKind::QuasiPrimitive}) ==
          std::vector<u64>{1716, 2652, 3876, 3960, 4290});
}

TEST_CASE("scaling a coprime configuration lands in the census of its area") {
    const u64 limit = 3000;
    for (u64 n = 1; n <= limit; ++n) {
        for (const auto& c : configurations(n)) {
            if (!is_coprime_config(c)) continue;
            for (u64 h = 1; h * n <= limit; ++h) {
                for (u64 k = 1; h * k * n <= limit; ++k) {
                    const auto s = scale(c, h, k);
                    const auto census = configurations(area(s));
                    REQUIRE(std::find(census.begin(), census.end(), s) != census.end());
                }
            }
        }
    }
}

TEST_CASE("verify_theorem1") {
    auto r = verify_theorem1(100);
    CHECK(r.passed());
    CHECK(r.counterexamples.empty());
    CHECK(r.tally("donut_numbers") == 7);
    CHECK(r.tally("primitive_perimeters") == 7);

    r = verify_theorem1(12);
    CHECK(r.passed());
    CHECK(r.tally("donut_numbers") == 1);
    CHECK(r.tally("primitive") == 1);

    r = verify_theorem1(5000, {.threads = 3});
    CHECK(r.passed());
    CHECK(r.tally("quasi_primitive") == 5);
}

TEST_CASE("verify_twistability") {
    const auto r = verify_twistability(5000);
    CHECK(r.passed());
    CHECK(r.tally("mismatches") == 0);
    // frozen from the brute-force configuration search
    CHECK(r.tally("configurations") == 8198);
    CHECK(r.tally("twistable") == 403);
}
