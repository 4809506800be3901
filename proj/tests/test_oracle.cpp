// Fast paths against the brute-force references.

#include <doctest.h>

#include <algorithm>

#include "donut/census.hpp"
#include "donut/oracle.hpp"
#include "donut/pythagoras.hpp"
#include "donut/squares.hpp"

using namespace donut;

namespace {

std::vector<Quad> sorted_quads(const std::vector<DonutConfig>& configs) {
    std::vector<Quad> out;
    for (const auto& d : configs) out.push_back(d.quad());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Quad> sorted(std::vector<Quad> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("brute_configurations: worked examples") {
    CHECK(sorted(oracle::brute_configurations(84)) ==
          std::vector<Quad>{{12, 7, 7, 6}, {21, 4, 14, 3}, {28, 3, 21, 2}});
    CHECK(oracle::brute_configurations(13).empty());
    const auto c144 = oracle::brute_configurations(144);
    CHECK(std::find(c144.begin(), c144.end(), Quad{12, 12, 9, 8}) != c144.end());
}

TEST_CASE("brute_triple_sums: worked examples") {
    CHECK(oracle::brute_triple_sums(12).all == std::set<u64>{12});
    CHECK(oracle::brute_triple_sums(11).all.empty());
    CHECK(oracle::brute_triple_sums(100).primitive == std::set<u64>{12, 30, 40, 56, 70, 84, 90});
}

TEST_CASE("brute_square_sweep: worked examples") {
    const auto sweep = oracle::brute_square_sweep({1, 30});
    CHECK(sorted(sweep.at(12).square) == std::vector<Quad>{{12, 12, 8, 9}, {12, 12, 9, 8}});
    CHECK(sweep.at(9).square.empty());
    const auto& holed30 = sweep.at(30).square_holed;
    CHECK(std::find(holed30.begin(), holed30.end(), Quad{50, 36, 30, 30}) != holed30.end());
    CHECK_THROWS(oracle::brute_square_sweep({1, 0}));
}

TEST_CASE("configurations equals brute force for D <= 2000") {
    for (u64 n = 1; n <= 2000; ++n) {
        REQUIRE(sorted_quads(configurations(n)) == sorted(oracle::brute_configurations(n)));
    }
}

TEST_CASE("is_triple_sum and primitive perimeters equal brute force for n <= 2000") {
    const auto brute = oracle::brute_triple_sums(2000);
    for (u64 n = 1; n <= 2000; ++n) {
        REQUIRE(is_triple_sum(n) == brute.all.contains(n));
        REQUIRE(!primitive_triples_with_perimeter(n).empty() == brute.primitive.contains(n));
    }
}

TEST_CASE("square enumerations equal brute force for n <= 1000") {
    const auto sweep = oracle::brute_square_sweep({1, 1000});
    for (const auto& [n, found] : sweep) {
        REQUIRE(sorted_quads(square_donut_all(n)) == sorted(found.square));
        REQUIRE(sorted_quads(square_hole_all(n)) == sorted(found.square_holed));
    }
}
