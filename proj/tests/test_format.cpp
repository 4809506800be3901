#include <doctest.h>

#include <json.hpp>

#include "donut/census.hpp"
#include "donut/format.hpp"

using namespace donut;

TEST_CASE("enumerate json round-trips through validation") {
    for (u64 n : {12ull, 84ull, 90ull, 144ull, 1716ull}) {
        const auto text = format_configurations(n, configurations(n), classify(n), OutputFormat::Json);
        CHECK(std::count(text.begin(), text.end(), '\n') == 1);
        const auto j = nlohmann::json::parse(text);
        CHECK(j["D"] == n);
        CHECK(j["total_count"] == j["configs"].size());
        for (const auto& c : j["configs"]) {
            const Quad q{c[0].get<u64>(), c[1].get<u64>(), c[2].get<u64>(), c[3].get<u64>()};
            CHECK(validate(q).valid);
            CHECK(q.a * q.b == n);
        }
    }
    const auto j = nlohmann::json::parse(format_configurations(84, configurations(84), classify(84), OutputFormat::Json));
    CHECK(j["class"] == "primitive");
    CHECK(j["coprime_count"] == 1);
}

TEST_CASE("enumerate plain and csv") {
    CHECK(format_configurations(84, configurations(84), classify(84), OutputFormat::Plain) ==
          "(28,3,21,2)\n(21,4,14,3)\n(12,7,7,6)\n");
    CHECK(format_configurations(84, configurations(84), classify(84), OutputFormat::Csv) ==
          "D,a,b,x,y,coprime\n84,28,3,21,2,0\n84,21,4,14,3,0\n84,12,7,7,6,1\n");
}

TEST_CASE("sequence") {
    CHECK(format_sequence(100, {12, 30, 40, 56, 70, 84, 90}, nullptr, OutputFormat::Plain) ==
          "12 30 40 56 70 84 90\n");
    CHECK(format_sequence(11, {}, nullptr, OutputFormat::Plain).empty());
    const std::vector<u64> mult{1, 2};
    CHECK(format_sequence(2000, {12, 1716}, &mult, OutputFormat::Csv) == "n,multiplicity\n12,1\n1716,2\n");
}

TEST_CASE("validation output") {
    const Quad bad{22, 20, 11, 20};
    const auto j = nlohmann::json::parse(format_validation(bad, validate(bad), OutputFormat::Json));
    CHECK(j["valid"] == false);
    CHECK(j["violations"] == nlohmann::json::array({"y < b"}));
    CHECK(format_validation(bad, validate(bad), OutputFormat::Plain) ==
          "(22,20,11,20) is not a donut\n  violated: y < b\n");
}

TEST_CASE("report json is a single object carrying tallies in order") {
    const auto r = verify_theorem1(100);
    const auto text = format_report(r, OutputFormat::Json);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1);
    const auto j = nlohmann::ordered_json::parse(text);
    CHECK(j["counterexample_count"] == 0);
    CHECK(j["complete"] == true);
    CHECK(j["tallies"]["donut_numbers"] == 7);
    CHECK(j["tallies"].begin().key() == "not_a_donut");
}

TEST_CASE("svg rendering") {
    const auto svg = render_svg(DonutConfig::checked(4, 3, 3, 2), 40);
    CHECK(svg.find("version=\"1.1\"") != std::string::npos);
    CHECK(svg.find("id=\"exterior\" x=\"40\" y=\"40\" width=\"160\" height=\"120\"") != std::string::npos);
    // 120 x 80 hole centred in the 160 x 120 exterior
    CHECK(svg.find("id=\"hole\" x=\"60.0\" y=\"60.0\" width=\"120\" height=\"80\"") != std::string::npos);
    CHECK(svg.find(">a = 4<") != std::string::npos);
    CHECK(svg.find(">y = 2<") != std::string::npos);

    const auto odd = render_svg(DonutConfig::checked(12, 7, 7, 6), 1);
    CHECK(odd.find("id=\"hole\" x=\"42.5\" y=\"40.5\" width=\"7\" height=\"6\"") != std::string::npos);
    CHECK_THROWS_AS(render_svg(DonutConfig::checked(4, 3, 3, 2), 0), DomainError);
}

TEST_CASE("parse_format") {
    CHECK(parse_format("json") == OutputFormat::Json);
    CHECK(parse_format("csv") == OutputFormat::Csv);
    CHECK(parse_format("plain") == OutputFormat::Plain);
    CHECK_FALSE(parse_format("xml").has_value());
}
