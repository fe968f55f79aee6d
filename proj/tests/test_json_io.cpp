#include <doctest.h>

#include "burniat/json_io.hpp"
#include "config_sampling.hpp"

using namespace burniat;

TEST_CASE("rationals round-trip through {n, d}") {
    const Rat q(-22, 7);
    CHECK(rat_from_json(rat_to_json(q)) == q);
    CHECK(rat_to_json(q)["n"] == "-22");
    CHECK(rat_to_json(q)["d"] == "7");
    CHECK_THROWS_AS(rat_from_json(nlohmann::json::parse(R"({"n":"1","d":"0"})")), InputError);
    CHECK_THROWS_AS(rat_from_json(nlohmann::json::parse(R"("1/2")")), InputError);
}

TEST_CASE("divisor classes round-trip") {
    const DivisorClass c = div_class(3, {1, -2, 0, 1});
    CHECK(divisor_from_json(divisor_to_json(c)) == c);
}

TEST_CASE("configurations round-trip and stay classifiable") {
    SplitMix64 rng(kDefaultSeed + 11);
    for (const CaseTag tag : {CaseTag::K6, CaseTag::K5, CaseTag::K4nn, CaseTag::K4n}) {
        const BurniatConfig cfg = testing::draw_config(tag, rng);
        const ojson j = config_to_json(cfg);
        const BurniatConfig back = config_from_json(j);
        CHECK(back.declared_case == cfg.declared_case);
        REQUIRE(back.extra_points.size() == cfg.extra_points.size());
        for (size_t i = 0; i < back.extra_points.size(); ++i)
            CHECK(same_point(back.extra_points[i], cfg.extra_points[i]));
        for (size_t i = 0; i < 9; ++i) {
            CHECK(back.lines[i].label == cfg.lines[i].label);
            CHECK(same_line(back.lines[i], cfg.lines[i]));
        }
        CHECK(classify(back).tag == tag);
        // serialization is deterministic
        CHECK(config_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("malformed configurations are rejected at parse time") {
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(R"({"lines": []})")), InputError);
    const char* bad_line = R"({
        "case": "K6",
        "lines": [{"label": [1, 1], "coeffs": [{"n":"0","d":"1"},{"n":"0","d":"1"},{"n":"0","d":"1"}]}]
    })";
    CHECK_THROWS_AS(config_from_json(nlohmann::json::parse(bad_line)), InputError);
}

TEST_CASE("parse_rational accepts slash form") {
    CHECK(parse_rational("3/4") == Rat(3, 4));
    CHECK(parse_rational("-5") == Rat(-5));
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
}
