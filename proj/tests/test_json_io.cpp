#include <doctest.h>

#include <random>

#include "halphen/json_io.hpp"

using namespace halphen;
using nlohmann::json;

TEST_CASE("scheme specs survive a round trip") {
    PrimeField F;
    std::mt19937_64 rng(5);
    SchemeSpec Z;
    Z.components.push_back(PointSpec{{1, 2, 3, 4}});
    Z.components.push_back(DoublePointSpec{{5, 6, 7, 8}});
    Z.components.push_back(LineSpec{{1, 0, 0, 1}, {0, 1, 1, 0}});
    Z.components.push_back(RulingLineSpec{2, {9, 1}});
    GridSpec grid;
    grid.fam1.push_back({3, 1});
    grid.fam2.push_back({4, 1});
    Z.components.push_back(grid);
    Z.components.push_back(random_det_curve(2, F, rng));

    json j = to_json(Z);
    SchemeSpec back = scheme_from_json(j);
    CHECK(back.prime == Z.prime);
    REQUIRE(back.components.size() == Z.components.size());
    CHECK(to_json(back).dump() == j.dump());  // canonical form is a fixed point

    /* the two parses give the same h0 */
    CHECK(h0_ideal(back, 3) == h0_ideal(Z, 3));
}

TEST_CASE("horace configs survive a round trip") {
    HoraceConfig cfg;
    cfg.level = 4;
    cfg.grid.fam1.push_back({2, 1});
    cfg.grid.fam2.push_back({3, 1});
    cfg.chi.push_back({0, 0});
    cfg.marked.push_back({{2, 1}, {5, 1}});
    cfg.extra.push_back({{7, 1}, {11, 1}});
    json j = to_json(cfg);
    HoraceConfig back = horace_config_from_json(j);
    CHECK(back.level == 4);
    CHECK(back.chi == cfg.chi);
    CHECK(to_json(back).dump() == j.dump());
}

TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(scheme_from_json(json{{"components", json::array({{{"type", "widget"}}})}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(scheme_from_json(json{{"components",
                                           json::array({{{"type", "point"}, {"c", json::array({"1", "2"})}}})}}),
                    std::invalid_argument);
}

TEST_CASE("plan serialization is deterministic and self describing") {
    ConstructionPlan P = plan(Int("317400920001"), Int(1380000), Int(0), PlanMode::Strict);
    json j1 = to_json(P);
    json j2 = to_json(P);
    CHECK(j1.dump() == j2.dump());
    CHECK(j1["all_green"] == true);
    CHECK(j1["context"]["small_genus"] == true);
    CHECK(j1["context"]["d"] == "317400920001");
    CHECK(j1["validity"].is_array());
}

TEST_CASE("lemma reports serialize every field") {
    LemmaBudget b;
    b.samples = 100;
    b.seed = 3;
    json j = to_json(verify_lemma("L5.1", b));
    for (const char* key : {"id", "statement", "seed", "tested", "probed", "failures",
                            "failure_count", "informational_count", "self_test", "passed"})
        CHECK_MESSAGE(j.contains(key), key);
    CHECK(j["passed"] == true);
}

TEST_CASE("big integers serialize as decimal strings") {
    RangeClass rc = classify(Int("317400920001"), Int(1380000));
    json c = to_json(rc, Int("317400920001"), Int(1380000));
    CHECK(c["d"] == "317400920001");
    CHECK(c["range"] == "A");
    CHECK(c["boundaries"]["a_lower_ceil"] == "317400920001");
}
