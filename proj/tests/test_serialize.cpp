#include "qh/rings.hpp"
#include "qh/serialize.hpp"

#include <doctest.h>

using namespace qh;

TEST_CASE("scalar encodings")
{
    CHECK(to_json(frac(-3, 6)) == "-1/2");
    CHECK(rational_from_json(Json("7/3")) == frac(7, 3));
    CHECK(rational_from_json(Json(4)) == 4);
    QLaurent x = QLaurent(frac(1, 2), -1) + QLaurent(3, 2);
    Json j = to_json(x);
    CHECK(j == Json::parse(R"({"-1": "1/2", "2": "3"})"));
    CHECK(laurent_from_json(j) == x);
    RatMatrix m{{1, frac(1, 2)}, {0, -2}};
    CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("rings round-trip exactly")
{
    for (const char* id : {"pn:3", "quadric:6", "gr:2,5", "gr:3,6", "fci:2,3;r=3", "fci:3;r=3"}) {
        FrobeniusRing r = build_ring(id);
        Json j = ring_to_json(r);
        FrobeniusRing back = ring_from_json(Json::parse(j.dump()));
        CHECK(back.labels == r.labels);
        CHECK(back.degrees == r.degrees);
        CHECK(back.tau == r.tau);
        CHECK(back.pairing == r.pairing);
        CHECK(back.point_index == r.point_index);
        REQUIRE(back.structure.size() == r.structure.size());
        for (std::size_t i = 0; i < r.structure.size(); ++i) {
            REQUIRE(back.structure[i].size() == r.structure[i].size());
            for (std::size_t t = 0; t < r.structure[i].size(); ++t) {
                CHECK(back.structure[i][t].index == r.structure[i][t].index);
                CHECK(back.structure[i][t].coeff == r.structure[i][t].coeff);
            }
        }
        CHECK(handle_element(back) == handle_element(r));
        CHECK(ring_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("corrupted ring json is rejected")
{
    Json j = ring_to_json(projective_space(2));
    j["structure"].push_back({1, 1, 0, {{"0", "1"}}});
    CHECK_THROWS_AS(ring_from_json(j), RingError);
    Json k = ring_to_json(projective_space(2));
    k["pairing"].push_back({0, 9, {{"0", "1"}}});
    CHECK_THROWS(ring_from_json(k));
}

TEST_CASE("state parsing")
{
    FrobeniusRing g = grassmannian(2, 4);
    CHECK(parse_state(g, "unit").coords()[0] == 1);
    CHECK(parse_state(g, "pt") == ProjState(g.point().at_q(1)));
    CHECK(parse_state(g, "delta") == ProjState(handle_element(g).at_q(1)));
    CHECK(parse_state(g, "[2,1]") == ProjState(g.basis(g.index_of("[2,1]")).at_q(1)));
    CHECK(parse_state(g, "[]") == parse_state(g, "unit"));
    CHECK(parse_state(g, R"({"[]": "1", "[2,2]": "1"})") == ProjState((g.unit() + g.point()).at_q(1)));
    CHECK(parse_state(g, R"([2, 0, 0, 0, 0, "2"])") == ProjState((g.unit() + g.point()).at_q(1)));
    CHECK_THROWS(parse_state(g, R"({"[5]": 1})"));
    CHECK_THROWS(parse_state(g, "[0,0,0,0,0,0]"));
    CHECK_THROWS(parse_state(g, "H"));
}

TEST_CASE("reports are stable")
{
    FrobeniusRing q4 = quadric(4);
    ProjState one(q4.unit().at_q(1));
    Json a = limit_to_json(q4, s_infinity(q4, one));
    Json b = limit_to_json(q4, s_infinity(q4, one));
    CHECK(a.dump() == b.dump());
    CHECK(a["method"] == "rational-spectrum exact");
    CHECK(a["limit_points"].size() == 1);
    CHECK(a["limit_points"][0]["state"] == Json::parse(R"({"1": "1", "s4": "1"})"));
    Json h = handle_to_json(q4, handle_report(q4));
    CHECK(h["formulas_agree"] == true);
    CHECK(h["delta"]["s4"] == Json::parse(R"({"0": "6"})"));
}
