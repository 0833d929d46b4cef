#include <doctest.h>

#include "toric4/fuzz.hpp"
#include "toric4/io.hpp"

using namespace toric4;

TEST_CASE("edge parsing round trip") {
    Json doc = Json::parse(R"({"edges": [[1, 1], [1, 0], [0, 1]]})");
    auto edges = parse_edges(doc);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == IntVec2{1, 1});
    auto p = make_pair_or_throw(edges);
    CHECK(edges_to_json(p) == doc);

    CHECK_THROWS_AS(parse_edges(Json::parse("[]")), IoError);
    CHECK_THROWS_AS(parse_edges(Json::parse(R"({"edges": [[1]]})")), IoError);
    CHECK_THROWS_AS(parse_edges(Json::parse(R"({"edges": [[1, 0.5]]})")), IoError);
}

TEST_CASE("morphism parsing") {
    auto c = parse_morphism(Json::parse(R"({"type":"contract","rho":[1,1,2,3]})"));
    REQUIRE(std::holds_alternative<MorphContract>(c));
    CHECK(std::get<MorphContract>(c).rho == std::vector<int>{1, 1, 2, 3});

    auto b = parse_morphism(Json::parse(R"({"type":"bend","i":2})"));
    CHECK(std::get<MorphBend>(b).i == 2);

    auto r = parse_morphism(Json::parse(R"({"type":"rescale","i":1})"));
    CHECK(std::get<MorphRescale>(r).i == 1);

    auto u = parse_morphism(Json::parse(R"({"type":"basis_change","U":[[0,1],[-1,0]]})"));
    CHECK(std::get<MorphBasisChange>(u).u == UnimodularMatrix2(0, 1, -1, 0));

    auto cu = parse_morphism(
        Json::parse(R"({"type":"custom","rho":[1,2,3],"psi":[[2,0],[0,3]]})"));
    CHECK(std::get<MorphCustom>(cu).psi.e[1][1] == 3);

    CHECK_THROWS_AS(parse_morphism(Json::parse(R"({"type":"warp"})")), IoError);
    CHECK_THROWS_AS(parse_morphism(Json::parse(R"({"type":"basis_change","U":[[2,0],[0,1]]})")),
                    IoError);
}

TEST_CASE("serialization uses exact rational strings") {
    QMatrix m(1, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(-3);
    Json j = qmatrix_to_json(m);
    CHECK(j[0][0] == "1/2");
    CHECK(j[0][1] == "-3");
}

TEST_CASE("fuzz reports are deterministic and currently clean") {
    FuzzReport a = run_fuzz(7, 4);
    FuzzReport b = run_fuzz(7, 4);
    CHECK(fuzz_report_to_json(a).dump() == fuzz_report_to_json(b).dump());
    for (const auto& prop : a.properties) {
        INFO(prop.name, ": ", prop.first_counterexample);
        CHECK(prop.failures == 0);
    }
    FuzzReport c = run_fuzz(8, 4);
    CHECK(fuzz_report_to_json(a).dump() != fuzz_report_to_json(c).dump());
}

TEST_CASE("text rendering is stable") {
    Json doc{{"valid", true}, {"k", 2}, {"matrix", {{1, 2}, {3, 4}}}};
    std::string text = render_text(doc);
    CHECK(text == render_text(doc));
    CHECK(text.find("valid: true") != std::string::npos);
}
