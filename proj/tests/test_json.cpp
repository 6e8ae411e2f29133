#include <doctest.h>

#include "polyech/cycles.hpp"
#include "polyech/differential.hpp"
#include "polyech/flatten.hpp"
#include "polyech/json_io.hpp"
#include "polyech/sampling.hpp"

using namespace polyech;

namespace {

template <class T, class Read>
void round_trip(const T& v, Read read)
{
    json j = to_json(v);
    json again = json::parse(j.dump());
    CHECK(read(again) == v);
    CHECK(to_json(read(again)) == j);
}

}  // namespace

TEST_CASE("path schema")
{
    auto sq = n_convex({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1);
    json j = to_json(sq);
    CHECK(j["kind"] == json{{"type", "closed"}, {"n", 1}});
    CHECK(j["anchor"] == json::array({0, 0}));
    REQUIRE(j["edges"].size() == 4);
    CHECK(j["edges"][0] == json{{"dir", {1, 0}}, {"lap", 0}, {"mult", 1}});
    CHECK(j["edges"][3]["dir"] == json::array({0, -1}));
}

TEST_CASE("paths, generators and chains round-trip")
{
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        AdmissiblePath p = t % 4 == 0   ? random_closed(rng, 4, 1 + t % 3)
                           : t % 4 == 1 ? random_open_distinct(rng, 4)
                           : t % 4 == 2 ? random_periodic(rng, 3, 1 + t % 2)
                                        : random_open_closed_up(rng, 3);
        round_trip(p, path_from_json);
        Generator g = random_labels(rng, p);
        round_trip(g, generator_from_json);
        round_trip(differential(g), chain_from_json);
        round_trip(delta_twisted(g), twisted_chain_from_json);
    }
}

TEST_CASE("laurent coefficients")
{
    Generator g = all_e(n_convex({{0, 0}, {2, 0}, {0, 1}}, 1));
    TwistedChain x(g, Laurent::monomial(3, -2) + Laurent::monomial(-1, 4));
    json j = to_json(x);
    CHECK(j[0]["coefficient"] == json{{"laurent", {{"-2", 3}, {"4", -1}}}});
    CHECK(twisted_chain_from_json(j) == x);
    json plain = to_json(Chain(g, -7));
    CHECK(plain[0]["coefficient"] == -7);
    plain[0]["coefficient"] = 2;
    CHECK(twisted_chain_from_json(plain) == TwistedChain(g, Laurent(2)));
}

TEST_CASE("specs and homology results round-trip")
{
    std::vector<ComplexSpec> specs(5);
    specs[0].path = n_convex({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 1);
    specs[1].kind = SpecKind::BelowComponent;
    specs[1].path = x_axis_convex(3, 2);
    specs[1].j = -4;
    specs[2].kind = SpecKind::Bar;
    specs[2].diameter = 3;
    specs[2].degrees = std::pair<i64, i64>{0, 2};
    specs[3].kind = SpecKind::XAxis;
    specs[3].n = 2;
    specs[3].box = 5;
    specs[3].j = 0;
    specs[3].degrees = std::pair<i64, i64>{0, 4};
    specs[4].kind = SpecKind::Periodic;
    specs[4].gamma = {1, 1};
    specs[4].depth = 3;
    for (const auto& s : specs) {
        json j = to_json(s);
        CHECK(j["kind"] == spec_kind_name(s.kind));
        ComplexSpec back = spec_from_json(json::parse(j.dump()));
        CHECK(to_json(back) == j);
        CHECK(build_complex(back).total_size() == build_complex(s).total_size());
    }

    HomologyGroup h{3, 2, {Integer(2), Integer("123456789012345678901234567890")}, true};
    json j = to_json(h, specs[2]);
    CHECK(j["torsion"][0] == 2);
    CHECK(j["torsion"][1] == "123456789012345678901234567890");
    CHECK(j["spec"]["kind"] == "bar");
    CHECK(homology_from_json(json::parse(j.dump())) == h);
}

TEST_CASE("malformed input")
{
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind":"torus"})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind":"bar","diameter":2})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind":"below"})")), FormatError);
    CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind":"xaxis","box":"4","degrees":[0,1]})")), FormatError);
    CHECK_THROWS_AS(path_from_json(json::parse(R"({"kind":{"type":"closed","n":1},"edges":[{"dir":[1,0],"lap":0,"mult":1}],"anchor":[0,0]})")),
                    FormatError);
    json g = to_json(all_e(n_convex({{0, 0}, {1, 0}, {0, 1}}, 1)));
    g["labels"][0] = "x";
    CHECK_THROWS_AS(generator_from_json(g), FormatError);
    g["labels"] = json::array({"e"});
    CHECK_THROWS_AS(generator_from_json(g), FormatError);
}
