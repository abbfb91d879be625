#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "sinuosity.hpp"

using namespace gridrover;

namespace {

GridPolygon loadCorpus(const char* name) {
    std::ifstream in(std::string(CORPUS_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return GridPolygon::parse(buf.str());
}

int reflexCount(const GridPolygon& p) {
    int n = 0;
    for (const auto& loop : traceBoundaries(p))
        for (const auto& v : loop.vertices)
            if (v.reflex) ++n;
    return n;
}

}  // namespace

TEST_CASE("rectangle boundary: one outer loop, four convex corners") {
    GridPolygon p = genRectangle(4, 3);
    auto loops = traceBoundaries(p);
    REQUIRE(loops.size() == 1);
    CHECK(loops[0].outer);
    CHECK(loops[0].vertices.size() == 4);
    for (const auto& v : loops[0].vertices) CHECK(!v.reflex);
}

TEST_CASE("a 1x1 hole adds a loop whose four corners are all reflex") {
    GridPolygon p = GridPolygon::parse(
        "S....\n"
        ".....\n"
        "..#..\n"
        ".....\n"
        ".....\n");
    auto loops = traceBoundaries(p);
    REQUIRE(loops.size() == 2);
    CHECK(loops[0].outer);
    CHECK(!loops[1].outer);
    CHECK(loops[1].vertices.size() == 4);
    for (const auto& v : loops[1].vertices) CHECK(v.reflex);
}

TEST_CASE("an L-shape has exactly one reflex vertex") {
    GridPolygon p = GridPolygon::parse(
        "S.##\n"
        "....\n");
    CHECK(reflexCount(p) == 1);
}

TEST_CASE("rectangles carry only the start-square contribution") {
    // No reflex vertices, so only the squares grown from the start cell can
    // contribute: the square along the wall spans min(w, h), and odd squares
    // of width q add q - 1.
    for (int w = 1; w <= 5; ++w)
        for (int h = 1; h <= 5; ++h) {
            SinuosityReport s = computeSinuosity(genRectangle(w, h));
            CHECK(s.records.empty());
            int m = std::min(w, h);
            int expected = (m >= 2 && m % 2 == 1) ? m - 1 : 0;
            CHECK(s.windingCw == expected);
            CHECK(s.windingCcw == 0);
        }
}

TEST_CASE("contributions are even and consistent with the records") {
    for (uint64_t seed : {3u, 17u, 51u}) {
        GridPolygon p = genRandomSimple(60, seed);
        SinuosityReport s = computeSinuosity(p);
        int64_t cw = s.startContributionCcw, ccwSum = s.startContributionCw;
        for (const auto& r : s.records) {
            CHECK((r.oddContribution % 2) == 0);
            if (r.oddContribution != 0) CHECK((r.squareWidth % 2) == 1);
            if (r.traversalIndex % 2 == 1)
                cw += r.oddContribution;
            else
                ccwSum += r.oddContribution;
        }
        CHECK(s.windingCw == cw);
        CHECK(s.windingCcw == ccwSum);
        CHECK(s.windingCw % 2 == 0);
        CHECK(s.windingCcw % 2 == 0);
        CHECK(s.windingCw >= 0);
        CHECK(s.windingCcw >= 0);
    }
}

TEST_CASE("translation leaves sinuosity unchanged") {
    GridPolygon p = genRandomHoley(40, 1, 5);
    SinuosityReport a = computeSinuosity(p);
    SinuosityReport b = computeSinuosity(p.translated(11, -4));
    CHECK(a.windingCw == b.windingCw);
    CHECK(a.windingCcw == b.windingCcw);
}

TEST_CASE("a width-1 corridor behind a reflex vertex grows only a unit square") {
    // L-shaped width-1 corridor: the square at the inner corner cannot grow.
    GridPolygon p = GridPolygon::parse(
        "S.##\n"
        "#.##\n"
        "#...\n");
    SinuosityReport s = computeSinuosity(p);
    bool sawUnit = false;
    for (const auto& r : s.records)
        if (r.squareWidth == 1) {
            CHECK(r.oddContribution == 0);
            sawUnit = true;
        }
    CHECK(sawUnit);
}

TEST_CASE("a width-3 corridor turn contributes q' = 2") {
    // 3-wide corridor with a left turn; the inner reflex corner grows a
    // 3-square across the corridor.
    GridPolygon p = GridPolygon::parse(
        "...###\n"
        "...###\n"
        "...###\n"
        "......\n"
        "......\n"
        "S.....\n");
    SinuosityReport s = computeSinuosity(p);
    bool saw = false;
    for (const auto& r : s.records)
        if (r.squareWidth == 3 && r.oddContribution == 2) saw = true;
    CHECK(saw);
}

TEST_CASE("transcribed figure polygons carry their published sinuosity") {
    CHECK(computeSinuosity(loadCorpus("cellexpltight.poly")).windingCw == 2);
    CHECK(computeSinuosity(loadCorpus("cellexplsptight.poly")).windingCw == 2);
    CHECK(computeSinuosity(loadCorpus("wcwexa1.poly")).windingCw == 6);
    CHECK(computeSinuosity(loadCorpus("wcwexa2.poly")).windingCw == 2);
    SinuosityReport cv = computeSinuosity(loadCorpus("convexvertex.poly"));
    CHECK(cv.windingCw == 8);
    CHECK(cv.windingCcw == 2);
}
