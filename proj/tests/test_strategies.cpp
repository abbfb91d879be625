#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "sinuosity.hpp"
#include "strategies.hpp"

using namespace gridrover;

namespace {

struct RunOutcome {
    ExplorationTrace trace;
    TraceReport report;
};

RunOutcome runOn(const GridPolygon& p, const std::string& name) {
    ConcreteEnvironment env(p);
    auto s = makeStrategy(name);
    RunOutcome out;
    out.trace = runStrategy(env, *s);
    out.report = validateTrace(p, out.trace);
    return out;
}

const BoundCheck& boundNamed(const TraceReport& r, const std::string& name) {
    for (const BoundCheck& b : r.bounds)
        if (b.name == name) return b;
    REQUIRE(false);
    return r.bounds.front();
}

GridPolygon loadCorpus(const char* name) {
    std::ifstream in(std::string(CORPUS_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return GridPolygon::parse(buf.str());
}

}  // namespace

TEST_CASE("every strategy produces a valid closed covering tour") {
    for (uint64_t seed : {2u, 12u, 77u}) {
        GridPolygon simple = genRandomSimple(50, seed);
        GridPolygon holey = genRandomHoley(50, 2, seed);
        for (const char* name : {"dfs", "smartdfs", "cellexplore", "cellexplore-sp"}) {
            for (const GridPolygon* p : {&simple, &holey}) {
                RunOutcome out = runOn(*p, name);
                CHECK(out.report.covered);
                CHECK(out.report.closed);
            }
        }
    }
}

TEST_CASE("strategies are deterministic") {
    GridPolygon p = genRandomHoley(45, 1, 23);
    for (const char* name : {"dfs", "smartdfs", "cellexplore", "cellexplore-sp"}) {
        RunOutcome a = runOn(p, name);
        RunOutcome b = runOn(p, name);
        CHECK(a.trace.positions == b.trace.positions);
    }
}

TEST_CASE("dfs walks exactly 2C-2 steps") {
    for (uint64_t seed : {1u, 9u, 31u}) {
        GridPolygon p = genRandomSimple(35, seed);
        RunOutcome out = runOn(p, "dfs");
        CHECK(out.report.steps == 2 * static_cast<int64_t>(p.size()) - 2);
    }
    GridPolygon holey = genRandomHoley(35, 1, 3);
    CHECK(runOn(holey, "dfs").report.steps == 2 * static_cast<int64_t>(holey.size()) - 2);
}

TEST_CASE("smartdfs honors its simple-polygon bound and never beats C") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        GridPolygon p = genRandomSimple(20 + static_cast<int>(seed) * 3, seed);
        RunOutcome out = runOn(p, "smartdfs");
        const BoundCheck& b = boundNamed(out.report, "C+E/2-3");
        CHECK(b.applies);
        CHECK(b.satisfied);
        CHECK(out.report.steps >= static_cast<int64_t>(p.size()));
    }
}

TEST_CASE("smartdfs is never slower than dfs on simple polygons") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        GridPolygon p = genRandomSimple(30 + static_cast<int>(seed), seed * 7 + 1);
        CHECK(runOn(p, "smartdfs").report.steps <= runOn(p, "dfs").report.steps);
    }
}

TEST_CASE("smartdfs takes the short way home instead of retracing") {
    // Around a ring, dfs backtracks the whole way; smartdfs closes the
    // loop through the start's neighbor.
    GridPolygon p = GridPolygon::parse(
        "S....\n"
        ".###.\n"
        ".....\n");
    CHECK(runOn(p, "smartdfs").report.steps < runOn(p, "dfs").report.steps);
}

TEST_CASE("cellexplore honors both of its bounds, with or without holes") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        GridPolygon p = seed % 2 == 0 ? genRandomSimple(40 + static_cast<int>(seed), seed)
                                      : genRandomHoley(40 + static_cast<int>(seed),
                                                       1 + static_cast<int>(seed % 3), seed);
        RunOutcome out = runOn(p, "cellexplore");
        CHECK(boundNamed(out.report, "C+E/2+H+2L-2").satisfied);
        CHECK(boundNamed(out.report, "C+E/2+3H+Wcw-2").satisfied);
    }
}

TEST_CASE("the shortcut variant covers and closes but skips the full chain walk") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        GridPolygon p = genRandomHoley(60, 2, seed * 13 + 5);
        RunOutcome plain = runOn(p, "cellexplore");
        RunOutcome sp = runOn(p, "cellexplore-sp");
        CHECK(sp.report.covered);
        CHECK(sp.report.closed);
    }

    // An instance where the shortcut is strictly cheaper: the way back home
    // crosses already-sensed ground that the chain walk would detour around.
    GridPolygon p = genRandomHoley(40, 1, 356);
    RunOutcome plain = runOn(p, "cellexplore");
    RunOutcome sp = runOn(p, "cellexplore-sp");
    CHECK(plain.report.steps == 52);
    CHECK(sp.report.steps == 48);
}

TEST_CASE("cellexplore logs reservations and division cells consistently") {
    GridPolygon p = genRandomHoley(50, 2, 41);
    CellExploreLog log;
    ConcreteEnvironment env(p);
    auto s = makeCellExplore(false, &log);
    ExplorationTrace t = runStrategy(env, *s);
    CHECK(!log.reservedBy.empty());
    CellSet visited(t.positions.begin(), t.positions.end());
    for (const auto& [cell, by] : log.reservedBy) {
        // reservations come from a visited cell and stay inside its ring
        CHECK(visited.count(by));
        CHECK(touching(cell, by));
    }
    for (const Cell& d : log.divisionCells) CHECK(visited.count(d));
}

TEST_CASE("transcribed tight polygons are walked with zero slack") {
    struct Row {
        const char* file;
        int64_t steps;
    };
    for (Row row : {Row{"cellexpltight.poly", 54}, Row{"cellexplsptight.poly", 124},
                    Row{"wcwexa1.poly", 284}}) {
        GridPolygon p = loadCorpus(row.file);
        RunOutcome out = runOn(p, "cellexplore");
        CHECK(out.report.steps == row.steps);
        CHECK(boundNamed(out.report, "C+E/2+3H+Wcw-2").slack == 0);
    }
    // the shortest-path variant cannot shorten its namesake polygon
    GridPolygon p = loadCorpus("cellexplsptight.poly");
    CHECK(runOn(p, "cellexplore-sp").report.steps == 124);
}

TEST_CASE("strategy names round-trip through the factory") {
    for (const std::string& name : strategyNames()) {
        auto s = makeStrategy(name);
        CHECK(name == s->name());
    }
    CHECK_THROWS_AS(makeStrategy("bogus"), GridError);
}
