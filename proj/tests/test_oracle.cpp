#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <deque>
#include <map>

#include "gen.hpp"
#include "oracle.hpp"

using namespace gridrover;

namespace {

// Independent reference oracle: plain breadth-first search over
// (position, visited-set) states with no pruning beyond the seen-set.
// Deliberately written with different data structures than the library.
int64_t referenceOptimal(const GridPolygon& p) {
    const auto& cells = p.cells();
    REQUIRE(cells.size() <= 16);
    std::map<Cell, int> index;
    for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = static_cast<int>(i);
    const uint32_t full = (1u << cells.size()) - 1;
    int startIdx = index.at(p.start());

    struct State {
        int pos;
        uint32_t mask;
        int64_t dist;
    };
    std::deque<State> queue{{startIdx, 1u << startIdx, 0}};
    std::map<std::pair<int, uint32_t>, bool> seen;
    seen[{startIdx, 1u << startIdx}] = true;
    while (!queue.empty()) {
        State s = queue.front();
        queue.pop_front();
        if (s.mask == full && s.pos == startIdx) return s.dist;
        for (Dir d : kDirOrder) {
            Cell n = cells[s.pos].step(d);
            auto it = index.find(n);
            if (it == index.end()) continue;
            uint32_t mask = s.mask | (1u << it->second);
            if (seen.emplace(std::make_pair(it->second, mask), true).second)
                queue.push_back({it->second, mask, s.dist + 1});
        }
    }
    REQUIRE(false);
    return -1;
}

}  // namespace

TEST_CASE("known closed shapes have known optimal tours") {
    CHECK(optimalTour(genRectangle(5, 2)).steps == 10);  // Hamiltonian cycle
    CHECK(optimalTour(genRectangle(5, 1)).steps == 8);   // there and back
    CHECK(optimalTour(genRectangle(1, 1)).steps == 0);
    CHECK(optimalTour(genRectangle(3, 3)).steps == 10);  // odd area: one revisit
}

TEST_CASE("the tour returned actually walks the polygon and covers it") {
    GridPolygon p = genRandomSimple(11, 77);
    OracleResult r = optimalTour(p);
    REQUIRE(!r.tour.empty());
    CHECK(r.tour.front() == p.start());
    CHECK(r.tour.back() == p.start());
    CHECK(static_cast<int64_t>(r.tour.size()) - 1 == r.steps);
    CellSet seen;
    for (size_t i = 0; i < r.tour.size(); ++i) {
        CHECK(p.contains(r.tour[i]));
        if (i > 0) CHECK(adjacent(r.tour[i - 1], r.tour[i]));
        seen.insert(r.tour[i]);
    }
    CHECK(seen.size() == p.size());
}

TEST_CASE("optimalTour matches an independent unpruned BFS oracle") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        GridPolygon p = genRandomSimple(6 + static_cast<int>(seed % 7), seed);
        CHECK(optimalTour(p).steps == referenceOptimal(p));
    }
    for (uint64_t seed = 0; seed < 10; ++seed) {
        GridPolygon p = genRandomHoley(12, 1, seed);
        CHECK(optimalTour(p).steps == referenceOptimal(p));
    }
}

TEST_CASE("optimal tours are never shorter than the cell count") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        GridPolygon p = genRandomSimple(10, seed * 3 + 1);
        CHECK(optimalTour(p).steps >= static_cast<int64_t>(p.size()));
    }
}

TEST_CASE("hamiltonian cycle exists exactly when the optimum equals C") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        GridPolygon p = genRandomSimple(8 + static_cast<int>(seed % 5), seed + 100);
        bool ham = hamiltonianCycleExists(p);
        CHECK(ham == (optimalTour(p).steps == static_cast<int64_t>(p.size())));
    }
    CHECK(hamiltonianCycleExists(genRectangle(4, 2)));
    CHECK(!hamiltonianCycleExists(genRectangle(3, 1)));
}

TEST_CASE("the oracle refuses oversized instances, overridable via the environment") {
    CHECK(oracleLimit() == 16);
    CHECK_THROWS_AS(optimalTour(genRectangle(6, 3)), GridError);
    setenv("GRIDROVER_ORACLE_LIMIT", "18", 1);
    CHECK(oracleLimit() == 18);
    CHECK(optimalTour(genRectangle(6, 3)).steps == 18);
    unsetenv("GRIDROVER_ORACLE_LIMIT");
    CHECK(oracleLimit() == 16);
}

TEST_CASE("ratios normalize with positive denominators") {
    Ratio r = competitiveRatio(28, 24);
    CHECK(r.num == 7);
    CHECK(r.den == 6);
    CHECK(competitiveRatio(0, 5) == Ratio(0, 1));
    CHECK(Ratio(4, 6) == Ratio(2, 3));
    CHECK(Ratio(7, 6) < Ratio(4, 3));
}
