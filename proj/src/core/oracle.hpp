#pragma once

#include "grid.hpp"

namespace gridrover {

// Exact rational, kept normalized with a positive denominator.
struct Ratio {
    int64_t num = 0;
    int64_t den = 1;

    Ratio() = default;
    Ratio(int64_t n, int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio& a, const Ratio& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return a.num * b.den < b.num * a.den;
    }
};

struct OracleResult {
    int64_t steps = 0;        // S_opt
    std::vector<Cell> tour;   // closed: first == last == start
};

// Cell-count cap for the exhaustive search; GRIDROVER_ORACLE_LIMIT
// overrides the default of 16.
size_t oracleLimit();

// Shortest closed tour through every free cell, by breadth-first search
// over (position, covered-set) states. Throws InstanceTooLarge beyond the
// oracle limit.
OracleResult optimalTour(const GridPolygon& p);

// Whether a closed tour of length exactly C exists. Capped at 20 cells.
bool hamiltonianCycleExists(const GridPolygon& p);

Ratio competitiveRatio(int64_t steps, int64_t optimalSteps);

}  // namespace gridrover
