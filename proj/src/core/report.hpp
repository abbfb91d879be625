#pragma once

#include <optional>

#include "oracle.hpp"
#include "sim.hpp"

namespace gridrover {

struct PolygonStats {
    int64_t cellCount = 0;      // C
    int64_t boundaryEdges = 0;  // E
    int64_t holes = 0;          // H
    int64_t windingCw = 0;      // W_cw
    int64_t windingCcw = 0;     // W_ccw
};

PolygonStats polygonStats(const GridPolygon& p);

struct StrategyRun {
    std::string strategy;
    TraceReport report;
    std::optional<int64_t> optimalSteps;
    std::optional<Ratio> ratio;
};

// The bound a strategy is accountable to in the CSV summary.
std::string primaryBoundName(const std::string& strategy);

std::string runReportJson(const std::string& id, const GridPolygon& p,
                          const std::vector<StrategyRun>& runs);
std::string csvHeader();
std::string csvRows(const std::string& id, const GridPolygon& p,
                    const std::vector<StrategyRun>& runs);

std::string renderAscii(const GridPolygon& p, const ExplorationTrace& trace);
// One rect per free cell plus a single tour polyline.
std::string renderSvg(const GridPolygon& p, const ExplorationTrace& trace);

}  // namespace gridrover
