#pragma once

#include <memory>

#include "sim.hpp"

namespace gridrover {

// Diagnostics recorded by the reservation-based strategy: which forward
// cell reserved each cell, and where backward walks switched back to
// forward exploration.
struct CellExploreLog {
    CellMap<Cell> reservedBy;
    std::vector<Cell> divisionCells;
};

std::unique_ptr<Strategy> makeDfs();
std::unique_ptr<Strategy> makeSmartDfs();
std::unique_ptr<Strategy> makeCellExplore(bool shortcuts, CellExploreLog* log = nullptr);

// Names accepted by makeStrategy: dfs, smartdfs, cellexplore, cellexplore-sp.
std::vector<std::string> strategyNames();
std::unique_ptr<Strategy> makeStrategy(const std::string& name);

}  // namespace gridrover
