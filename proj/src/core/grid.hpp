#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace gridrover {

// Screen-style coordinates: x grows east, y grows south. The direction
// cycle N -> E -> S -> W is clockwise.
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

constexpr Dir cw(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 1) % 4); }
constexpr Dir ccw(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 4); }
constexpr Dir reverse(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 2) % 4); }

constexpr const char* dirName(Dir d) {
    constexpr const char* names[4] = {"N", "E", "S", "W"};
    return names[static_cast<int>(d)];
}

struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }

    Cell step(Dir d) const {
        switch (d) {
            case Dir::N: return {x, y - 1};
            case Dir::E: return {x + 1, y};
            case Dir::S: return {x, y + 1};
            default: return {x - 1, y};
        }
    }
};

// All four axis directions in the fixed tie-break order N, E, S, W.
constexpr Dir kDirOrder[4] = {Dir::N, Dir::E, Dir::S, Dir::W};

inline bool adjacent(const Cell& a, const Cell& b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y) == 1;
}
inline bool touching(const Cell& a, const Cell& b) {
    return !(a == b) && std::abs(a.x - b.x) <= 1 && std::abs(a.y - b.y) <= 1;
}

// The 8 cells around c, in clockwise ring order starting north.
std::vector<Cell> ringNeighbors(const Cell& c);

struct CellHash {
    size_t operator()(const Cell& c) const {
        uint64_t v = (static_cast<uint64_t>(static_cast<uint32_t>(c.x)) << 32) |
                     static_cast<uint32_t>(c.y);
        v *= 0x9e3779b97f4a7c15ull;
        return static_cast<size_t>(v ^ (v >> 32));
    }
};

using CellSet = std::unordered_set<Cell, CellHash>;
template <typename T>
using CellMap = std::unordered_map<Cell, T, CellHash>;

enum class Error : int {
    None = 0,
    MultipleStarts,
    NoStart,
    DisconnectedFreeCells,
    StartNotAtOuterWall,
    IllegalCharacter,
    Unreachable,
    IllegalMove,
    IncompleteCoverage,
    NotClosedTour,
    StepBudgetExceeded,
    InstanceTooLarge,
    TargetInfeasible,
    BadArgument,
};

class GridError : public std::runtime_error {
  public:
    GridError(Error code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Error code() const { return code_; }

  private:
    Error code_;
};

// A 4-connected set of free cells plus the distinguished start cell.
// Everything not in the set is blocked, including the entire exterior.
class GridPolygon {
  public:
    GridPolygon(std::vector<Cell> cells, Cell start);

    static GridPolygon parse(std::string_view doc);
    std::string serialize() const;

    bool contains(const Cell& c) const { return set_.count(c) != 0; }
    const std::vector<Cell>& cells() const { return cells_; }  // sorted row-major
    const Cell& start() const { return start_; }
    size_t size() const { return cells_.size(); }

    // Translates so the bounding box corner is at the origin.
    GridPolygon normalized() const;
    GridPolygon translated(int dx, int dy) const;

    int minX() const { return minX_; }
    int minY() const { return minY_; }
    int maxX() const { return maxX_; }
    int maxY() const { return maxY_; }

  private:
    std::vector<Cell> cells_;
    CellSet set_;
    Cell start_;
    int minX_, minY_, maxX_, maxY_;
};

struct TopologyStats {
    int64_t cellCount = 0;      // C
    int64_t boundaryEdges = 0;  // E
    int64_t holes = 0;          // H
};

TopologyStats topologyStats(const GridPolygon& p);

// Blocked 8-connected components completely surrounded by free cells.
// Each component is returned as a sorted cell list.
std::vector<std::vector<Cell>> holeComponents(const GridPolygon& p);

struct Layering {
    CellMap<int> layerOf;
    int maxLayer = 0;
};

// Iterated peeling: layer 1 holds every cell that touches (8-adjacency) a
// cell outside the current set; peeling the layer and repeating numbers the
// rest. Disconnected remainders are peeled independently by construction.
Layering computeLayers(const GridPolygon& p);
Layering computeLayers(const CellSet& cells);

std::vector<Cell> offsetCells(const GridPolygon& p, int l);

// Cells whose removal leaves every other cell's layer unchanged
// (corridors of width 1 or 2).
std::vector<Cell> narrowPassageCells(const GridPolygon& p);

struct CellPath {
    std::vector<Cell> cells;
    size_t steps() const { return cells.empty() ? 0 : cells.size() - 1; }
};

// BFS over `known` with neighbor expansion order N, E, S, W; the expansion
// order makes the result deterministic among equal-length paths.
CellPath shortestKnownPath(const CellSet& known, const Cell& a, const Cell& b);

// Splits a cell set into 4-connected components (each sorted).
std::vector<std::vector<Cell>> connectedComponents4(const CellSet& cells);

}  // namespace gridrover
