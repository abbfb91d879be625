#pragma once

#include "grid.hpp"

namespace gridrover {

// Lattice corner; corner (x, y) is the north-west corner of cell (x, y).
struct Corner {
    int x = 0;
    int y = 0;
    friend bool operator==(const Corner& a, const Corner& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Corner& a, const Corner& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    }
};

struct BoundaryVertex {
    Corner corner;
    bool reflex = false;  // interior angle 270 degrees seen from free space
};

struct BoundaryLoop {
    std::vector<Corner> corners;          // closed loop, first corner not repeated
    std::vector<BoundaryVertex> vertices; // direction-change corners in traversal order
    bool outer = false;                   // outer boundary (clockwise) vs hole (counterclockwise)
};

// One loop per boundary component; the outer boundary is traced clockwise,
// hole boundaries counterclockwise, so the free region is always to the
// right of the traversal. The outer loop comes first; every loop is rotated
// to begin at the vertex nearest the start cell.
std::vector<BoundaryLoop> traceBoundaries(const GridPolygon& p);

// Width of the maximal free square grown diagonally from the reflex vertex
// along its angular bisector.
int growSquare(const GridPolygon& p, const Corner& reflexCorner);

struct ReflexVertexRecord {
    Corner vertex;
    size_t traversalIndex = 0;  // 1-based, global over all loops
    int squareWidth = 0;        // q
    int oddContribution = 0;    // q' = q-1 for odd q, else 0
};

struct SinuosityReport {
    std::vector<ReflexVertexRecord> records;
    int startContributionCw = 0;   // q'_{s,cw}
    int startContributionCcw = 0;  // q'_{s,ccw}
    int64_t windingCw = 0;         // W_cw
    int64_t windingCcw = 0;        // W_ccw
};

SinuosityReport computeSinuosity(const GridPolygon& p);

}  // namespace gridrover
