#include "grid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace gridrover {

std::vector<Cell> ringNeighbors(const Cell& c) {
    return {
        {c.x, c.y - 1},     // N
        {c.x + 1, c.y - 1},  // NE
        {c.x + 1, c.y},     // E
        {c.x + 1, c.y + 1},  // SE
        {c.x, c.y + 1},     // S
        {c.x - 1, c.y + 1},  // SW
        {c.x - 1, c.y},     // W
        {c.x - 1, c.y - 1},  // NW
    };
}

namespace {

bool isConnected4(const std::vector<Cell>& cells, const CellSet& set) {
    if (cells.empty()) return false;
    CellSet seen;
    std::deque<Cell> queue{cells.front()};
    seen.insert(cells.front());
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (Dir d : kDirOrder) {
            Cell n = c.step(d);
            if (set.count(n) && seen.insert(n).second) queue.push_back(n);
        }
    }
    return seen.size() == cells.size();
}

// 8-connected components of blocked cells inside the expanded bounding box;
// the component that contains the frame is the exterior.
std::vector<std::vector<Cell>> blockedComponents(const GridPolygon& p, bool dropExterior) {
    int x0 = p.minX() - 1, x1 = p.maxX() + 1;
    int y0 = p.minY() - 1, y1 = p.maxY() + 1;
    CellSet seen;
    std::vector<std::vector<Cell>> result;
    auto blocked = [&](const Cell& c) { return !p.contains(c); };
    auto inBox = [&](const Cell& c) { return c.x >= x0 && c.x <= x1 && c.y >= y0 && c.y <= y1; };

    auto flood = [&](const Cell& seed) {
        std::vector<Cell> comp;
        std::deque<Cell> queue{seed};
        seen.insert(seed);
        bool touchesFrame = false;
        while (!queue.empty()) {
            Cell c = queue.front();
            queue.pop_front();
            comp.push_back(c);
            if (c.x == x0 || c.x == x1 || c.y == y0 || c.y == y1) touchesFrame = true;
            for (const Cell& n : ringNeighbors(c)) {
                if (inBox(n) && blocked(n) && !seen.count(n)) {
                    seen.insert(n);
                    queue.push_back(n);
                }
            }
        }
        if (!(dropExterior && touchesFrame)) {
            std::sort(comp.begin(), comp.end());
            result.push_back(std::move(comp));
        }
    };

    flood({x0, y0});  // exterior first
    for (int y = y0; y <= y1; ++y)
        for (int x = x0; x <= x1; ++x) {
            Cell c{x, y};
            if (blocked(c) && !seen.count(c)) flood(c);
        }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return result;
}

}  // namespace

GridPolygon::GridPolygon(std::vector<Cell> cells, Cell start) : start_(start) {
    if (cells.empty()) throw GridError(Error::BadArgument, "polygon has no free cells");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    cells_ = std::move(cells);
    set_.insert(cells_.begin(), cells_.end());
    if (!set_.count(start_))
        throw GridError(Error::BadArgument, "start cell is not a free cell");

    minX_ = minY_ = std::numeric_limits<int>::max();
    maxX_ = maxY_ = std::numeric_limits<int>::min();
    for (const Cell& c : cells_) {
        minX_ = std::min(minX_, c.x);
        maxX_ = std::max(maxX_, c.x);
        minY_ = std::min(minY_, c.y);
        maxY_ = std::max(maxY_, c.y);
    }

    if (!isConnected4(cells_, set_))
        throw GridError(Error::DisconnectedFreeCells, "free cells are not 4-connected");

    // The start must lean on the outer wall: a blocked 4-neighbor that is
    // not part of a hole.
    auto holes = holeComponents(*this);
    CellSet holeCells;
    for (const auto& comp : holes) holeCells.insert(comp.begin(), comp.end());
    bool atOuterWall = false;
    for (Dir d : kDirOrder) {
        Cell n = start_.step(d);
        if (!contains(n) && !holeCells.count(n)) atOuterWall = true;
    }
    if (!atOuterWall)
        throw GridError(Error::StartNotAtOuterWall,
                        "start cell has no blocked 4-neighbor on the outer boundary");
}

GridPolygon GridPolygon::parse(std::string_view doc) {
    std::vector<Cell> cells;
    std::optional<Cell> start;
    int x = 0, y = 0;
    for (char ch : doc) {
        switch (ch) {
            case '\n':
                ++y;
                x = 0;
                continue;
            case '#': break;
            case '.': cells.push_back({x, y}); break;
            case 'S':
                if (start)
                    throw GridError(Error::MultipleStarts, "more than one start cell");
                start = Cell{x, y};
                cells.push_back({x, y});
                break;
            default:
                throw GridError(Error::IllegalCharacter,
                                std::string("illegal character '") + ch + "' in polygon document");
        }
        ++x;
    }
    if (!start) throw GridError(Error::NoStart, "no start cell in polygon document");
    return GridPolygon(std::move(cells), *start);
}

std::string GridPolygon::serialize() const {
    std::string out;
    out.reserve(static_cast<size_t>(maxY_ - minY_ + 1) * static_cast<size_t>(maxX_ - minX_ + 2));
    for (int y = minY_; y <= maxY_; ++y) {
        for (int x = minX_; x <= maxX_; ++x) {
            Cell c{x, y};
            out += !contains(c) ? '#' : (c == start_ ? 'S' : '.');
        }
        out += '\n';
    }
    return out;
}

GridPolygon GridPolygon::normalized() const { return translated(-minX_, -minY_); }

GridPolygon GridPolygon::translated(int dx, int dy) const {
    std::vector<Cell> moved;
    moved.reserve(cells_.size());
    for (const Cell& c : cells_) moved.push_back({c.x + dx, c.y + dy});
    return GridPolygon(std::move(moved), {start_.x + dx, start_.y + dy});
}

TopologyStats topologyStats(const GridPolygon& p) {
    TopologyStats st;
    st.cellCount = static_cast<int64_t>(p.size());
    for (const Cell& c : p.cells())
        for (Dir d : kDirOrder)
            if (!p.contains(c.step(d))) ++st.boundaryEdges;
    st.holes = static_cast<int64_t>(holeComponents(p).size());
    return st;
}

std::vector<std::vector<Cell>> holeComponents(const GridPolygon& p) {
    return blockedComponents(p, /*dropExterior=*/true);
}

Layering computeLayers(const CellSet& cells) {
    Layering layering;
    CellSet current = cells;
    int layer = 0;
    while (!current.empty()) {
        ++layer;
        std::vector<Cell> boundary;
        for (const Cell& c : current) {
            bool onBoundary = false;
            for (const Cell& n : ringNeighbors(c))
                if (!current.count(n)) { onBoundary = true; break; }
            if (onBoundary) boundary.push_back(c);
        }
        for (const Cell& c : boundary) {
            layering.layerOf[c] = layer;
            current.erase(c);
        }
    }
    layering.maxLayer = layer;
    return layering;
}

Layering computeLayers(const GridPolygon& p) {
    CellSet set(p.cells().begin(), p.cells().end());
    return computeLayers(set);
}

std::vector<Cell> offsetCells(const GridPolygon& p, int l) {
    if (l < 1) throw GridError(Error::BadArgument, "offset depth must be positive");
    Layering layering = computeLayers(p);
    std::vector<Cell> out;
    for (const Cell& c : p.cells())
        if (layering.layerOf.at(c) > l) out.push_back(c);
    return out;
}

std::vector<Cell> narrowPassageCells(const GridPolygon& p) {
    Layering base = computeLayers(p);
    CellSet all(p.cells().begin(), p.cells().end());
    std::vector<Cell> out;
    for (const Cell& removed : p.cells()) {
        // Narrow passages are width-1/2 corridors; their cells all sit in the
        // first layer. Deeper cells (such as the center of a 3x3 block) can
        // also be removed without disturbing any layer, but they are not part
        // of a corridor.
        if (base.layerOf.at(removed) != 1) continue;
        CellSet rest = all;
        rest.erase(removed);
        Layering trimmed = computeLayers(rest);
        bool unchanged = true;
        for (const Cell& c : p.cells()) {
            if (c == removed) continue;
            if (trimmed.layerOf.at(c) != base.layerOf.at(c)) { unchanged = false; break; }
        }
        if (unchanged) out.push_back(removed);
    }
    return out;
}

CellPath shortestKnownPath(const CellSet& known, const Cell& a, const Cell& b) {
    if (!known.count(a) || !known.count(b))
        throw GridError(Error::BadArgument, "path endpoints must be known cells");
    if (a == b) return CellPath{{a}};
    CellMap<Cell> parent;
    std::deque<Cell> queue{a};
    parent[a] = a;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop_front();
        for (Dir d : kDirOrder) {
            Cell n = c.step(d);
            if (!known.count(n) || parent.count(n)) continue;
            parent[n] = c;
            if (n == b) {
                std::vector<Cell> path{n};
                while (!(path.back() == a)) path.push_back(parent.at(path.back()));
                std::reverse(path.begin(), path.end());
                return CellPath{std::move(path)};
            }
            queue.push_back(n);
        }
    }
    throw GridError(Error::Unreachable, "no path between cells inside the known region");
}

std::vector<std::vector<Cell>> connectedComponents4(const CellSet& cells) {
    CellSet seen;
    std::vector<std::vector<Cell>> comps;
    std::vector<Cell> ordered(cells.begin(), cells.end());
    std::sort(ordered.begin(), ordered.end());
    for (const Cell& seed : ordered) {
        if (seen.count(seed)) continue;
        std::vector<Cell> comp;
        std::deque<Cell> queue{seed};
        seen.insert(seed);
        while (!queue.empty()) {
            Cell c = queue.front();
            queue.pop_front();
            comp.push_back(c);
            for (Dir d : kDirOrder) {
                Cell n = c.step(d);
                if (cells.count(n) && seen.insert(n).second) queue.push_back(n);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace gridrover
