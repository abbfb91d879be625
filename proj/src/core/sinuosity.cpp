#include "sinuosity.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace gridrover {

namespace {

struct CornerHash {
    size_t operator()(const Corner& c) const {
        return CellHash{}(Cell{c.x, c.y});
    }
};

Corner stepCorner(const Corner& c, Dir d) {
    switch (d) {
        case Dir::N: return {c.x, c.y - 1};
        case Dir::E: return {c.x + 1, c.y};
        case Dir::S: return {c.x, c.y + 1};
        default: return {c.x - 1, c.y};
    }
}

int64_t shoelace(const std::vector<Corner>& loop) {
    int64_t acc = 0;
    for (size_t i = 0; i < loop.size(); ++i) {
        const Corner& a = loop[i];
        const Corner& b = loop[(i + 1) % loop.size()];
        acc += static_cast<int64_t>(a.x) * b.y - static_cast<int64_t>(b.x) * a.y;
    }
    return acc;
}

// Squared distance (times 4) from a corner to the center of the start cell.
int64_t cornerStartDist(const Corner& c, const Cell& s) {
    int64_t dx = 2 * static_cast<int64_t>(c.x - s.x) - 1;
    int64_t dy = 2 * static_cast<int64_t>(c.y - s.y) - 1;
    return dx * dx + dy * dy;
}

Dir startWallDirection(const GridPolygon& p) {
    // Same tie-break as the exploration strategies: facing direction d with
    // reverse(d) pointing at a blocked cell, ties broken N, E, S, W.
    for (Dir d : kDirOrder)
        if (!p.contains(p.start().step(reverse(d)))) return reverse(d);
    throw GridError(Error::BadArgument, "start cell has no blocked 4-neighbor");
}

int growStartSquare(const GridPolygon& p, Dir tangent) {
    Dir away = reverse(startWallDirection(p));
    const Cell s = p.start();
    int q = 0;
    while (true) {
        int k = q + 1;
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k && ok; ++b) {
                Cell c = s;
                for (int i = 0; i < a; ++i) c = c.step(tangent);
                for (int i = 0; i < b; ++i) c = c.step(away);
                ok = p.contains(c);
            }
        if (!ok) break;
        q = k;
    }
    return q;
}

int oddContribution(int q) { return (q % 2 == 1) ? q - 1 : 0; }

}  // namespace

std::vector<BoundaryLoop> traceBoundaries(const GridPolygon& p) {
    // Directed boundary edges keep the free region on the right:
    // outer boundary runs clockwise, hole boundaries counterclockwise.
    std::unordered_map<Corner, std::array<bool, 4>, CornerHash> outgoing;
    auto addEdge = [&](const Corner& from, Dir d) {
        outgoing.try_emplace(from, std::array<bool, 4>{}).first->second[static_cast<int>(d)] = true;
    };
    for (const Cell& c : p.cells()) {
        if (!p.contains(c.step(Dir::N))) addEdge({c.x, c.y}, Dir::E);
        if (!p.contains(c.step(Dir::S))) addEdge({c.x + 1, c.y + 1}, Dir::W);
        if (!p.contains(c.step(Dir::W))) addEdge({c.x, c.y + 1}, Dir::N);
        if (!p.contains(c.step(Dir::E))) addEdge({c.x + 1, c.y}, Dir::S);
    }

    std::vector<Corner> starts;
    for (const auto& [corner, dirs] : outgoing) starts.push_back(corner);
    std::sort(starts.begin(), starts.end());

    std::vector<BoundaryLoop> loops;
    for (const Corner& seed : starts) {
        for (Dir seedDir : kDirOrder) {
            if (!outgoing.at(seed)[static_cast<int>(seedDir)]) continue;
            BoundaryLoop loop;
            Corner cur = seed;
            Dir dir = seedDir;
            while (true) {
                outgoing.at(cur)[static_cast<int>(dir)] = false;
                loop.corners.push_back(cur);
                cur = stepCorner(cur, dir);
                // Prefer the rightmost turn; at pinch corners this keeps the
                // trace tight around the same free component.
                auto it = outgoing.find(cur);
                bool found = false;
                for (Dir cand : {cw(dir), dir, ccw(dir)}) {
                    if (it != outgoing.end() && it->second[static_cast<int>(cand)]) {
                        dir = cand;
                        found = true;
                        break;
                    }
                }
                if (!found) break;  // back at the consumed seed edge
            }
            loop.outer = shoelace(loop.corners) > 0;
            loops.push_back(std::move(loop));
        }
    }

    // Rotate each loop to begin at the direction-change corner nearest the
    // start cell, then record its vertices in traversal order.
    for (BoundaryLoop& loop : loops) {
        const auto& cs = loop.corners;
        size_t n = cs.size();
        auto dirAt = [&](size_t i) {
            const Corner& a = cs[i];
            const Corner& b = cs[(i + 1) % n];
            if (b.x > a.x) return Dir::E;
            if (b.x < a.x) return Dir::W;
            if (b.y > a.y) return Dir::S;
            return Dir::N;
        };
        std::vector<size_t> vertexIdx;
        for (size_t i = 0; i < n; ++i)
            if (dirAt((i + n - 1) % n) != dirAt(i)) vertexIdx.push_back(i);

        size_t best = vertexIdx.front();
        for (size_t i : vertexIdx)
            if (cornerStartDist(cs[i], p.start()) < cornerStartDist(cs[best], p.start())) best = i;

        std::vector<Corner> rotated(cs.begin() + static_cast<long>(best), cs.end());
        rotated.insert(rotated.end(), cs.begin(), cs.begin() + static_cast<long>(best));
        loop.corners = rotated;

        loop.vertices.clear();
        auto dirAt2 = [&](size_t i) {
            const Corner& a = loop.corners[i];
            const Corner& b = loop.corners[(i + 1) % n];
            if (b.x > a.x) return Dir::E;
            if (b.x < a.x) return Dir::W;
            if (b.y > a.y) return Dir::S;
            return Dir::N;
        };
        for (size_t i = 0; i < n; ++i) {
            Dir in = dirAt2((i + n - 1) % n);
            Dir out = dirAt2(i);
            if (in == out) continue;
            BoundaryVertex v;
            v.corner = loop.corners[i];
            v.reflex = (out == ccw(in));
            loop.vertices.push_back(v);
        }
    }

    std::stable_sort(loops.begin(), loops.end(),
                     [](const BoundaryLoop& a, const BoundaryLoop& b) {
                         return a.outer && !b.outer;
                     });
    return loops;
}

int growSquare(const GridPolygon& p, const Corner& corner) {
    // Exactly one of the four cells meeting at a reflex vertex is blocked;
    // the square grows diagonally away from it.
    std::array<Cell, 4> around = {Cell{corner.x - 1, corner.y - 1}, Cell{corner.x, corner.y - 1},
                                  Cell{corner.x - 1, corner.y}, Cell{corner.x, corner.y}};
    int blockedIdx = -1;
    int blockedCount = 0;
    for (int i = 0; i < 4; ++i)
        if (!p.contains(around[i])) { blockedIdx = i; ++blockedCount; }
    if (blockedCount != 1)
        throw GridError(Error::BadArgument, "corner is not a reflex vertex");

    Cell blocked = around[blockedIdx];
    Cell anchor = around[3 - blockedIdx];  // diagonally opposite cell
    int dx = anchor.x - blocked.x;
    int dy = anchor.y - blocked.y;
    int q = 0;
    while (true) {
        int k = q + 1;
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k && ok; ++b)
                ok = p.contains({anchor.x + a * dx, anchor.y + b * dy});
        if (!ok) break;
        q = k;
    }
    return q;
}

SinuosityReport computeSinuosity(const GridPolygon& p) {
    SinuosityReport report;
    auto loops = traceBoundaries(p);

    size_t globalIndex = 0;
    for (const BoundaryLoop& loop : loops) {
        std::vector<const BoundaryVertex*> reflexes;
        for (const BoundaryVertex& v : loop.vertices)
            if (v.reflex) reflexes.push_back(&v);
        size_t loopIndex = 0;
        for (const BoundaryVertex* v : reflexes) {
            ++loopIndex;
            ++globalIndex;
            ReflexVertexRecord rec;
            rec.vertex = v->corner;
            rec.traversalIndex = globalIndex;
            rec.squareWidth = growSquare(p, v->corner);
            rec.oddContribution = oddContribution(rec.squareWidth);
            if (loopIndex % 2 == 1)
                report.windingCw += rec.oddContribution;
            else
                report.windingCcw += rec.oddContribution;
            report.records.push_back(rec);
        }
    }

    Dir wall = startWallDirection(p);
    report.startContributionCw = oddContribution(growStartSquare(p, cw(wall)));
    report.startContributionCcw = oddContribution(growStartSquare(p, ccw(wall)));
    report.windingCw += report.startContributionCcw;
    report.windingCcw += report.startContributionCw;
    return report;
}

}  // namespace gridrover
