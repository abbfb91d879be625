#include "oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace gridrover {

Ratio::Ratio(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw GridError(Error::BadArgument, "zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

size_t oracleLimit() {
    if (const char* env = std::getenv("GRIDROVER_ORACLE_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<size_t>(v);
    }
    return 16;
}

namespace {

constexpr size_t kHardCap = 20;  // keeps the state table in tens of megabytes

struct Indexed {
    std::vector<Cell> cells;                  // sorted
    std::vector<std::array<int, 4>> nbr;      // per cell, per Dir; -1 if blocked
    int startIdx = 0;
};

Indexed indexPolygon(const GridPolygon& p) {
    Indexed ix;
    ix.cells = p.cells();
    CellMap<int> idx;
    for (size_t i = 0; i < ix.cells.size(); ++i) idx[ix.cells[i]] = static_cast<int>(i);
    ix.nbr.resize(ix.cells.size());
    for (size_t i = 0; i < ix.cells.size(); ++i)
        for (Dir d : kDirOrder) {
            auto it = idx.find(ix.cells[i].step(d));
            ix.nbr[i][static_cast<int>(d)] = it == idx.end() ? -1 : it->second;
        }
    ix.startIdx = idx.at(p.start());
    return ix;
}

}  // namespace

OracleResult optimalTour(const GridPolygon& p) {
    const size_t C = p.size();
    if (C > oracleLimit() || C > kHardCap)
        throw GridError(Error::InstanceTooLarge,
                        "polygon exceeds the exhaustive-search cell limit");

    Indexed ix = indexPolygon(p);
    const uint32_t full = (C == 32 ? ~0u : (1u << C) - 1);
    const uint32_t startBit = 1u << ix.startIdx;
    auto stateId = [&](int cell, uint32_t mask) -> size_t {
        return static_cast<size_t>(mask) * C + static_cast<size_t>(cell);
    };

    constexpr uint16_t kUnset = 0xFFFF;
    std::vector<uint16_t> dist((full + 1ull) * C, kUnset);
    std::deque<uint32_t> queue;
    auto push = [&](int cell, uint32_t mask, uint16_t d) {
        size_t id = stateId(cell, mask);
        if (dist[id] != kUnset) return;
        dist[id] = d;
        queue.push_back(static_cast<uint32_t>(id));
    };

    push(ix.startIdx, startBit, 0);
    const size_t targetId = stateId(ix.startIdx, full);
    while (!queue.empty() && dist[targetId] == kUnset) {
        uint32_t id = queue.front();
        queue.pop_front();
        int cell = static_cast<int>(id % C);
        uint32_t mask = id / static_cast<uint32_t>(C);
        uint16_t d = dist[id];
        for (Dir dir : kDirOrder) {
            int n = ix.nbr[cell][static_cast<int>(dir)];
            if (n >= 0) push(n, mask | (1u << n), static_cast<uint16_t>(d + 1));
        }
    }
    if (dist[targetId] == kUnset)
        throw GridError(Error::Unreachable, "no covering tour exists");  // cannot happen: connected

    OracleResult result;
    result.steps = dist[targetId];

    // Walk the distance field backwards from the goal state.
    int cell = ix.startIdx;
    uint32_t mask = full;
    std::vector<Cell> rev{ix.cells[static_cast<size_t>(cell)]};
    for (uint16_t d = dist[targetId]; d > 0; --d) {
        bool found = false;
        for (Dir dir : kDirOrder) {
            int j = ix.nbr[cell][static_cast<int>(dir)];
            if (j < 0) continue;
            for (uint32_t prevMask : {mask, mask & ~(1u << cell)}) {
                if (!(prevMask & (1u << j))) continue;
                if ((prevMask | (1u << cell)) != mask) continue;
                if (dist[stateId(j, prevMask)] == static_cast<uint16_t>(d - 1)) {
                    cell = j;
                    mask = prevMask;
                    rev.push_back(ix.cells[static_cast<size_t>(cell)]);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found)
            throw GridError(Error::BadArgument, "tour reconstruction failed");
    }
    std::reverse(rev.begin(), rev.end());
    result.tour = std::move(rev);
    return result;
}

namespace {

bool hamiltonianSearch(const Indexed& ix, std::vector<bool>& visited, int cur, size_t count) {
    const size_t C = ix.cells.size();
    if (count == C) {
        for (Dir d : kDirOrder)
            if (ix.nbr[cur][static_cast<int>(d)] == ix.startIdx) return true;
        return false;
    }

    // Every unvisited vertex still needs two usable connections; one with
    // none left is stranded. Also require the unvisited region to stay
    // connected through the current vertex.
    for (size_t v = 0; v < C; ++v) {
        if (visited[v]) continue;
        int open = 0;
        for (Dir d : kDirOrder) {
            int n = ix.nbr[v][static_cast<int>(d)];
            if (n >= 0 && (!visited[n] || n == cur)) ++open;
        }
        if (open == 0) return false;
    }
    {
        std::vector<bool> seen(C, false);
        std::deque<int> queue{cur};
        seen[static_cast<size_t>(cur)] = true;
        size_t reached = 0;
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            for (Dir d : kDirOrder) {
                int n = ix.nbr[c][static_cast<int>(d)];
                if (n >= 0 && !visited[n] && !seen[static_cast<size_t>(n)]) {
                    seen[static_cast<size_t>(n)] = true;
                    ++reached;
                    queue.push_back(n);
                }
            }
        }
        size_t unvisited = C - count;
        if (reached != unvisited) return false;
    }

    for (Dir d : kDirOrder) {
        int n = ix.nbr[cur][static_cast<int>(d)];
        if (n < 0 || visited[n]) continue;
        visited[n] = true;
        if (hamiltonianSearch(ix, visited, n, count + 1)) return true;
        visited[n] = false;
    }
    return false;
}

}  // namespace

bool hamiltonianCycleExists(const GridPolygon& p) {
    const size_t C = p.size();
    if (C > kHardCap)
        throw GridError(Error::InstanceTooLarge,
                        "polygon exceeds the cycle-search cell limit");
    if (C < 4) return false;
    if (C % 2 == 1) return false;  // the grid graph is bipartite

    Indexed ix = indexPolygon(p);
    std::vector<bool> visited(C, false);
    visited[static_cast<size_t>(ix.startIdx)] = true;
    return hamiltonianSearch(ix, visited, ix.startIdx, 1);
}

Ratio competitiveRatio(int64_t steps, int64_t optimalSteps) {
    if (optimalSteps == 0) {
        if (steps == 0) return Ratio(1, 1);
        throw GridError(Error::BadArgument, "zero-length optimum with a positive tour");
    }
    return Ratio(steps, optimalSteps);
}

}  // namespace gridrover
