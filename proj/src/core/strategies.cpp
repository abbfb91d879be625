#include "strategies.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <optional>

namespace gridrover {

namespace {

// Starting orientation: face along the wall behind the robot, with ties
// broken in the fixed direction order.
Dir initialFacing(const SensorView& view) {
    for (Dir d : kDirOrder)
        if (!view.isFree(reverse(d))) return d;
    throw GridError(Error::BadArgument, "start cell does not touch a wall");
}

Dir dirBetween(const Cell& a, const Cell& b) {
    for (Dir d : kDirOrder)
        if (a.step(d) == b) return d;
    throw GridError(Error::BadArgument, "cells are not adjacent");
}

// Breadth-first distances from a seed over an arbitrary cell set.
CellMap<int> bfsDistances(const CellSet& domain, const Cell& seed) {
    CellMap<int> dist;
    if (!domain.count(seed)) return dist;
    dist[seed] = 0;
    std::vector<Cell> frontier = {seed};
    while (!frontier.empty()) {
        std::vector<Cell> next;
        for (const Cell& c : frontier)
            for (Dir d : kDirOrder) {
                Cell n = c.step(d);
                if (!domain.count(n) || dist.count(n)) continue;
                dist[n] = dist[c] + 1;
                next.push_back(n);
            }
        frontier = std::move(next);
    }
    return dist;
}

class DfsStrategy final : public Strategy {
  public:
    const char* name() const override { return "dfs"; }

    void run(Robot& r) override {
        km_ = {};
        km_.recordVisit(r.pos(), r.sense());
        exploreCell(r, initialFacing(r.sense()));
    }

  private:
    void exploreCell(Robot& r, Dir dir) {
        for (Dir d : {ccw(dir), dir, cw(dir)}) exploreStep(r, d);
    }

    void exploreStep(Robot& r, Dir d) {
        Cell t = r.pos().step(d);
        if (!km_.knownFree(t) || km_.isVisited(t)) return;
        r.move(d);
        km_.recordVisit(r.pos(), r.sense());
        exploreCell(r, d);
        r.move(reverse(d));
    }

    KnownMap km_;
};

class SmartDfsStrategy final : public Strategy {
  public:
    const char* name() const override { return "smartdfs"; }

    void run(Robot& r) override {
        km_ = {};
        start_ = r.pos();
        km_.recordVisit(r.pos(), r.sense());
        exploreCell(r, initialFacing(r.sense()));
        walk(r, shortestKnownPath(km_.visited, r.pos(), start_));
    }

  private:
    void walk(Robot& r, const CellPath& path) {
        for (size_t i = 1; i < path.cells.size(); ++i) {
            r.move(dirBetween(path.cells[i - 1], path.cells[i]));
            km_.recordVisit(r.pos(), r.sense());
        }
    }

    void exploreCell(Robot& r, Dir dir) {
        Cell base = r.pos();
        for (Dir d : stepOrder(base, dir)) {
            Cell t = base.step(d);
            if (!km_.knownFree(t) || km_.isVisited(t)) continue;
            // Dead-end recursions leave the robot elsewhere; return to the
            // pending cell over visited ground instead of retracing.
            if (!(r.pos() == base)) walk(r, shortestKnownPath(km_.visited, r.pos(), base));
            r.move(d);
            km_.recordVisit(r.pos(), r.sense());
            exploreCell(r, d);
        }
    }

    // The unexplored cell behind d is a dead pocket of exactly one cell:
    // every other way into it is already visited or a wall. Picking it up
    // now costs two steps; any later pickup costs at least that plus the
    // trip back.
    bool closedSingleton(const Cell& base, Dir d) const {
        Cell t = base.step(d);
        for (Dir e : kDirOrder) {
            Cell n = t.step(e);
            if (n == base) continue;
            if (!km_.isVisited(n) && !km_.knownBlocked(n)) return false;
        }
        return true;
    }

    std::vector<Dir> stepOrder(const Cell& base, Dir dir) {
        std::vector<Dir> def = {ccw(dir), dir, cw(dir)};
        std::vector<Dir> cands;
        for (Dir d : def) {
            Cell t = base.step(d);
            if (km_.knownFree(t) && !km_.isVisited(t)) cands.push_back(d);
        }
        if (cands.size() >= 2) {
            std::stable_partition(cands.begin(), cands.end(),
                                  [&](Dir d) { return closedSingleton(base, d); });
            if (closedSingleton(base, cands.front())) return cands;
        }
        if (cands.size() < 2) return def;

        std::vector<Cell> ring = ringNeighbors(base);
        std::array<bool, 8> vis{};
        for (int i = 0; i < 8; ++i) vis[i] = km_.isVisited(ring[i]);
        int arcs = 0;
        for (int i = 0; i < 8; ++i)
            if (vis[i] && !vis[(i + 7) % 8]) ++arcs;
        if (arcs <= 1) return def;

        auto gapStart = [&](Dir d) {
            int idx = 2 * static_cast<int>(d);
            for (int k = 1; k < 8; ++k) {
                int j = (idx + 8 - k) % 8;
                if (vis[j]) return j;
            }
            return -1;
        };
        // The candidates must sit in different gaps between visited arcs;
        // otherwise the unexplored region is not actually coming apart here.
        bool distinct = false;
        for (size_t i = 1; i < cands.size(); ++i)
            if (gapStart(cands[i]) != gapStart(cands[0])) distinct = true;
        if (!distinct) return def;

        // The unexplored region is splitting into pieces, and only the last
        // piece explored gets to skip the trip back here. Rank each branch
        // by where the ground it can already see hooks into the visited
        // region: the branch whose known frontier touches visited ground
        // closest to the start is saved for last, so the tour ends next to
        // the cheap way home instead of deep in a pocket.
        constexpr int kInf = INT_MAX / 4;
        CellMap<int> homeDist = bfsDistances(km_.visited, start_);
        auto hook = [&](Dir d) {
            CellSet reach;
            std::vector<Cell> frontier = {base.step(d)};
            reach.insert(base.step(d));
            int best = kInf;
            while (!frontier.empty()) {
                Cell c = frontier.back();
                frontier.pop_back();
                for (Dir e : kDirOrder) {
                    Cell n = c.step(e);
                    if (n == base) continue;
                    if (km_.isVisited(n)) {
                        auto it = homeDist.find(n);
                        if (it != homeDist.end()) best = std::min(best, it->second);
                    } else if (km_.knownFree(n) && !reach.count(n)) {
                        reach.insert(n);
                        frontier.push_back(n);
                    }
                }
            }
            return best;
        };
        // Doors sharing a gap may open into the same piece, so they travel
        // together as one unit; a unit's hook is the best of its doors'.
        std::vector<std::pair<int, std::vector<Dir>>> units;
        for (Dir d : cands) {
            int g = gapStart(d);
            auto it = std::find_if(units.begin(), units.end(),
                                   [&](const auto& u) { return u.first == g; });
            if (it == units.end())
                units.push_back({g, {d}});
            else
                it->second.push_back(d);
        }
        std::vector<int> uscore(units.size(), kInf);
        for (size_t i = 0; i < units.size(); ++i)
            for (Dir d : units[i].second) uscore[i] = std::min(uscore[i], hook(d));
        size_t lastUnit = static_cast<size_t>(
            std::min_element(uscore.begin(), uscore.end()) - uscore.begin());
        if (uscore[lastUnit] == kInf) return cands;
        std::vector<size_t> seq;
        for (size_t i = 0; i < units.size(); ++i)
            if (i != lastUnit && uscore[i] < kInf) seq.push_back(i);
        std::stable_sort(seq.begin(), seq.end(),
                         [&](size_t a, size_t b) { return uscore[a] > uscore[b]; });
        // Units with no known hook at all are blind pockets: they may be
        // dead ends or hidden doors into a sibling branch. Taking them just
        // before the final unit keeps either outcome cheap.
        for (size_t i = 0; i < units.size(); ++i)
            if (i != lastUnit && uscore[i] == kInf) seq.push_back(i);
        seq.push_back(lastUnit);
        std::vector<Dir> order;
        for (size_t i : seq)
            for (Dir d : units[i].second) order.push_back(d);
        return order;
    }

    KnownMap km_;
    Cell start_{};
};

// Forward passes hug the left wall; cells skipped on the way are reserved
// and pushed, so the backward pass pops them as a ready-made return route
// that picks up the leftovers.
class CellExploreStrategy final : public Strategy {
  public:
    CellExploreStrategy(bool shortcuts, CellExploreLog* log)
        : shortcuts_(shortcuts), log_(log) {}

    const char* name() const override { return shortcuts_ ? "cellexplore-sp" : "cellexplore"; }

    void run(Robot& r) override {
        km_ = {};
        reserved_.clear();
        stack_.clear();
        pendingDir_.reset();
        if (log_) *log_ = {};
        Cell start = r.pos();
        km_.recordVisit(r.pos(), r.sense());
        dir_ = initialFacing(r.sense());

        while (true) {
            forwardPhase(r);
            if (backwardPhase(r)) continue;
            if (!sweepTo(r)) break;
        }
        r.setMode(StepMode::Backward);
        walkPath(r, shortestKnownPath(km_.visited, r.pos(), start).cells);
    }

  private:
    bool fresh(const Cell& t) const {
        return km_.knownFree(t) && !km_.isVisited(t) && !reserved_.count(t);
    }

    void moveStep(Robot& r, Dir d) {
        r.move(d);
        km_.recordVisit(r.pos(), r.sense());
        dir_ = d;
    }

    void walkPath(Robot& r, const std::vector<Cell>& cells) {
        for (size_t i = 1; i < cells.size(); ++i)
            moveStep(r, dirBetween(cells[i - 1], cells[i]));
    }

    // A cell marks its own spot on the return route at most once, and only
    // while something besides the cell being stepped into stays open next
    // to it; a node that can never matter again only makes the way back
    // bounce.
    void pushOwn(const Cell& c, const Cell& ahead) {
        if (std::find(stack_.begin(), stack_.end(), c) != stack_.end()) return;
        for (Dir d : kDirOrder) {
            Cell n = c.step(d);
            if (n == ahead) continue;
            if (!km_.isVisited(n) && !km_.knownBlocked(n)) {
                stack_.push_back(c);
                return;
            }
        }
    }

    void reserveAtDeparture(const Cell& c, Dir din, Dir dout) {
        // Right turn: the robot steps into the right-hand cell itself, so
        // there is nothing to set aside.
        if (dout == cw(din)) return;

        // The return chain hinges on the right-hand cell. If it carries an
        // old marker the chain already passes the corner; on a left turn the
        // corner itself joins the chain so the inside cells get picked up
        // when the way back reaches it.
        Cell rh = c.step(cw(din));
        if (reserved_.count(rh)) {
            if (dout == ccw(din)) pushOwn(c, c.step(dout));
            return;
        }
        std::vector<Cell> cands = {rh};
        if (dout == ccw(din)) {
            // Left turn: the inside of the corner would be orphaned, so the
            // diagonal (even while its status is unknown; a marker lives
            // only in memory) and the straight-ahead cell are claimed too.
            // The push order makes the popped route contiguous around the
            // corner: normally the way back reaches the straight cell
            // first, but if the straight cell is not part of the chain the
            // corner is re-entered through the right-hand cell instead.
            Cell diag = rh.step(din);
            Cell straight = c.step(din);
            if (fresh(straight)) {
                cands = {rh, diag, straight};
            } else {
                cands = {diag, rh};
            }
        }
        bool any = false;
        for (const Cell& t : cands) {
            if (km_.isVisited(t) || reserved_.count(t) || km_.knownBlocked(t)) continue;
            reserved_.insert(t);
            stack_.push_back(t);
            any = true;
            if (log_) log_->reservedBy[t] = c;
        }
        // Nothing right of the path could be set aside - wall, old marker,
        // or explored ground - so the corner itself joins the route.
        if (!any) pushOwn(c, c.step(dout));
    }

    void forwardPhase(Robot& r) {
        r.setMode(StepMode::Forward);
        while (true) {
            std::optional<Dir> next;
            if (pendingDir_) {
                next = *pendingDir_;
                pendingDir_.reset();
            } else {
                for (Dir cand : {ccw(dir_), dir_, cw(dir_)})
                    if (fresh(r.pos().step(cand))) { next = cand; break; }
            }
            if (!next) return;
            reserveAtDeparture(r.pos(), dir_, *next);
            moveStep(r, *next);
        }
    }

    // A backward-entered cell bordering fresh ground resumes forward
    // exploration from there. The cell currently being fetched does not
    // count: stepping onto it is already the plan.
    bool tryDivision(Robot& r, const Cell* heading = nullptr) {
        for (Dir d : {ccw(dir_), dir_, cw(dir_), reverse(dir_)}) {
            Cell c = r.pos().step(d);
            if (heading && c == *heading) continue;
            if (fresh(c)) {
                if (log_) log_->divisionCells.push_back(r.pos());
                pendingDir_ = d;
                return true;
            }
        }
        return false;
    }

    bool bordersOpenGround(const Cell& t) const {
        for (Dir d : kDirOrder) {
            Cell c = t.step(d);
            if (!km_.isVisited(c) && !km_.knownBlocked(c)) return true;
        }
        return false;
    }

    // A fetch interrupted by a division puts its target back, but only
    // while the target is still worth a trip of its own.
    void repush(const Cell& t) {
        if (km_.isVisited(t) && !bordersOpenGround(t)) return;
        stack_.push_back(t);
        if (!km_.isVisited(t) && !km_.knownBlocked(t)) reserved_.insert(t);
    }

    // Walks to the popped target t, checking for division cells after every
    // step. Returns true if a division interrupted the walk (t goes back on
    // the stack).
    bool goTo(Robot& r, const Cell& t) {
        std::vector<Cell> path;
        bool enterAtEnd = false;
        if (km_.knownFree(t)) {
            // The plain walk keeps to explored ground and its own reserved
            // chain - stepping through reserved cells picks them up en
            // route; the shortcut variant may cut across any cell already
            // known to be free.
            CellSet known = shortcuts_ ? km_.sensedFree : km_.visited;
            if (!shortcuts_)
                for (const Cell& c : reserved_)
                    if (km_.knownFree(c)) known.insert(c);
            known.insert(t);
            path = shortestKnownPath(known, r.pos(), t).cells;
        } else {
            // Status unknown: approach a visited neighbor; arriving there
            // senses t and settles the question.
            std::optional<std::vector<Cell>> best;
            for (Dir d : kDirOrder) {
                Cell a = t.step(d);
                if (!km_.isVisited(a)) continue;
                auto p = shortestKnownPath(km_.visited, r.pos(), a).cells;
                if (!best || p.size() < best->size()) best = std::move(p);
            }
            if (!best) return false;  // stale speculation with no way in
            path = std::move(*best);
            enterAtEnd = true;
        }
        for (size_t i = 1; i < path.size(); ++i) {
            moveStep(r, dirBetween(path[i - 1], path[i]));
            if (tryDivision(r, &t)) {
                if (!(r.pos() == t)) repush(t);
                return true;
            }
        }
        if (enterAtEnd && km_.knownFree(t) && !km_.isVisited(t)) {
            moveStep(r, dirBetween(r.pos(), t));
            return tryDivision(r);
        }
        return false;
    }

    // Pops reserved cells until a division cell restarts forward motion or
    // the stack runs out.
    bool backwardPhase(Robot& r) {
        r.setMode(StepMode::Backward);
        if (tryDivision(r)) return true;
        while (!stack_.empty()) {
            Cell t = stack_.back();
            stack_.pop_back();
            reserved_.erase(t);
            if (t == r.pos()) {
                if (tryDivision(r)) return true;
                continue;
            }
            if (km_.knownBlocked(t)) continue;
            // Head for the next stacked cell that is still unexplored or
            // borders unexplored ground; a cell already walked through whose
            // surroundings are settled carries no new information.
            if (km_.isVisited(t) && !bordersOpenGround(t)) continue;
            if (goTo(r, t)) return true;
            if (tryDivision(r)) return true;
        }
        return false;
    }

    // Safety net: fetch any sensed-free cell the reservation bookkeeping
    // left behind, nearest first.
    bool sweepTo(Robot& r) {
        std::vector<Cell> targets;
        for (const Cell& c : km_.sensedFree)
            if (!km_.isVisited(c)) targets.push_back(c);
        if (targets.empty()) return false;
        std::sort(targets.begin(), targets.end());

        r.setMode(StepMode::Backward);
        std::optional<std::vector<Cell>> best;
        for (const Cell& t : targets) {
            CellSet known = km_.visited;
            known.insert(t);
            auto p = shortestKnownPath(known, r.pos(), t).cells;
            if (!best || p.size() < best->size()) best = std::move(p);
        }
        walkPath(r, *best);
        return true;
    }

    bool shortcuts_;
    CellExploreLog* log_;
    KnownMap km_;
    CellSet reserved_;
    std::vector<Cell> stack_;
    Dir dir_ = Dir::N;
    std::optional<Dir> pendingDir_;
};

}  // namespace

std::unique_ptr<Strategy> makeDfs() { return std::make_unique<DfsStrategy>(); }
std::unique_ptr<Strategy> makeSmartDfs() { return std::make_unique<SmartDfsStrategy>(); }
std::unique_ptr<Strategy> makeCellExplore(bool shortcuts, CellExploreLog* log) {
    return std::make_unique<CellExploreStrategy>(shortcuts, log);
}

std::vector<std::string> strategyNames() {
    return {"dfs", "smartdfs", "cellexplore", "cellexplore-sp"};
}

std::unique_ptr<Strategy> makeStrategy(const std::string& name) {
    if (name == "dfs") return makeDfs();
    if (name == "smartdfs") return makeSmartDfs();
    if (name == "cellexplore") return makeCellExplore(false);
    if (name == "cellexplore-sp") return makeCellExplore(true);
    throw GridError(Error::BadArgument, "unknown strategy: " + name);
}

}  // namespace gridrover
