#include "gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace gridrover {

namespace {

GridPolygon rectPolygon(int width, int height) {
    if (width < 1 || height < 1)
        throw GridError(Error::BadArgument, "dimensions must be positive");
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(width) * static_cast<size_t>(height));
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) cells.push_back({x, y});
    return GridPolygon(std::move(cells), {0, 0});
}

}  // namespace

GridPolygon genCorridor(int width, int length) { return rectPolygon(length, width); }

GridPolygon genRectangle(int width, int height) { return rectPolygon(width, height); }

GridPolygon genComb(int teeth, int toothLen) {
    if (teeth < 1 || toothLen < 1)
        throw GridError(Error::BadArgument, "dimensions must be positive");
    std::vector<Cell> cells;
    for (int x = 0; x <= 2 * (teeth - 1); ++x) cells.push_back({x, 0});
    for (int t = 0; t < teeth; ++t)
        for (int y = 1; y <= toothLen; ++y) cells.push_back({2 * t, y});
    return GridPolygon(std::move(cells), {0, 0});
}

namespace {

// Growth condition for simply connected polyominoes: the candidate must
// share k edges and exactly k+1 corner points with the region. This rules
// out both hole closure and diagonal pinches.
bool accretable(const CellSet& set, const Cell& c, int& edges) {
    edges = 0;
    for (Dir d : kDirOrder)
        if (set.count(c.step(d))) ++edges;
    if (edges == 0) return false;
    int corners = 0;
    const int cx[4] = {0, 1, 0, 1};
    const int cy[4] = {0, 0, 1, 1};
    for (int i = 0; i < 4; ++i) {
        int px = c.x + cx[i], py = c.y + cy[i];
        bool occupied = false;
        for (const Cell& t : {Cell{px - 1, py - 1}, Cell{px, py - 1}, Cell{px - 1, py},
                              Cell{px, py}}) {
            if (t == c) continue;
            if (set.count(t)) { occupied = true; break; }
        }
        if (occupied) ++corners;
    }
    return corners == edges + 1;
}

std::vector<Cell> growSimple(int targetCells, std::mt19937_64& rng, double compactness) {
    CellSet set{{0, 0}};
    while (static_cast<int>(set.size()) < targetCells) {
        CellSet seen;
        std::vector<std::pair<Cell, int>> candidates;
        for (const Cell& c : set)
            for (Dir d : kDirOrder) {
                Cell n = c.step(d);
                if (set.count(n) || !seen.insert(n).second) continue;
                int edges = 0;
                if (accretable(set, n, edges)) candidates.push_back({n, edges});
            }
        std::sort(candidates.begin(), candidates.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        if (candidates.empty())
            throw GridError(Error::TargetInfeasible, "no legal growth cell");
        bool compact = (rng() % 1000) < static_cast<uint64_t>(compactness * 1000);
        if (compact) {
            int best = 0;
            for (const auto& [c, e] : candidates) best = std::max(best, e);
            std::vector<Cell> pool;
            for (const auto& [c, e] : candidates)
                if (e == best) pool.push_back(c);
            set.insert(pool[rng() % pool.size()]);
        } else {
            set.insert(candidates[rng() % candidates.size()].first);
        }
    }
    std::vector<Cell> cells(set.begin(), set.end());
    std::sort(cells.begin(), cells.end());
    return cells;
}

}  // namespace

GridPolygon genRandomSimple(int targetCells, uint64_t seed) {
    if (targetCells < 1) throw GridError(Error::BadArgument, "cell target must be positive");
    std::mt19937_64 rng(seed);
    double compactness = static_cast<double>(rng() % 1000) / 1000.0;
    std::vector<Cell> cells = growSimple(targetCells, rng, compactness);
    Cell start = cells.front();
    return GridPolygon(std::move(cells), start);
}

GridPolygon genRandomHoley(int targetCells, int targetHoles, uint64_t seed) {
    if (targetCells < 1 || targetHoles < 0)
        throw GridError(Error::BadArgument, "targets must be non-negative");
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * static_cast<uint64_t>(attempt));
        // Holes are carved from interior cells, so bias toward compact blobs.
        double compactness = 0.70 + 0.03 * static_cast<double>(rng() % 10);
        std::vector<Cell> grown = growSimple(targetCells + targetHoles, rng, compactness);
        CellSet set(grown.begin(), grown.end());

        int carved = 0;
        std::vector<Cell> order = grown;
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
        for (const Cell& c : order) {
            if (carved == targetHoles) break;
            if (!set.count(c)) continue;
            bool interior = true;
            for (const Cell& n : ringNeighbors(c))
                if (!set.count(n)) { interior = false; break; }
            if (!interior) continue;
            set.erase(c);
            ++carved;
        }
        if (carved != targetHoles) continue;

        std::vector<Cell> cells(set.begin(), set.end());
        std::sort(cells.begin(), cells.end());
        GridPolygon p(cells, cells.front());
        if (topologyStats(p).holes == targetHoles) return p;
    }
    throw GridError(Error::TargetInfeasible, "could not carve the requested holes");
}

GridPolygon genFat(int rounds, uint64_t seed) {
    if (rounds < 0) throw GridError(Error::BadArgument, "rounds must be non-negative");
    std::mt19937_64 rng(seed);
    // Appending a whole side row/column to a rectangle adds >= 3 cells and
    // exactly 2 boundary edges, so only the final dimensions matter.
    int w = 3, h = 3;
    for (int i = 0; i < rounds; ++i) {
        if (rng() % 2 == 0)
            ++w;
        else
            ++h;
    }
    return rectPolygon(w, h);
}

bool LazyEnvironment::isFree(const Cell& c) {
    auto it = status_.find(c);
    if (it != status_.end()) return it->second;
    bool free = decide(c);
    commit(c, free);
    return free;
}

void LazyEnvironment::commit(const Cell& c, bool free) {
    auto [it, inserted] = status_.emplace(c, free);
    if (!inserted) {
        if (it->second != free)
            throw GridError(Error::BadArgument, "environment contradicted a prior answer");
        return;
    }
    log_.push_back({c, free});
}

GridPolygon LazyEnvironment::finalize() {
    std::vector<Cell> cells;
    for (const auto& [c, free] : status_)
        if (free) cells.push_back(c);
    return GridPolygon(std::move(cells), start_);
}

namespace {

void appendRun(std::vector<Cell>& tour, const Cell& to) {
    Cell cur = tour.back();
    while (!(cur == to)) {
        int dx = to.x - cur.x, dy = to.y - cur.y;
        if (dx != 0)
            cur.x += dx > 0 ? 1 : -1;
        else
            cur.y += dy > 0 ? 1 : -1;
        tour.push_back(cur);
    }
}

// Width-1 corridor along y = 0. Until a trigger fires every corridor probe
// is answered free and every lateral probe blocked. An indecisive robot
// gets the corridor sealed around it; a committed one gets a bifurcation
// behind the far end whose two parallel branches run back above and below
// the corridor — the first branch end reached connects around to the near
// end, the other becomes a dead end, enclosing a hole.
class HolesAdversary final : public LazyEnvironment {
  public:
    explicit HolesAdversary(int q) : LazyEnvironment({0, 0}), q_(q) {
        if (q < 10) throw GridError(Error::BadArgument, "scale must be at least 10");
        visitedMin_ = visitedMax_ = 0;
    }

    std::string label() const {
        switch (phase_) {
            case Phase::Corridor: return "corridor";
            case Phase::Sealed: return "case1";
            default: return "case2";
        }
    }

    void onMove(const Cell& p) override {
        ++steps_;
        if (phase_ != Phase::Corridor) {
            forkOnMove(p);
            return;
        }
        visitedMin_ = std::min(visitedMin_, p.x);
        visitedMax_ = std::max(visitedMax_, p.x);
        if (p == start_ && steps_ >= static_cast<int64_t>(q_)) {
            seal();
            return;
        }
        if (steps_ >= 2 * static_cast<int64_t>(q_)) {
            if (std::abs(p.x) >= q_ / 2)
                fork();
            else
                seal();
        }
    }

    std::vector<Cell> certifiedTour();

  protected:
    bool decide(const Cell& c) override {
        switch (phase_) {
            case Phase::Corridor: return c.y == 0;
            case Phase::Sealed: return false;
            case Phase::Fork: return decideFork(c);
        }
        return false;
    }

  private:
    enum class Phase { Corridor, Sealed, Fork };

    void seal() {
        lo_ = visitedMin_ - 1;
        hi_ = visitedMax_ + 1;
        commitFree({lo_, 0});
        commitFree({hi_, 0});
        commitBlocked({lo_ - 1, 0});
        commitBlocked({hi_ + 1, 0});
        phase_ = Phase::Sealed;
    }

    void fork() {
        bool east = visitedMax_ >= -visitedMin_;  // split behind the far end
        sx_ = east ? visitedMax_ + 1 : visitedMin_ - 1;
        jx_ = east ? visitedMin_ - 1 : visitedMax_ + 1;
        commitFree({sx_, 0});
        commitFree({jx_, 0});
        commitBlocked({sx_ + (east ? 1 : -1), 0});
        commitBlocked({jx_ + (east ? -1 : 1), 0});
        for (int t : {1, -1}) {
            commitFree({sx_, t});
            commitFree({sx_, 2 * t});
        }
        phase_ = Phase::Fork;
    }

    bool inRange(int x) const { return x >= std::min(jx_, sx_) && x <= std::max(jx_, sx_); }

    bool decideFork(const Cell& c) {
        if (c.y == 0) return inRange(c.x);
        int t = c.y > 0 ? 1 : -1;
        if (std::abs(c.y) == 1) {
            if (c.x == sx_) return true;
            if (c.x == jx_) {
                if (winner_ == t) return true;
                if (winner_ == 0) burned_[t > 0] = true;  // probed too early
                return false;
            }
            return false;
        }
        if (std::abs(c.y) == 2) {
            if (!inRange(c.x)) return false;
            return !closed_[t > 0];
        }
        return false;
    }

    void forkOnMove(const Cell& p) {
        if (phase_ != Phase::Fork || winner_ != 0) return;
        for (int t : {1, -1}) {
            if (p == Cell{jx_, 2 * t} && !burned_[t > 0]) {
                winner_ = t;
                commitFree({jx_, t});
                closed_[t < 0] = true;  // the other branch dies here
            }
        }
    }

    int q_;
    int64_t steps_ = 0;
    int visitedMin_ = 0, visitedMax_ = 0;
    Phase phase_ = Phase::Corridor;
    int lo_ = 0, hi_ = 0;       // sealed corridor extent
    int sx_ = 0, jx_ = 0;       // split and join columns
    int winner_ = 0;            // +1 = south branch looped, -1 = north
    bool burned_[2] = {false, false};
    bool closed_[2] = {false, false};
};

std::vector<Cell> HolesAdversary::certifiedTour() {
    std::vector<Cell> tour{start_};
    if (phase_ != Phase::Fork) {
        int lo = lo_, hi = hi_;
        if (phase_ == Phase::Corridor) {
            lo = start_.x;
            while (committedFree({lo - 1, 0})) --lo;
            hi = start_.x;
            while (committedFree({hi + 1, 0})) ++hi;
        }
        appendRun(tour, {lo, 0});
        appendRun(tour, {hi, 0});
        appendRun(tour, start_);
        return tour;
    }

    auto branchEnd = [&](int t) {
        int x = sx_;
        int toward = jx_ > sx_ ? 1 : -1;
        while (inRange(x + toward) && committedFree({x + toward, 2 * t})) x += toward;
        return x;
    };

    appendRun(tour, {sx_, 0});
    for (int t : {1, -1}) {
        if (t == winner_) continue;  // dead ends first, the loop last
        appendRun(tour, {sx_, 2 * t});
        appendRun(tour, {branchEnd(t), 2 * t});
        appendRun(tour, {sx_, 2 * t});
        appendRun(tour, {sx_, 0});
    }
    if (winner_ != 0) {
        appendRun(tour, {sx_, 2 * winner_});
        appendRun(tour, {jx_, 2 * winner_});
        appendRun(tour, {jx_, 0});
        appendRun(tour, start_);
    } else {
        appendRun(tour, {jx_, 0});
        appendRun(tour, start_);
    }
    return tour;
}

// Chain of gadget blocks hanging south of a shared wall at y = -1. The
// robot enters each block at its north-west cell heading east; its second
// and third steps decide which block variant gets committed:
//   - drops off the wall early       -> 2x3 block (8 steps forced, 6 optimal)
//   - drops after two wall steps     -> 2x5 block (12 forced, 10 optimal)
//   - keeps following the wall       -> 3x8 block (28 forced, 24 optimal)
// Blocks share the top row, so the finished polygon is simple and has a
// serpentine Hamiltonian cycle: the certified tour has length exactly C.
class SimpleAdversary final : public LazyEnvironment {
  public:
    explicit SimpleAdversary(int blocks) : LazyEnvironment({0, 0}), blocks_(blocks) {
        if (blocks < 1) throw GridError(Error::BadArgument, "need at least one block");
    }

    enum class Variant { Small, Medium, Large };

    const std::vector<Variant>& chosen() const { return chosen_; }

    std::string label() const {
        std::string out;
        for (Variant v : chosen_) {
            if (!out.empty()) out += ',';
            out += v == Variant::Small ? "iv" : (v == Variant::Medium ? "v" : "vii");
        }
        return out;
    }

    void onMove(const Cell& p) override {
        if (!pending()) return;
        int dx = p.x - entryX_;
        if (p.y == 0 && dx == 3) {
            choose(Variant::Large);
        } else if (p.y == 1 && dx >= 0 && dx <= 2) {
            if (longTopSensed_ || dx == 2)
                choose(Variant::Medium);
            else
                choose(Variant::Small);
        }
    }

    std::vector<Cell> certifiedTour();

  protected:
    bool decide(const Cell& c) override {
        if (!pending()) return false;
        int dx = c.x - entryX_;
        if (c.y == 0 && dx >= 0 && dx <= 3) {
            if (dx == 3) longTopSensed_ = true;  // a 2x3 block is no longer possible
            return true;
        }
        if (c.y == 1 && dx >= 0 && dx <= 2) return true;
        return false;
    }

  private:
    bool pending() const { return static_cast<int>(chosen_.size()) < blocks_; }

    static int widthOf(Variant v) { return v == Variant::Small ? 3 : (v == Variant::Medium ? 5 : 8); }
    static int heightOf(Variant v) { return v == Variant::Large ? 3 : 2; }

    void choose(Variant v) {
        for (int y = 0; y < heightOf(v); ++y)
            for (int x = 0; x < widthOf(v); ++x) commitFree({entryX_ + x, y});
        chosen_.push_back(v);
        entryX_ += widthOf(v);
        longTopSensed_ = false;
    }

    int blocks_;
    int entryX_ = 0;
    bool longTopSensed_ = false;
    std::vector<Variant> chosen_;
};

std::vector<Cell> SimpleAdversary::certifiedTour() {
    std::vector<Cell> tour{start_};
    appendRun(tour, {entryX_ - 1, 0});
    tour.push_back({entryX_ - 1, 1});
    // Westward through the lower rows; 3-row blocks take a two-column
    // serpentine to pick up their middle and bottom rows.
    int x = entryX_;
    for (size_t i = chosen_.size(); i > 0; --i) {
        Variant v = chosen_[i - 1];
        int a = x - widthOf(v);
        if (heightOf(v) == 2) {
            appendRun(tour, {a, 1});
        } else {
            for (int c = x - 1; c > a; c -= 2) {
                appendRun(tour, {c, 1});
                tour.push_back({c, 2});
                tour.push_back({c - 1, 2});
                tour.push_back({c - 1, 1});
            }
        }
        x = a;
    }
    appendRun(tour, start_);
    return tour;
}

template <typename Env>
AdversaryOutcome runAdversary(Env& env, Strategy& strategy) {
    ExplorationTrace trace = runStrategy(env, strategy);
    AdversaryOutcome out{env.finalize(), std::move(trace), Ratio(1, 1), env.certifiedTour(),
                         env.label()};
    out.ratio = competitiveRatio(static_cast<int64_t>(out.trace.steps()),
                                 static_cast<int64_t>(out.certifiedTour.size()) - 1);
    return out;
}

}  // namespace

AdversaryOutcome adversaryHoles(Strategy& strategy, int q) {
    HolesAdversary env(q);
    return runAdversary(env, strategy);
}

AdversaryOutcome adversarySimple(Strategy& strategy, int blocks) {
    SimpleAdversary env(blocks);
    return runAdversary(env, strategy);
}

}  // namespace gridrover
