#pragma once

#include <array>
#include <memory>

#include "grid.hpp"

namespace gridrover {

// Ground truth the robot explores. Answers may be committed lazily by
// adversarial environments; answers never change once given.
class Environment {
  public:
    virtual ~Environment() = default;
    virtual bool isFree(const Cell& c) = 0;
    virtual Cell start() const = 0;
    // Observation hook: called once per robot move, before the new cell's
    // neighborhood is sensed. Adaptive environments commit cells here.
    virtual void onMove(const Cell&) {}
    // Concrete polygon consistent with every answer given so far.
    virtual GridPolygon finalize() = 0;
    // Known cell count, when the world is concrete (used for the step budget).
    virtual std::optional<size_t> cellCountHint() const { return std::nullopt; }
};

class ConcreteEnvironment : public Environment {
  public:
    explicit ConcreteEnvironment(GridPolygon polygon) : polygon_(std::move(polygon)) {}
    bool isFree(const Cell& c) override { return polygon_.contains(c); }
    Cell start() const override { return polygon_.start(); }
    GridPolygon finalize() override { return polygon_; }
    std::optional<size_t> cellCountHint() const override { return polygon_.size(); }

  private:
    GridPolygon polygon_;
};

struct SensorView {
    std::array<bool, 4> free{};  // indexed by Dir
    bool isFree(Dir d) const { return free[static_cast<int>(d)]; }
};

enum class StepMode : char { Forward = 'F', Backward = 'B' };

struct ExplorationTrace {
    std::vector<Cell> positions;
    std::vector<StepMode> modeMarks;  // one per step; empty if the strategy has no modes

    size_t steps() const { return positions.empty() ? 0 : positions.size() - 1; }
    size_t leftTurns() const;
};

// The strategy's view of the world. Sensing is free and automatic on
// entering a cell; the strategy can only learn cell statuses through it.
class Robot {
  public:
    virtual ~Robot() = default;
    virtual Cell pos() const = 0;
    virtual SensorView sense() const = 0;
    virtual void move(Dir d) = 0;
    // Tags subsequent moves as exploration or return-trip steps. Purely
    // diagnostic; the default sink ignores it.
    virtual void setMode(StepMode) {}
};

class Strategy {
  public:
    virtual ~Strategy() = default;
    virtual const char* name() const = 0;
    virtual void run(Robot& robot) = 0;
};

// Shared bookkeeping for strategies: visited cells and sensed statuses.
struct KnownMap {
    CellSet visited;
    CellSet sensedFree;
    CellSet sensedBlocked;

    void recordVisit(const Cell& c, const SensorView& view) {
        visited.insert(c);
        sensedFree.insert(c);
        for (Dir d : kDirOrder)
            (view.isFree(d) ? sensedFree : sensedBlocked).insert(c.step(d));
    }
    bool knownFree(const Cell& c) const { return sensedFree.count(c) != 0; }
    bool knownBlocked(const Cell& c) const { return sensedBlocked.count(c) != 0; }
    bool isVisited(const Cell& c) const { return visited.count(c) != 0; }
};

// Runs the strategy against the environment, enforcing the online model:
// the strategy observes only the 4-neighborhoods of cells it has entered.
// Throws on illegal moves, incomplete coverage, an unclosed tour, or when
// the 10*C step budget is exhausted.
ExplorationTrace runStrategy(Environment& env, Strategy& strategy);

// Per-bound evaluation of a finished trace against a known polygon.
struct BoundCheck {
    std::string name;
    int64_t bound = 0;
    bool applies = true;
    bool satisfied = false;
    int64_t slack = 0;  // bound - S
};

struct TraceReport {
    int64_t steps = 0;        // S
    int64_t leftTurns = 0;    // L
    int64_t excess = 0;       // S - C: steps beyond one visit per cell
    bool covered = false;
    bool closed = false;
    std::vector<BoundCheck> bounds;
};

TraceReport validateTrace(const GridPolygon& p, const ExplorationTrace& trace);

std::string serializeTrace(const ExplorationTrace& trace);

}  // namespace gridrover
