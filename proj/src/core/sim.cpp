#include "sim.hpp"

#include <sstream>

#include "sinuosity.hpp"

namespace gridrover {

namespace {

std::optional<Dir> stepDir(const Cell& a, const Cell& b) {
    for (Dir d : kDirOrder)
        if (a.step(d) == b) return d;
    return std::nullopt;
}

class SimRobot : public Robot {
  public:
    explicit SimRobot(Environment& env) : env_(env), pos_(env.start()) {
        trace_.positions.push_back(pos_);
        senseHere();
    }

    Cell pos() const override { return pos_; }

    SensorView sense() const override {
        SensorView view;
        for (Dir d : kDirOrder) view.free[static_cast<int>(d)] = sensedFree_.count(pos_.step(d)) != 0;
        return view;
    }

    void move(Dir d) override {
        Cell next = pos_.step(d);
        if (!env_.isFree(next))
            throw GridError(Error::IllegalMove, "strategy attempted to move into a blocked cell");
        pos_ = next;
        trace_.positions.push_back(pos_);
        trace_.modeMarks.push_back(mode_);
        env_.onMove(pos_);
        senseHere();
        if (trace_.steps() > budget())
            throw GridError(Error::StepBudgetExceeded, "step budget exhausted");
    }

    void setMode(StepMode m) override { mode_ = m; }

    ExplorationTrace takeTrace() { return std::move(trace_); }
    const CellSet& visited() const { return visited_; }

  private:
    void senseHere() {
        visited_.insert(pos_);
        sensedFree_.insert(pos_);
        for (Dir d : kDirOrder) {
            Cell n = pos_.step(d);
            if (env_.isFree(n))
                sensedFree_.insert(n);
        }
    }

    size_t budget() const {
        if (auto c = env_.cellCountHint()) return 10 * *c;
        // Lazy worlds grow as they are probed; keep the safety net ahead of
        // the committed free region.
        return 10 * sensedFree_.size() + 1000;
    }

    Environment& env_;
    Cell pos_;
    CellSet visited_;
    CellSet sensedFree_;
    ExplorationTrace trace_;
    StepMode mode_ = StepMode::Forward;
};

}  // namespace

size_t ExplorationTrace::leftTurns() const {
    size_t count = 0;
    for (size_t i = 2; i < positions.size(); ++i) {
        auto prev = stepDir(positions[i - 2], positions[i - 1]);
        auto cur = stepDir(positions[i - 1], positions[i]);
        if (prev && cur && *cur == ccw(*prev)) ++count;
    }
    return count;
}

ExplorationTrace runStrategy(Environment& env, Strategy& strategy) {
    SimRobot robot(env);
    strategy.run(robot);

    GridPolygon world = env.finalize();
    for (const Cell& c : world.cells())
        if (!robot.visited().count(c))
            throw GridError(Error::IncompleteCoverage,
                            "strategy terminated without visiting every free cell");
    if (!(robot.pos() == world.start()))
        throw GridError(Error::NotClosedTour, "strategy terminated away from the start cell");

    ExplorationTrace trace = robot.takeTrace();
    return trace;
}

TraceReport validateTrace(const GridPolygon& p, const ExplorationTrace& trace) {
    TraceReport report;
    report.steps = static_cast<int64_t>(trace.steps());
    report.leftTurns = static_cast<int64_t>(trace.leftTurns());

    CellSet seen;
    bool wellFormed = !trace.positions.empty();
    for (size_t i = 0; i < trace.positions.size(); ++i) {
        const Cell& c = trace.positions[i];
        if (!p.contains(c)) wellFormed = false;
        if (i > 0 && !adjacent(trace.positions[i - 1], c)) wellFormed = false;
        seen.insert(c);
    }
    report.covered = wellFormed && seen.size() == p.size();
    report.closed = wellFormed && trace.positions.front() == p.start() &&
                    trace.positions.back() == p.start();

    TopologyStats st = topologyStats(p);
    SinuosityReport sin = computeSinuosity(p);
    int64_t C = st.cellCount, E = st.boundaryEdges, H = st.holes;
    int64_t L = report.leftTurns, Wcw = sin.windingCw;
    report.excess = report.steps - C;

    auto addBound = [&](std::string name, int64_t bound, bool applies = true) {
        BoundCheck b;
        b.name = std::move(name);
        b.bound = bound;
        b.applies = applies;
        b.satisfied = !applies || report.steps <= bound;
        b.slack = bound - report.steps;
        report.bounds.push_back(std::move(b));
    };
    addBound("2C-2", 2 * C - 2);
    // The C+E/2-3 guarantee is for simple polygons only.
    addBound("C+E/2-3", C + E / 2 - 3, H == 0);
    addBound("C+E/2+H+2L-2", C + E / 2 + H + 2 * L - 2);
    addBound("C+E/2+3H+Wcw-2", C + E / 2 + 3 * H + Wcw - 2);
    return report;
}

std::string serializeTrace(const ExplorationTrace& trace) {
    std::ostringstream out;
    for (const Cell& c : trace.positions) out << c.x << ',' << c.y << '\n';
    return out.str();
}

}  // namespace gridrover
