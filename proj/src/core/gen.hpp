#pragma once

#include <memory>

#include "oracle.hpp"
#include "sim.hpp"

namespace gridrover {

GridPolygon genCorridor(int width, int length);
GridPolygon genRectangle(int width, int height);
// Spine row with width-1 teeth hanging south at every other column; the
// result contains no 2x2 free square, so E = 2(C+1).
GridPolygon genComb(int teeth, int toothLen);

// Seeded boundary accretion that rejects any addition which would pinch
// the boundary or enclose a hole; output is simply connected (H = 0).
GridPolygon genRandomSimple(int targetCells, uint64_t seed);
// Grows a simple polygon, then carves isolated interior cells: exactly
// targetHoles single-cell holes, exactly targetCells free cells.
GridPolygon genRandomHoley(int targetCells, int targetHoles, uint64_t seed);
// Starting from a 3x3 block, appends whole rows/columns (>= 3 cells, <= 2
// new boundary edges each round); keeps E <= (2/3)C + 6 throughout.
GridPolygon genFat(int rounds, uint64_t seed);

// World whose cell statuses are committed on demand and never change. The
// commit log preserves decision order for consistency replay.
class LazyEnvironment : public Environment {
  public:
    explicit LazyEnvironment(Cell start) : start_(start) { commitFree(start); }

    bool isFree(const Cell& c) final;
    Cell start() const final { return start_; }
    GridPolygon finalize() final;

    struct Commit {
        Cell cell;
        bool free;
    };
    const std::vector<Commit>& commitLog() const { return log_; }

  protected:
    // Adaptive policy for a cell seen for the first time.
    virtual bool decide(const Cell& c) = 0;

    bool committed(const Cell& c) const { return status_.count(c) != 0; }
    bool committedFree(const Cell& c) const {
        auto it = status_.find(c);
        return it != status_.end() && it->second;
    }
    void commitFree(const Cell& c) { commit(c, true); }
    void commitBlocked(const Cell& c) { commit(c, false); }

    Cell start_;

  private:
    void commit(const Cell& c, bool free);

    CellMap<bool> status_;
    std::vector<Commit> log_;
};

struct AdversaryOutcome {
    GridPolygon polygon;
    ExplorationTrace trace;
    Ratio ratio;                      // steps / certified tour length
    std::vector<Cell> certifiedTour;  // explicit covering closed tour
    std::string label;                // which proof case / gadget sequence
};

// Width-1 corridor construction: either seals the corridor around an
// indecisive robot, or springs a bifurcation with one looping branch and
// one dead end (yielding a hole) on a robot that commits to one end.
AdversaryOutcome adversaryHoles(Strategy& strategy, int q);

// Chain of k adaptively chosen gadget blocks along a shared north wall;
// the finished polygon is simple and Hamiltonian, so the certified tour
// has length exactly C.
AdversaryOutcome adversarySimple(Strategy& strategy, int blocks);

}  // namespace gridrover
