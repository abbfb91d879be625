#include "../include/gridrover.h"

#include <cstring>
#include <sstream>

#include <json.hpp>

#include "core/gen.hpp"
#include "core/oracle.hpp"
#include "core/report.hpp"
#include "core/strategies.hpp"

using namespace gridrover;

struct gx_polygon {
    GridPolygon poly;
};

struct gx_trace {
    ExplorationTrace trace;
};

namespace {

thread_local std::string g_lastError;

gx_status mapError(const GridError& e) {
    g_lastError = e.what();
    switch (e.code()) {
        case Error::MultipleStarts:
        case Error::NoStart:
        case Error::IllegalCharacter:
        case Error::DisconnectedFreeCells:
        case Error::StartNotAtOuterWall:
            return GX_ERR_PARSE;
        case Error::IllegalMove:
        case Error::IncompleteCoverage:
        case Error::NotClosedTour:
        case Error::StepBudgetExceeded:
            return GX_ERR_STRATEGY;
        case Error::InstanceTooLarge:
            return GX_ERR_TOO_LARGE;
        case Error::TargetInfeasible:
            return GX_ERR_INFEASIBLE;
        default:
            return GX_ERR_BAD_ARGUMENT;
    }
}

template <typename Fn>
gx_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const GridError& e) {
        return mapError(e);
    } catch (const std::exception& e) {
        g_lastError = e.what();
        return GX_ERR_INTERNAL;
    }
}

char* copyString(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

gx_status badArgument(const char* msg) {
    g_lastError = msg;
    return GX_ERR_BAD_ARGUMENT;
}

std::vector<std::string> splitNames(const char* names) {
    std::vector<std::string> out;
    std::stringstream ss(names);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<StrategyRun> collectRuns(const GridPolygon& p, const char* strategies,
                                     bool withOracle) {
    std::vector<StrategyRun> runs;
    std::optional<int64_t> sopt;
    if (withOracle && p.size() <= oracleLimit()) sopt = optimalTour(p).steps;
    for (const std::string& name : splitNames(strategies)) {
        auto strategy = makeStrategy(name);
        ConcreteEnvironment env(p);
        ExplorationTrace trace = runStrategy(env, *strategy);
        StrategyRun run;
        run.strategy = name;
        run.report = validateTrace(p, trace);
        if (sopt) {
            run.optimalSteps = sopt;
            run.ratio = competitiveRatio(run.report.steps, *sopt);
        }
        runs.push_back(std::move(run));
    }
    return runs;
}

}  // namespace

extern "C" {

const char* gx_last_error(void) { return g_lastError.c_str(); }

void gx_string_free(char* s) { std::free(s); }

gx_status gx_polygon_parse(const char* text, gx_polygon** out) {
    if (!text || !out) return badArgument("null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new gx_polygon{GridPolygon::parse(text)};
        return GX_OK;
    });
}

gx_status gx_polygon_serialize(const gx_polygon* p, char** out) {
    if (!p || !out) return badArgument("null argument");
    return guarded([&] {
        *out = copyString(p->poly.serialize());
        return GX_OK;
    });
}

void gx_polygon_free(gx_polygon* p) { delete p; }

gx_status gx_polygon_stats(const gx_polygon* p, gx_stats* out) {
    if (!p || !out) return badArgument("null argument");
    return guarded([&] {
        PolygonStats st = polygonStats(p->poly);
        *out = {st.cellCount, st.boundaryEdges, st.holes, st.windingCw, st.windingCcw};
        return GX_OK;
    });
}

gx_status gx_run(const gx_polygon* p, const char* strategy, gx_trace** out) {
    if (!p || !strategy || !out) return badArgument("null argument");
    *out = nullptr;
    return guarded([&] {
        auto s = makeStrategy(strategy);
        ConcreteEnvironment env(p->poly);
        *out = new gx_trace{runStrategy(env, *s)};
        return GX_OK;
    });
}

int64_t gx_trace_steps(const gx_trace* t) {
    return t ? static_cast<int64_t>(t->trace.steps()) : -1;
}

gx_status gx_trace_serialize(const gx_trace* t, char** out) {
    if (!t || !out) return badArgument("null argument");
    return guarded([&] {
        *out = copyString(serializeTrace(t->trace));
        return GX_OK;
    });
}

void gx_trace_free(gx_trace* t) { delete t; }

gx_status gx_report_json(const gx_polygon* p, const char* strategies, int with_oracle,
                         const char* id, char** out) {
    if (!p || !strategies || !id || !out) return badArgument("null argument");
    return guarded([&] {
        auto runs = collectRuns(p->poly, strategies, with_oracle != 0);
        *out = copyString(runReportJson(id, p->poly, runs));
        return GX_OK;
    });
}

gx_status gx_report_csv(const gx_polygon* p, const char* strategies, int with_oracle,
                        const char* id, int with_header, char** out) {
    if (!p || !strategies || !id || !out) return badArgument("null argument");
    return guarded([&] {
        auto runs = collectRuns(p->poly, strategies, with_oracle != 0);
        std::string text = with_header ? csvHeader() : std::string();
        text += csvRows(id, p->poly, runs);
        *out = copyString(text);
        return GX_OK;
    });
}

gx_status gx_render(const gx_polygon* p, const gx_trace* t, const char* format, char** out) {
    if (!p || !t || !format || !out) return badArgument("null argument");
    return guarded([&]() -> gx_status {
        std::string fmt = format;
        if (fmt == "ascii")
            *out = copyString(renderAscii(p->poly, t->trace));
        else if (fmt == "svg")
            *out = copyString(renderSvg(p->poly, t->trace));
        else
            return badArgument("unknown render format");
        return GX_OK;
    });
}

gx_status gx_optimal_tour(const gx_polygon* p, int64_t* steps) {
    if (!p || !steps) return badArgument("null argument");
    return guarded([&] {
        *steps = optimalTour(p->poly).steps;
        return GX_OK;
    });
}

gx_status gx_hamiltonian(const gx_polygon* p, int* exists) {
    if (!p || !exists) return badArgument("null argument");
    return guarded([&] {
        *exists = hamiltonianCycleExists(p->poly) ? 1 : 0;
        return GX_OK;
    });
}

gx_status gx_generate(const char* family, const int64_t* args, size_t nargs, uint64_t seed,
                      gx_polygon** out) {
    if (!family || !out || (nargs > 0 && !args)) return badArgument("null argument");
    *out = nullptr;
    return guarded([&]() -> gx_status {
        std::string f = family;
        auto need = [&](size_t n) {
            if (nargs != n)
                throw GridError(Error::BadArgument, "wrong argument count for " + f);
        };
        std::optional<GridPolygon> made;
        if (f == "corridor") {
            need(2);
            made = genCorridor(static_cast<int>(args[0]), static_cast<int>(args[1]));
        } else if (f == "rectangle") {
            need(2);
            made = genRectangle(static_cast<int>(args[0]), static_cast<int>(args[1]));
        } else if (f == "comb") {
            need(2);
            made = genComb(static_cast<int>(args[0]), static_cast<int>(args[1]));
        } else if (f == "random-simple") {
            need(1);
            made = genRandomSimple(static_cast<int>(args[0]), seed);
        } else if (f == "random-holey") {
            need(2);
            made = genRandomHoley(static_cast<int>(args[0]), static_cast<int>(args[1]), seed);
        } else if (f == "fat") {
            need(1);
            made = genFat(static_cast<int>(args[0]), seed);
        } else {
            return badArgument("unknown generator family");
        }
        *out = new gx_polygon{std::move(*made)};
        return GX_OK;
    });
}

gx_status gx_adversary(const char* kind, const char* strategy, int param, char** json_out) {
    if (!kind || !strategy || !json_out) return badArgument("null argument");
    return guarded([&]() -> gx_status {
        auto s = makeStrategy(strategy);
        std::string k = kind;
        AdversaryOutcome outcome = [&] {
            if (k == "holes") return adversaryHoles(*s, param);
            if (k == "simple") return adversarySimple(*s, param);
            throw GridError(Error::BadArgument, "unknown adversary kind");
        }();
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["adversary"] = k;
        doc["strategy"] = strategy;
        doc["param"] = param;
        doc["label"] = outcome.label;
        doc["polygon"] = outcome.polygon.serialize();
        doc["trace"] = serializeTrace(outcome.trace);
        doc["S"] = outcome.trace.steps();
        doc["certified_tour_steps"] = outcome.certifiedTour.size() - 1;
        doc["ratio"] = {{"num", outcome.ratio.num},
                        {"den", outcome.ratio.den},
                        {"value", outcome.ratio.value()}};
        PolygonStats st = polygonStats(outcome.polygon);
        doc["stats"] = {{"C", st.cellCount},
                        {"E", st.boundaryEdges},
                        {"H", st.holes},
                        {"Wcw", st.windingCw},
                        {"Wccw", st.windingCcw}};
        *json_out = copyString(doc.dump(2) + "\n");
        return GX_OK;
    });
}

}  // extern "C"
