#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "sinuosity.hpp"

namespace gridrover {

PolygonStats polygonStats(const GridPolygon& p) {
    TopologyStats t = topologyStats(p);
    SinuosityReport s = computeSinuosity(p);
    return {t.cellCount, t.boundaryEdges, t.holes, s.windingCw, s.windingCcw};
}

std::string primaryBoundName(const std::string& strategy) {
    if (strategy == "dfs") return "2C-2";
    if (strategy == "smartdfs") return "C+E/2-3";
    return "C+E/2+3H+Wcw-2";
}

namespace {

const BoundCheck* findBound(const TraceReport& r, const std::string& name) {
    for (const BoundCheck& b : r.bounds)
        if (b.name == name) return &b;
    return nullptr;
}

}  // namespace

std::string runReportJson(const std::string& id, const GridPolygon& p,
                          const std::vector<StrategyRun>& runs) {
    using json = nlohmann::ordered_json;
    PolygonStats st = polygonStats(p);
    json doc;
    doc["schema"] = 1;
    doc["id"] = id;
    doc["stats"] = {{"C", st.cellCount},
                    {"E", st.boundaryEdges},
                    {"H", st.holes},
                    {"Wcw", st.windingCw},
                    {"Wccw", st.windingCcw}};
    doc["runs"] = json::array();
    for (const StrategyRun& r : runs) {
        json run;
        run["strategy"] = r.strategy;
        run["S"] = r.report.steps;
        run["L"] = r.report.leftTurns;
        run["excess"] = r.report.excess;
        run["covered"] = r.report.covered;
        run["closed"] = r.report.closed;
        run["bounds"] = json::array();
        for (const BoundCheck& b : r.report.bounds)
            run["bounds"].push_back({{"name", b.name},
                                     {"bound", b.bound},
                                     {"slack", b.slack},
                                     {"applies", b.applies},
                                     {"satisfied", b.satisfied}});
        if (r.optimalSteps) run["Sopt"] = *r.optimalSteps;
        if (r.ratio)
            run["ratio"] = {{"num", r.ratio->num},
                            {"den", r.ratio->den},
                            {"value", r.ratio->value()}};
        doc["runs"].push_back(std::move(run));
    }
    return doc.dump(2) + "\n";
}

std::string csvHeader() { return "id,C,E,H,Wcw,strategy,S,L,bound,slack,Sopt,ratio\n"; }

std::string csvRows(const std::string& id, const GridPolygon& p,
                    const std::vector<StrategyRun>& runs) {
    PolygonStats st = polygonStats(p);
    std::ostringstream out;
    for (const StrategyRun& r : runs) {
        const BoundCheck* b = findBound(r.report, primaryBoundName(r.strategy));
        out << id << ',' << st.cellCount << ',' << st.boundaryEdges << ',' << st.holes << ','
            << st.windingCw << ',' << r.strategy << ',' << r.report.steps << ','
            << r.report.leftTurns << ',';
        if (b)
            out << b->bound << ',' << b->slack << ',';
        else
            out << ",,";
        if (r.optimalSteps) out << *r.optimalSteps;
        out << ',';
        if (r.ratio) out << r.ratio->value();
        out << '\n';
    }
    return out.str();
}

std::string renderAscii(const GridPolygon& p, const ExplorationTrace& trace) {
    CellSet visited(trace.positions.begin(), trace.positions.end());
    std::string out;
    for (int y = p.minY(); y <= p.maxY(); ++y) {
        for (int x = p.minX(); x <= p.maxX(); ++x) {
            Cell c{x, y};
            if (!p.contains(c))
                out += '#';
            else if (c == p.start())
                out += 'S';
            else
                out += visited.count(c) ? '*' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string renderSvg(const GridPolygon& p, const ExplorationTrace& trace) {
    constexpr int kScale = 16;
    int w = (p.maxX() - p.minX() + 1) * kScale;
    int h = (p.maxY() - p.minY() + 1) * kScale;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
    for (const Cell& c : p.cells()) {
        int x = (c.x - p.minX()) * kScale;
        int y = (c.y - p.minY()) * kScale;
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << kScale
            << "\" height=\"" << kScale << "\" fill=\""
            << (c == p.start() ? "#cfe8cf" : "#f2f2f2") << "\" stroke=\"#999\"/>\n";
    }
    out << "  <polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"";
    for (size_t i = 0; i < trace.positions.size(); ++i) {
        const Cell& c = trace.positions[i];
        int x = (c.x - p.minX()) * kScale + kScale / 2;
        int y = (c.y - p.minY()) * kScale + kScale / 2;
        out << (i ? " " : "") << x << ',' << y;
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

}  // namespace gridrover
