#include "strongedge/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "strongedge/errors.hpp"
#include "strongedge/structure.hpp"

namespace strongedge {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr VertexId kMaxVertexId = 1u << 20;

VertexId parse_vertex(const std::string& tok) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size() || v < 0 || v >= kMaxVertexId)
            throw InputError("bad vertex id: " + tok);
        return static_cast<VertexId>(v);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad vertex id: " + tok);
    }
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    return out;
}

} // namespace

Graph read_edge_list(std::istream& in) {
    Graph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(strip_comment(line));
        std::string a, b;
        if (!(ss >> a)) continue;
        if (a == "v") {
            if (!(ss >> b)) throw InputError("line " + std::to_string(lineno) +
                                             ": header 'v' needs a count");
            VertexId count = parse_vertex(b);
            for (VertexId i = 0; i < count; ++i) g.ensure_vertex(i);
            continue;
        }
        if (!(ss >> b))
            throw InputError("line " + std::to_string(lineno) + ": expected two vertex ids");
        std::string extra;
        if (ss >> extra)
            throw InputError("line " + std::to_string(lineno) + ": trailing token '" +
                             extra + "'");
        VertexId u = parse_vertex(a), v = parse_vertex(b);
        if (u == v)
            throw InputError("line " + std::to_string(lineno) + ": self-loop at " + a);
        g.ensure_vertex(u);
        g.ensure_vertex(v);
        g.add_edge(u, v);
    }
    return g;
}

Graph read_edge_list_file(const std::string& path) {
    auto in = open_in(path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "v " << (g.id_bound()) << "\n";
    for (const auto& e : g.edges()) out << e.a << " " << e.b << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    auto out = open_out(path);
    write_edge_list(out, g);
}

Coloring read_coloring(std::istream& in, int palette) {
    Coloring c(palette);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(strip_comment(line));
        std::string a, b, col;
        if (!(ss >> a)) continue;
        if (!(ss >> b >> col))
            throw InputError("line " + std::to_string(lineno) +
                             ": expected '<u> <v> <color>'");
        int color = 0;
        try {
            color = std::stoi(col);
        } catch (const std::exception&) {
            throw InputError("line " + std::to_string(lineno) + ": bad color " + col);
        }
        if (color < 1)
            throw InputError("line " + std::to_string(lineno) + ": colors start at 1");
        c.set(Edge(parse_vertex(a), parse_vertex(b)), color);
    }
    return c;
}

Coloring read_coloring_file(const std::string& path, int palette) {
    auto in = open_in(path);
    return read_coloring(in, palette);
}

void write_coloring(std::ostream& out, const Coloring& c) {
    for (const auto& [e, col] : c.assignment())
        out << e.a << " " << e.b << " " << col << "\n";
}

void write_coloring_file(const std::string& path, const Coloring& c) {
    auto out = open_out(path);
    write_coloring(out, c);
}

namespace {

ordered_json edge_json(const Edge& e) {
    return ordered_json::array({e.a, e.b});
}

Edge edge_from_json(const ordered_json& j) {
    if (!j.is_array() || j.size() != 2) throw InputError("malformed edge in trace");
    return Edge(j[0].get<VertexId>(), j[1].get<VertexId>());
}

ordered_json ctx_json(const SpecialContext& ctx) {
    ordered_json j;
    j["u"] = ctx.u;
    j["bigs"] = ctx.big_nbrs;
    j["sharers"] = ctx.sharers;
    j["groups"] = ctx.groups;
    j["t"] = ctx.t;
    j["overlap"] = ctx.sharer_overlaps_big;
    return j;
}

SpecialContext ctx_from_json(const ordered_json& j) {
    SpecialContext ctx;
    ctx.u = j.at("u").get<VertexId>();
    ctx.big_nbrs = j.at("bigs").get<std::vector<VertexId>>();
    ctx.sharers = j.at("sharers").get<std::vector<VertexId>>();
    ctx.groups = j.at("groups").get<std::vector<std::vector<VertexId>>>();
    ctx.t = j.at("t").get<std::vector<int>>();
    ctx.sharer_overlaps_big = j.at("overlap").get<bool>();
    return ctx;
}

} // namespace

std::string trace_to_jsonl(const Graph& g, const Params& p,
                           const std::vector<ReductionStep>& trace) {
    std::ostringstream out;
    ordered_json header;
    header["format"] = "strongedge-trace-v1";
    header["D"] = p.D;
    header["eps"] = p.eps.str();
    header["K"] = p.K;
    header["n"] = g.vertex_count();
    header["m"] = g.edge_count();
    header["steps"] = trace.size();
    out << header.dump() << "\n";
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& s = trace[i];
        ordered_json j;
        j["step"] = i;
        j["kind"] = step_kind_str(s.kind);
        if (s.ctx) j["ctx"] = ctx_json(*s.ctx);
        ordered_json removed = ordered_json::array();
        for (const auto& e : s.removed) removed.push_back(edge_json(e));
        j["removed"] = removed;
        ordered_json pendants = ordered_json::array();
        for (const auto& [w, leaves] : s.pendants)
            pendants.push_back(ordered_json::array({w, leaves}));
        j["pendants"] = pendants;
        ordered_json swaps = ordered_json::array();
        for (const auto& [e1, e2] : s.swaps)
            swaps.push_back(ordered_json::array({edge_json(e1), edge_json(e2)}));
        j["swaps"] = swaps;
        ordered_json uncolored = ordered_json::array();
        for (const auto& e : s.uncolored) uncolored.push_back(edge_json(e));
        j["uncolored"] = uncolored;
        ordered_json recolored = ordered_json::array();
        for (const auto& [e, col] : s.recolored)
            recolored.push_back(ordered_json::array({edge_json(e), col}));
        j["recolored"] = recolored;
        j["measure"] = ordered_json::array({s.measure_before, s.measure_after});
        out << j.dump() << "\n";
    }
    return out.str();
}

ParsedTrace trace_from_jsonl(const std::string& text) {
    ParsedTrace out;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const std::exception& ex) {
            throw InputError(std::string("bad trace line: ") + ex.what());
        }
        if (!have_header) {
            if (j.value("format", "") != "strongedge-trace-v1")
                throw InputError("not a strongedge trace (missing header)");
            out.D = j.at("D").get<int>();
            out.eps = parse_rational(j.at("eps").get<std::string>());
            out.n = j.at("n").get<std::size_t>();
            out.m = j.at("m").get<std::size_t>();
            have_header = true;
            continue;
        }
        ReductionStep s;
        std::string kind = j.at("kind").get<std::string>();
        if (kind == "case1") s.kind = StepKind::Case1;
        else if (kind == "case2") s.kind = StepKind::Case2;
        else if (kind == "peel") s.kind = StepKind::PendantPeel;
        else if (kind == "base") s.kind = StepKind::Base;
        else throw InputError("unknown step kind: " + kind);
        if (j.contains("ctx")) s.ctx = ctx_from_json(j["ctx"]);
        for (const auto& e : j.at("removed")) s.removed.push_back(edge_from_json(e));
        for (const auto& pj : j.at("pendants"))
            s.pendants.emplace_back(pj.at(0).get<VertexId>(),
                                    pj.at(1).get<std::vector<VertexId>>());
        for (const auto& sj : j.at("swaps"))
            s.swaps.emplace_back(edge_from_json(sj.at(0)), edge_from_json(sj.at(1)));
        for (const auto& e : j.at("uncolored")) s.uncolored.push_back(edge_from_json(e));
        for (const auto& rj : j.at("recolored"))
            s.recolored.push_back({edge_from_json(rj.at(0)), rj.at(1).get<int>()});
        auto meas = j.at("measure");
        s.measure_before = meas.at(0).get<int>();
        s.measure_after = meas.at(1).get<int>();
        out.steps.push_back(std::move(s));
    }
    if (!have_header) throw InputError("empty trace");
    return out;
}

ParsedTrace trace_from_jsonl_file(const std::string& path) {
    auto in = open_in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return trace_from_jsonl(buf.str());
}

std::string report_to_json(const Report& r) {
    ordered_json j;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["degeneracy"] = r.degeneracy;
    j["capacity"] = r.capacity;
    j["D"] = r.D;
    j["eps"] = r.eps;
    j["K"] = r.K;
    j["colorsUsed"] = r.colors_used;
    j["budgetMet"] = r.budget_met;
    j["valid"] = r.valid;
    j["runtimeMs"] = r.runtime_ms;
    if (r.trace_path) j["tracePath"] = *r.trace_path;
    if (!r.diagnostics.empty()) j["diagnostics"] = r.diagnostics;
    return j.dump(2);
}

} // namespace strongedge
