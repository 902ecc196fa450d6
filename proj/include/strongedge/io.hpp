#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/params.hpp"
#include "strongedge/reducer.hpp"

namespace strongedge {

/// Edge-list format: one edge per line as two whitespace-separated
/// non-negative integer vertex ids; '#' starts a comment; an optional header
/// line "v <count>" declares vertices 0..count-1 (for isolated vertices).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

/// Coloring file: one line per edge, "<u> <v> <color>".
Coloring read_coloring(std::istream& in, int palette);
Coloring read_coloring_file(const std::string& path, int palette);
void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring_file(const std::string& path, const Coloring& c);

/// Trace format: JSON lines with a header record followed by one record per
/// ReductionStep, stable field order.
std::string trace_to_jsonl(const Graph& g, const Params& p,
                           const std::vector<ReductionStep>& trace);

struct ParsedTrace {
    int D = 0;
    Rational eps;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<ReductionStep> steps;
};

ParsedTrace trace_from_jsonl(const std::string& text);
ParsedTrace trace_from_jsonl_file(const std::string& path);

/// Run report with the stable field set and key order used by the CLI.
struct Report {
    std::size_t n = 0;
    std::size_t m = 0;
    int delta = 0;
    int degeneracy = 0;
    int capacity = 0;
    int D = 0;
    std::string eps;
    int K = 0;
    int colors_used = 0;
    bool budget_met = false;
    bool valid = false;
    long long runtime_ms = 0;
    std::optional<std::string> trace_path;
    std::vector<std::string> diagnostics;
};

std::string report_to_json(const Report& r);

} // namespace strongedge
