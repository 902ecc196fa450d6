#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strongedge/coloring.hpp"
#include "strongedge/graph.hpp"
#include "strongedge/params.hpp"
#include "strongedge/structure.hpp"

namespace strongedge {

enum class StepKind { Case1, Case2, PendantPeel, Base };

std::string step_kind_str(StepKind k);

enum class CaseKind { Case1, Case2 };

/// Case 1 iff t1 < tau, Case 2 iff t1 >= tau (boundary included).
CaseKind dispatch(const SpecialContext& ctx, const Params& p);

struct ColorAssign {
    Edge e;
    int color = 0;
};

/// One reduction event. The surgery fields (removed/pendants) rebuild the
/// post-graph from the pre-graph; the color fields (swaps/uncolored/
/// recolored) rebuild the pre-coloring from the post-coloring. Swaps apply
/// to the post-graph, assignments to the pre-graph.
struct ReductionStep {
    StepKind kind = StepKind::Base;
    std::optional<SpecialContext> ctx;
    std::vector<Edge> removed;
    std::vector<std::pair<VertexId, std::vector<VertexId>>> pendants;
    std::vector<std::pair<Edge, Edge>> swaps;
    std::vector<Edge> uncolored;
    std::vector<ColorAssign> recolored;
    int measure_before = 0;
    int measure_after = 0;
};

/// One evaluated inequality of a counting chain.
struct ChainLine {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = true;
};

/// Diagnostic certificate: a reproducible record of a failed expectation
/// (missing color, quota infeasibility, class-closure break, chain line).
struct Certificate {
    std::string kind;
    int step = -1;
    Edge edge{};
    std::string detail;
    std::vector<ChainLine> lines;
};

/// Inputs to the Case-1 counting chain, all measured on the pre-graph at the
/// moment an edge u v_{i,j} is about to be colored.
struct ChainInputs {
    int n2_colored = 0;     // colored edges in N2(uv_{i,j})
    int distinct = 0;       // distinct colors among them
    int s = 0;              // number of sharers
    int t1 = 0;
    int ti = 0;             // group size of the edge's own group
    int j = 1;              // 1-based index inside the group
    int prefix = 0;         // sum of t_p over groups before i
    int du = 0, du1 = 0, du2 = 0, dwi = 0;
    int delta = 0;          // max degree of the pre-graph
};

/// Evaluates the Case-1 distinct-color counting chain line by line.
std::vector<ChainLine> case1_chain(const ChainInputs& in, const Params& p);

/// Per-assignment audit of the Case-1 chain: reports "directly colorable"
/// when fewer than K conflict colors exist, otherwise evaluates every line
/// and flags the first failure.
struct CountReport {
    bool directly_colorable = false;
    ChainInputs inputs;
    std::vector<ChainLine> lines;
    bool ok = true;
    std::string first_failing;
};

CountReport certify_case1_counts(const Graph& g, const Coloring& c,
                                 const SpecialContext& ctx, int group_idx,
                                 int member_idx, const Params& p);

struct ReduceOptions {
    /// Re-verify the full partial coloring after every swap and assignment.
    bool verify_each_step = false;
};

struct RunResult {
    Coloring coloring;
    int colors_used = 0;
    bool budget_met = false;
    std::vector<ReductionStep> trace;
    std::vector<Certificate> diagnostics;
    int class_closure_failures = 0;
    int eq1_violations = 0;
    int case1_extensions = 0;
    int case2_extensions = 0;
    int peel_steps = 0;
};

/// The constructive coloring procedure: recursion on the number of vertices
/// of degree at least two, realized iteratively. Requires class_check to
/// pass. The output coloring is always valid; when an extension step finds
/// no color within K the edge gets an overflow color and a certificate is
/// attached, so validity is unconditional and budget misses are auditable.
RunResult strong_color(const Graph& g, const Params& p, const ReduceOptions& opt = {});

/// Builds the Case-1 reduced graph: removes every u-to-group edge and tops
/// each sharer up to ceil(tau) pendant neighbors under the degree cap.
std::pair<Graph, ReductionStep> build_gprime_case1(const Graph& g,
                                                   const SpecialContext& ctx,
                                                   const Params& p);

/// Builds the Case-2 reduced graph: removes u v_{1,1} and tops the first
/// sharer up to three pendant edges under the degree cap D + 2.
std::pair<Graph, ReductionStep> build_gprime_case2(const Graph& g,
                                                   const SpecialContext& ctx,
                                                   const Params& p);

struct ReplayReport {
    bool ok = true;
    int error_step = -1;
    std::string error;
    int class_failures = 0;
    int eq1_violations = 0;
    bool strict_measure_decrease = true; // every non-base step dropped the measure
    std::vector<int> measures;           // measure before each step, then final
    std::vector<StepKind> kinds;
};

/// Replays a trace against the graph it was produced from, re-checking the
/// surgery, the measure descent, class membership of every intermediate
/// graph, validity of every swap and assignment, and the final coloring.
ReplayReport replay_trace(const Graph& g, const Params& p,
                          const std::vector<ReductionStep>& trace);

} // namespace strongedge
