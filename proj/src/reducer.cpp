#include "strongedge/reducer.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "strongedge/errors.hpp"

namespace strongedge {

std::string step_kind_str(StepKind k) {
    switch (k) {
        case StepKind::Case1: return "case1";
        case StepKind::Case2: return "case2";
        case StepKind::PendantPeel: return "peel";
        case StepKind::Base: return "base";
    }
    return "?";
}

CaseKind dispatch(const SpecialContext& ctx, const Params& p) {
    if (ctx.t1() < 1) throw PreconditionError("dispatch needs t1 >= 1");
    return static_cast<double>(ctx.t1()) >= p.tau - kTauGuard ? CaseKind::Case2
                                                              : CaseKind::Case1;
}

namespace {

std::string edge_str(const Edge& e) {
    return std::to_string(e.a) + "-" + std::to_string(e.b);
}

int leaf_neighbor_count(const Graph& g, VertexId v) {
    int out = 0;
    for (auto n : g.neighbors(v))
        if (g.degree(n) == 1) ++out;
    return out;
}

void case1_surgery(Graph& g, const SpecialContext& ctx, const Params& p,
                   ReductionStep& step, std::vector<Certificate>* diag, int step_idx) {
    step.kind = StepKind::Case1;
    step.ctx = ctx;
    step.measure_before = measure(g);
    for (std::size_t i = 0; i < ctx.groups.size(); ++i)
        for (auto v : ctx.groups[i]) step.removed.emplace_back(ctx.u, v);
    for (const auto& e : step.removed) g.remove_edge(e.a, e.b);

    int quota = p.tau_ceil();
    int cap = p.degree_cap_loose();
    for (auto w : ctx.sharers) {
        std::vector<VertexId> fresh;
        while (leaf_neighbor_count(g, w) < quota && g.degree(w) < cap) {
            VertexId leaf = g.add_vertex();
            g.add_edge(w, leaf);
            fresh.push_back(leaf);
        }
        if (!fresh.empty()) step.pendants.emplace_back(w, std::move(fresh));
        if (leaf_neighbor_count(g, w) < quota && diag) {
            Certificate cert;
            cert.kind = "case1-quota";
            cert.step = step_idx;
            cert.detail = "sharer " + std::to_string(w) + " reached the degree cap " +
                          std::to_string(cap) + " with only " +
                          std::to_string(leaf_neighbor_count(g, w)) +
                          " pendant neighbors (quota " + std::to_string(quota) + ")";
            diag->push_back(std::move(cert));
        }
    }
    step.measure_after = measure(g);
}

void case2_surgery(Graph& g, const SpecialContext& ctx, const Params& p,
                   ReductionStep& step, std::vector<Certificate>* diag, int step_idx) {
    step.kind = StepKind::Case2;
    step.ctx = ctx;
    step.measure_before = measure(g);
    VertexId w1 = ctx.sharers.front();
    VertexId v11 = ctx.groups.front().front();
    step.removed.emplace_back(ctx.u, v11);
    g.remove_edge(ctx.u, v11);

    int cap = p.D + 2;
    std::vector<VertexId> fresh;
    while (leaf_neighbor_count(g, w1) < 3 && g.degree(w1) < cap) {
        VertexId leaf = g.add_vertex();
        g.add_edge(w1, leaf);
        fresh.push_back(leaf);
    }
    if (!fresh.empty()) step.pendants.emplace_back(w1, std::move(fresh));
    if (leaf_neighbor_count(g, w1) < 3 && diag) {
        Certificate cert;
        cert.kind = "case2-quota";
        cert.step = step_idx;
        cert.detail = "sharer " + std::to_string(w1) + " sits at the degree cap " +
                      std::to_string(cap) + " with only " +
                      std::to_string(leaf_neighbor_count(g, w1)) + " pendant edges";
        diag->push_back(std::move(cert));
    }
    step.measure_after = measure(g);
}

void peel_surgery(Graph& g, ReductionStep& step) {
    step.kind = StepKind::PendantPeel;
    step.measure_before = measure(g);
    std::set<Edge> pendant_edges;
    g.for_each_vertex([&](VertexId v) {
        if (!is_special(g, v)) return;
        for (auto n : g.neighbors(v))
            if (g.degree(n) == 1) pendant_edges.insert(Edge(v, n));
    });
    step.removed.assign(pendant_edges.begin(), pendant_edges.end());
    for (const auto& e : step.removed) g.remove_edge(e.a, e.b);
    step.measure_after = measure(g);
}

/// Undoes a step's surgery: drops the added pendants (and their colors) and
/// restores the removed edges, turning the post-graph back into the
/// pre-graph. Restored edges come back uncolored.
void invert_surgery(Graph& g, Coloring& c, const ReductionStep& step) {
    for (const auto& [w, leaves] : step.pendants)
        for (auto leaf : leaves) {
            Edge e(w, leaf);
            if (g.has_edge(e)) {
                c.unset(e);
                g.remove_edge(e.a, e.b);
            }
            g.remove_vertex(leaf);
        }
    for (const auto& e : step.removed) g.add_edge(e.a, e.b);
}

} // namespace

std::pair<Graph, ReductionStep> build_gprime_case1(const Graph& g,
                                                   const SpecialContext& ctx,
                                                   const Params& p) {
    if (dispatch(ctx, p) != CaseKind::Case1)
        throw PreconditionError("context dispatches to Case 2, not Case 1");
    Graph out = g;
    ReductionStep step;
    case1_surgery(out, ctx, p, step, nullptr, 0);
    return {std::move(out), std::move(step)};
}

std::pair<Graph, ReductionStep> build_gprime_case2(const Graph& g,
                                                   const SpecialContext& ctx,
                                                   const Params& p) {
    if (dispatch(ctx, p) != CaseKind::Case2)
        throw PreconditionError("context dispatches to Case 1, not Case 2");
    Graph out = g;
    ReductionStep step;
    case2_surgery(out, ctx, p, step, nullptr, 0);
    return {std::move(out), std::move(step)};
}

std::vector<ChainLine> case1_chain(const ChainInputs& in, const Params& p) {
    std::vector<ChainLine> lines;
    double tau = p.tau;
    double D = p.D;
    double d_half_plus = D / tau; // D^(1/2+eps) = D / D^(1/2-eps)
    auto push = [&](const std::string& name, double lhs, double rhs) {
        lines.push_back({name, lhs, rhs, lhs <= rhs + kTauGuard});
    };

    double raw = in.du1 + in.du2 + in.dwi + in.du - 3 + in.du - 2 - in.ti - in.prefix -
                 (in.j - 1);
    push("n2-raw-bound", in.n2_colored, raw);
    push("sharer-lower-bound", (in.du - 2) / tau, in.s);

    double repeats =
        std::max(0.0, (in.n2_colored + tau * (in.s - 1) - (5.0 * D - tau + 2.0)) / tau);
    double x1 = in.n2_colored - repeats;
    push("repeat-discount", in.distinct, x1);

    double x2 = (in.du1 + in.du2 + 2.0 * in.du - 5 + in.dwi - in.t1) * (1.0 - 1.0 / tau) -
                (in.du - 2) / tau + 5.0 * d_half_plus + 2.0 / tau;
    push("substitute-raw-bound", x1, x2);

    double x3 = 3.0 * in.delta * (1.0 - 1.0 / tau) + in.du * (2.0 - 3.0 / tau) +
                5.0 * d_half_plus - 5.0 + 9.0 / tau;
    push("collect-terms", x2, x3);

    double x4 = 3.0 * (D + tau) * (1.0 - 1.0 / tau) + D * (2.0 - 3.0 / tau) +
                5.0 * d_half_plus - 5.0 + 9.0 / tau;
    push("3D(1-1/tau)", x3, x4);

    double x5 = 5.0 * D + 3.0 * tau - d_half_plus - 8.0 + 9.0 / tau;
    push("expand-caps", x4, x5);
    push("final", x5, 5.0 * D - tau + 1.0);
    push("distinct-within-budget", in.distinct, 5.0 * D - tau + 1.0);
    return lines;
}

CountReport certify_case1_counts(const Graph& g, const Coloring& c,
                                 const SpecialContext& ctx, int group_idx,
                                 int member_idx, const Params& p) {
    CountReport rep;
    Edge e(ctx.u, ctx.groups[group_idx][member_idx]);
    std::set<int> colors;
    int colored = 0;
    for (const auto& f : n2_edges(g, e)) {
        int col = c.color_of(f);
        if (col) {
            ++colored;
            colors.insert(col);
        }
    }
    rep.inputs.n2_colored = colored;
    rep.inputs.distinct = static_cast<int>(colors.size());
    if (colored < p.K) {
        rep.directly_colorable = true;
        return rep;
    }
    rep.inputs.s = static_cast<int>(ctx.sharers.size());
    rep.inputs.t1 = ctx.t1();
    rep.inputs.ti = ctx.t[group_idx];
    rep.inputs.j = member_idx + 1;
    rep.inputs.prefix = 0;
    for (int i = 0; i < group_idx; ++i) rep.inputs.prefix += ctx.t[i];
    rep.inputs.du = g.degree(ctx.u);
    rep.inputs.du1 = ctx.big_nbrs.size() > 0 ? g.degree(ctx.big_nbrs[0]) : 0;
    rep.inputs.du2 = ctx.big_nbrs.size() > 1 ? g.degree(ctx.big_nbrs[1]) : 0;
    rep.inputs.dwi = g.degree(ctx.sharers[group_idx]);
    rep.inputs.delta = g.max_degree();
    rep.lines = case1_chain(rep.inputs, p);
    for (const auto& line : rep.lines)
        if (!line.ok) {
            rep.ok = false;
            rep.first_failing = line.name;
            break;
        }
    return rep;
}

namespace {

/// Shared state for the forward reduction and the backward extension.
struct Engine {
    Graph g;
    Coloring c;
    const Params& p;
    ReduceOptions opt;
    RunResult res;

    Engine(const Graph& graph, const Params& params, const ReduceOptions& options)
        : g(graph), c(params.K), p(params), opt(options) {}

    void cert(std::string kind, int step, std::string detail, Edge e = {},
              std::vector<ChainLine> lines = {}) {
        Certificate out;
        out.kind = std::move(kind);
        out.step = step;
        out.edge = e;
        out.detail = std::move(detail);
        out.lines = std::move(lines);
        res.diagnostics.push_back(std::move(out));
    }

    // ---- shared coloring helpers -------------------------------------

    std::set<int> blocked_colors(const Edge& e) const {
        std::set<int> out;
        for (const auto& f : n2_edges(g, e)) {
            int col = c.color_of(f);
            if (col) out.insert(col);
        }
        return out;
    }

    static int least_not_in(const std::set<int>& blocked) {
        int col = 1;
        for (int b : blocked) {
            if (b > col) break;
            if (b == col) ++col;
        }
        return col;
    }

    /// Colors e with the least color its conflict set allows, recording the
    /// assignment. Colors above K are legal but certified.
    int assign(ReductionStep& step, int step_idx, const Edge& e) {
        auto blocked = blocked_colors(e);
        int col = least_not_in(blocked);
        if (col > p.K)
            cert("no-available-color", step_idx,
                 "edge " + edge_str(e) + " has all " + std::to_string(p.K) +
                     " palette colors blocked; took overflow color " +
                     std::to_string(col),
                 e);
        c.set(e, col);
        step.recolored.push_back({e, col});
        verify_if_enabled(step_idx, "assignment of " + edge_str(e));
        return col;
    }

    /// Swaps two colored edges, checking that the exchange keeps the current
    /// partial coloring valid; an unsafe swap is rolled back and certified.
    bool swap(ReductionStep& step, int step_idx, const Edge& e1, const Edge& e2) {
        swap_colors(c, e1, e2);
        for (const Edge& e : {e1, e2}) {
            int col = c.color_of(e);
            for (const auto& [f, fcol] : c.assignment()) {
                if (fcol != col || f == e) continue;
                if ((f == e1 || f == e2)) continue;
                if (edges_conflict(g, e, f)) {
                    swap_colors(c, e1, e2);
                    cert("unsafe-swap", step_idx,
                         "swapping " + edge_str(e1) + " and " + edge_str(e2) +
                             " would collide with " + edge_str(f),
                         e);
                    return false;
                }
            }
        }
        step.swaps.push_back({e1, e2});
        verify_if_enabled(step_idx, "swap " + edge_str(e1) + "/" + edge_str(e2));
        return true;
    }

    void verify_if_enabled(int step_idx, const std::string& what) {
        if (!opt.verify_each_step) return;
        if (auto v = find_violation_partial(g, c))
            cert("internal-invalid", step_idx, what + " broke validity: " + v->describe());
    }

    // ---- forward reduction -------------------------------------------

    bool special_leaf_exists() const {
        bool found = false;
        g.for_each_vertex([&](VertexId v) {
            if (found || !is_special(g, v)) return;
            for (auto n : g.neighbors(v))
                if (g.degree(n) == 1) {
                    found = true;
                    return;
                }
        });
        return found;
    }

    void forward() {
        while (measure(g) > 0) {
            int step_idx = static_cast<int>(res.trace.size());
            auto ctx = capacity_context(g);
            bool peel = !ctx || !ctx->leaf_nbrs.empty();
            if (peel) {
                if (!special_leaf_exists()) {
                    cert("no-reducible-structure", step_idx,
                         "measure is positive but no context and no pendant edge at a "
                         "special vertex exists");
                    break;
                }
                ReductionStep step;
                peel_surgery(g, step);
                res.trace.push_back(std::move(step));
                ++res.peel_steps;
                continue;
            }
            ReductionStep step;
            if (dispatch(*ctx, p) == CaseKind::Case1) {
                case1_surgery(g, *ctx, p, step, &res.diagnostics, step_idx);
                ++res.case1_extensions;
            } else {
                case2_surgery(g, *ctx, p, step, &res.diagnostics, step_idx);
                ++res.case2_extensions;
            }
            auto closure = class_check(g, p);
            if (!closure.in_class) {
                ++res.class_closure_failures;
                std::string why;
                for (const auto& r : closure.reasons) why += (why.empty() ? "" : "; ") + r;
                cert("class-closure", step_idx, "reduced graph left the class: " + why);
            }
            res.trace.push_back(std::move(step));
        }
    }

    // ---- base case -----------------------------------------------------

    void base() {
        ReductionStep step;
        step.kind = StepKind::Base;
        step.measure_before = measure(g);
        step.measure_after = step.measure_before;
        int step_idx = static_cast<int>(res.trace.size());
        if (step.measure_before == 0) {
            // The remaining edges form a matching: color 1 everywhere works.
            for (const auto& e : g.edges()) {
                c.set(e, 1);
                step.recolored.push_back({e, 1});
            }
        } else {
            // Unreachable by the structure theory; complete greedily so the
            // output stays valid no matter what.
            for (const auto& e : g.edges()) assign(step, step_idx, e);
        }
        res.trace.push_back(std::move(step));
    }

    // ---- backward extension ---------------------------------------------

    std::vector<Edge> pendant_edges_at(VertexId w) const {
        std::vector<Edge> out;
        for (auto x : g.neighbors(w))
            if (g.degree(x) == 1) out.emplace_back(w, x);
        return out;
    }

    void eq1_check(int step_idx, const SpecialContext& ctx, const Edge& e) {
        if (e.a != ctx.u && e.b != ctx.u) return;
        VertexId v = e.a == ctx.u ? e.b : e.a;
        for (std::size_t i = 0; i < ctx.groups.size(); ++i) {
            const auto& grp = ctx.groups[i];
            if (std::find(grp.begin(), grp.end(), v) == grp.end()) continue;
            int n2_size = static_cast<int>(n2_edges(g, e).size());
            int bound = 5 * p.D + 1 - ctx.t[i];
            if (n2_size > bound) {
                ++res.eq1_violations;
                cert("eq1-violation", step_idx,
                     "|N2(" + edge_str(e) + ")| = " + std::to_string(n2_size) +
                         " exceeds 5D+1-t_i = " + std::to_string(bound),
                     e);
            }
            return;
        }
    }

    void extend_case1(ReductionStep& step, int step_idx) {
        const SpecialContext& ctx = *step.ctx;
        VertexId u = ctx.u;

        std::set<int> c1set;
        for (auto b : ctx.big_nbrs) {
            int col = c.color_of(Edge(u, b));
            if (col) c1set.insert(col);
        }
        std::set<Edge> group_edges;
        for (std::size_t i = 0; i < ctx.sharers.size(); ++i)
            for (auto v : ctx.groups[i]) group_edges.insert(Edge(ctx.sharers[i], v));
        std::set<Edge> added;
        for (const auto& [w, leaves] : step.pendants)
            for (auto leaf : leaves) added.insert(Edge(w, leaf));

        std::set<Edge> locked;
        std::vector<std::pair<int, int>> dirty; // (group_idx, member_idx)

        // (1) group edges may not keep the colors of uu1/uu2; fix by swapping
        // with another pendant of the same sharer.
        for (std::size_t i = 0; i < ctx.sharers.size(); ++i) {
            for (std::size_t j = 0; j < ctx.groups[i].size(); ++j) {
                Edge e(ctx.sharers[i], ctx.groups[i][j]);
                if (!c1set.count(c.color_of(e))) continue;
                bool fixed = false;
                for (const auto& donor : pendant_edges_at(ctx.sharers[i])) {
                    if (donor == e || group_edges.count(donor)) continue;
                    if (c1set.count(c.color_of(donor))) continue;
                    if (swap(step, step_idx, e, donor)) {
                        fixed = true;
                        break;
                    }
                }
                if (!fixed) dirty.push_back({static_cast<int>(i), static_cast<int>(j)});
            }
        }

        // (2) colors shared between a sharer's pendants and the other edges
        // at u1/u2 should sit on group edges, where they survive into G.
        std::set<int> u12set;
        for (auto b : ctx.big_nbrs)
            for (auto y : g.neighbors(b)) {
                if (y == u) continue;
                int col = c.color_of(Edge(b, y));
                if (col) u12set.insert(col);
            }
        auto place_on_group = [&](std::size_t i, const Edge& carrier) {
            // Prefer clean slots; a dirty slot may donate only when the
            // carrier is an added pendant that never reaches G.
            for (std::size_t j = 0; j < ctx.groups[i].size(); ++j) {
                Edge slot(ctx.sharers[i], ctx.groups[i][j]);
                if (locked.count(slot) || slot == carrier) continue;
                bool slot_dirty =
                    std::find(dirty.begin(), dirty.end(),
                              std::pair{static_cast<int>(i), static_cast<int>(j)}) !=
                    dirty.end();
                if (slot_dirty && !added.count(carrier)) continue;
                if (swap(step, step_idx, slot, carrier)) {
                    locked.insert(slot);
                    if (slot_dirty)
                        std::erase(dirty,
                                   std::pair{static_cast<int>(i), static_cast<int>(j)});
                    return;
                }
            }
        };
        for (std::size_t i = 0; i < ctx.sharers.size(); ++i) {
            for (int color : u12set) {
                Edge carrier{};
                bool found = false, on_group = false;
                for (const auto& pe : pendant_edges_at(ctx.sharers[i])) {
                    if (c.color_of(pe) != color) continue;
                    carrier = pe;
                    found = true;
                    on_group = group_edges.count(pe) > 0;
                    break;
                }
                if (!found) continue;
                if (on_group) {
                    locked.insert(carrier);
                    continue;
                }
                place_on_group(i, carrier);
            }
        }

        // (3) a color on pendants of two or more sharers should sit on the
        // group edges of each of them.
        std::map<int, std::vector<std::size_t>> by_color;
        for (std::size_t i = 0; i < ctx.sharers.size(); ++i) {
            std::set<int> seen;
            for (const auto& pe : pendant_edges_at(ctx.sharers[i])) {
                int col = c.color_of(pe);
                if (col && seen.insert(col).second) by_color[col].push_back(i);
            }
        }
        for (const auto& [color, carriers] : by_color) {
            if (carriers.size() < 2) continue;
            if (c1set.count(color) || u12set.count(color)) continue;
            for (auto i : carriers) {
                Edge carrier{};
                bool found = false, on_group = false;
                for (const auto& pe : pendant_edges_at(ctx.sharers[i])) {
                    if (c.color_of(pe) != color) continue;
                    carrier = pe;
                    found = true;
                    on_group = group_edges.count(pe) > 0;
                    break;
                }
                if (!found) continue;
                if (on_group) {
                    locked.insert(carrier);
                    continue;
                }
                place_on_group(i, carrier);
            }
        }

        // Back to G: drop the pendants, restore the u-group edges.
        invert_surgery(g, c, step);

        // Group edges that could not shed a uu1/uu2 color get fresh colors
        // now that the full conflict set is visible.
        for (auto [i, j] : dirty) {
            Edge e(ctx.sharers[i], ctx.groups[i][j]);
            c.unset(e);
            step.uncolored.push_back(e);
            assign(step, step_idx, e);
        }

        // (4) color the u-group edges in reverse listed order, auditing the
        // counting chain at every assignment.
        for (int i = static_cast<int>(ctx.groups.size()) - 1; i >= 0; --i) {
            for (int j = static_cast<int>(ctx.groups[i].size()) - 1; j >= 0; --j) {
                auto report = certify_case1_counts(g, c, ctx, i, j, p);
                if (!report.ok)
                    cert("case1-chain", step_idx,
                         "counting chain failed at line '" + report.first_failing + "'",
                         Edge(ctx.u, ctx.groups[i][j]), report.lines);
                assign(step, step_idx, Edge(ctx.u, ctx.groups[i][j]));
            }
        }
    }

    void extend_case2(ReductionStep& step, int step_idx) {
        const SpecialContext& ctx = *step.ctx;
        VertexId u = ctx.u;
        VertexId w1 = ctx.sharers.front();
        VertexId v11 = ctx.groups.front().front();
        Edge e_wv(w1, v11);
        Edge e_uv(u, v11);

        std::set<int> c1set;
        for (auto b : ctx.big_nbrs) {
            int col = c.color_of(Edge(u, b));
            if (col) c1set.insert(col);
        }
        std::map<int, Edge> uv_colors; // color -> u-group edge carrying it
        std::set<int> group1_colors;   // colors on uv_{1,l}, l >= 2
        for (std::size_t i = 0; i < ctx.groups.size(); ++i)
            for (std::size_t j = 0; j < ctx.groups[i].size(); ++j) {
                if (i == 0 && j == 0) continue;
                Edge e(u, ctx.groups[i][j]);
                int col = c.color_of(e);
                if (!col) continue;
                uv_colors[col] = e;
                if (i == 0) group1_colors.insert(col);
            }

        int cstar = c.color_of(e_wv);
        if (group1_colors.count(cstar))
            cert("case2-exhaustiveness", step_idx,
                 "color of " + edge_str(e_wv) +
                     " equals a uv_{1,j} color although w1 is adjacent to v_{1,j}",
                 e_wv);

        bool dirty_wv = false;
        if (c1set.count(cstar)) {
            // Case 2.2: swap the uu1/uu2 color off v11-w1 onto a pendant of
            // w1; prefer a donor whose color causes no further conflicts.
            std::vector<Edge> donors;
            for (const auto& pe : pendant_edges_at(w1))
                if (pe != e_wv) donors.push_back(pe);
            const Edge* best = nullptr;
            for (const auto& d : donors) {
                int col = c.color_of(d);
                if (c1set.count(col) || uv_colors.count(col)) continue;
                best = &d;
                break;
            }
            if (!best)
                for (const auto& d : donors) {
                    if (c1set.count(c.color_of(d))) continue;
                    best = &d;
                    break;
                }
            if (best && swap(step, step_idx, e_wv, *best)) {
                cstar = c.color_of(e_wv);
            } else {
                if (!best)
                    cert("case2-no-donor", step_idx,
                         "no pendant donor at sharer " + std::to_string(w1) +
                             " can absorb the color of " + edge_str(e_wv),
                         e_wv);
                dirty_wv = true;
            }
        }

        Edge conflicting{};
        bool have_conflict = false;
        if (!dirty_wv && uv_colors.count(cstar)) {
            // Case 2.3 (or 2.2 landing on a u-edge color): recolor the chain.
            conflicting = uv_colors[cstar];
            have_conflict = true;
        }

        invert_surgery(g, c, step);

        if (dirty_wv) {
            c.unset(e_wv);
            step.uncolored.push_back(e_wv);
            assign(step, step_idx, e_wv);
        }

        if (have_conflict) {
            // Uncolor uv_{i,j} and uv_{1,1..t1}; recolor in that order.
            std::vector<Edge> order{conflicting, e_uv};
            c.unset(conflicting);
            step.uncolored.push_back(conflicting);
            for (std::size_t l = 1; l < ctx.groups.front().size(); ++l) {
                Edge e(u, ctx.groups.front()[l]);
                c.unset(e);
                step.uncolored.push_back(e);
                order.push_back(e);
            }
            for (const auto& e : order) {
                eq1_check(step_idx, ctx, e);
                assign(step, step_idx, e);
            }
        } else {
            eq1_check(step_idx, ctx, e_uv);
            assign(step, step_idx, e_uv);
        }
    }

    void extend_peel(ReductionStep& step, int step_idx) {
        invert_surgery(g, c, step);
        int delta = g.max_degree();
        int limit = 4 * delta - 4;
        for (const auto& e : step.removed) {
            int n2_size = static_cast<int>(n2_edges(g, e).size());
            if (n2_size > limit)
                cert("pendant-bound", step_idx,
                     "peeled edge " + edge_str(e) + " has |N2| = " +
                         std::to_string(n2_size) + " > 4*Delta-4 = " +
                         std::to_string(limit),
                     e);
            else if (limit >= p.K)
                cert("pendant-bound", step_idx,
                     "4*Delta-4 = " + std::to_string(limit) +
                         " is not below K = " + std::to_string(p.K),
                     e);
            assign(step, step_idx, e);
        }
    }

    void backward() {
        // trace.back() is the base step, already colored.
        for (int i = static_cast<int>(res.trace.size()) - 2; i >= 0; --i) {
            auto& step = res.trace[i];
            switch (step.kind) {
                case StepKind::Case1: extend_case1(step, i); break;
                case StepKind::Case2: extend_case2(step, i); break;
                case StepKind::PendantPeel: extend_peel(step, i); break;
                case StepKind::Base: break;
            }
        }
    }
};

} // namespace

RunResult strong_color(const Graph& g, const Params& p, const ReduceOptions& opt) {
    auto gate = class_check(g, p);
    if (!gate.in_class)
        throw PreconditionError("graph is outside the theorem class: " +
                                gate.reasons.front());

    Engine eng(g, p, opt);
    eng.forward();
    eng.base();
    eng.backward();

    RunResult out = std::move(eng.res);
    out.coloring = std::move(eng.c);
    out.colors_used = out.coloring.max_color();
    out.budget_met = out.colors_used <= p.K;
    bool total = true;
    for (const auto& e : g.edges())
        if (!out.coloring.is_colored(e)) total = false;
    if (!total) {
        Certificate cert;
        cert.kind = "output-incomplete";
        cert.detail = "extension left an edge uncolored";
        out.diagnostics.push_back(std::move(cert));
    } else if (auto v = verify_strong(g, out.coloring)) {
        Certificate cert;
        cert.kind = "output-invalid";
        cert.detail = v->describe();
        out.diagnostics.push_back(std::move(cert));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trace replay
// ---------------------------------------------------------------------------

namespace {

struct Replayer {
    Graph g;
    Coloring c;
    const Params& p;
    const std::vector<ReductionStep>& trace;
    ReplayReport rep;

    Replayer(const Graph& graph, const Params& params,
             const std::vector<ReductionStep>& t)
        : g(graph), c(params.K), p(params), trace(t) {}

    bool fail(int step, const std::string& why) {
        rep.ok = false;
        rep.error_step = step;
        rep.error = why;
        return false;
    }

    bool forward() {
        for (std::size_t i = 0; i < trace.size(); ++i) {
            const auto& step = trace[i];
            rep.kinds.push_back(step.kind);
            rep.measures.push_back(measure(g));
            if (step.kind == StepKind::Base) {
                if (i + 1 != trace.size())
                    return fail(static_cast<int>(i), "base step before the end");
                continue;
            }
            int before = measure(g);
            std::size_t edges_before = g.edge_count();
            for (const auto& e : step.removed) {
                if (!g.has_edge(e))
                    return fail(static_cast<int>(i),
                                "removed edge " + edge_str(e) + " is not in the graph");
                if (step.kind == StepKind::PendantPeel) {
                    bool a_leaf = g.degree(e.a) == 1;
                    bool b_leaf = g.degree(e.b) == 1;
                    VertexId hub = a_leaf ? e.b : e.a;
                    if (!a_leaf && !b_leaf)
                        return fail(static_cast<int>(i),
                                    "peeled edge " + edge_str(e) + " is not pendant");
                    if (!is_special(g, hub))
                        return fail(static_cast<int>(i), "peeled edge " + edge_str(e) +
                                                             " hangs at a non-special vertex");
                }
            }
            if (step.kind != StepKind::PendantPeel) {
                if (!step.ctx) return fail(static_cast<int>(i), "missing context");
                if (!g.has_vertex(step.ctx->u))
                    return fail(static_cast<int>(i), "context vertex is missing");
                auto fresh = context_at(g, step.ctx->u);
                if (fresh.sharers != step.ctx->sharers || fresh.groups != step.ctx->groups ||
                    fresh.big_nbrs != step.ctx->big_nbrs)
                    return fail(static_cast<int>(i),
                                "context snapshot disagrees with the graph");
                auto kind =
                    dispatch(*step.ctx, p) == CaseKind::Case1 ? StepKind::Case1 : StepKind::Case2;
                if (kind != step.kind)
                    return fail(static_cast<int>(i), "step kind disagrees with dispatch");
            }
            for (const auto& e : step.removed) g.remove_edge(e.a, e.b);
            for (const auto& [w, leaves] : step.pendants) {
                if (!g.has_vertex(w))
                    return fail(static_cast<int>(i), "pendant host is missing");
                for (auto leaf : leaves) {
                    if (g.has_vertex(leaf))
                        return fail(static_cast<int>(i),
                                    "pendant id " + std::to_string(leaf) + " already alive");
                    g.ensure_vertex(leaf);
                    g.add_edge(w, leaf);
                }
            }
            int after = measure(g);
            if (step.kind == StepKind::PendantPeel) {
                if (after > before || g.edge_count() >= edges_before)
                    return fail(static_cast<int>(i),
                                "peel did not shrink (measure, edges)");
                if (after >= before) rep.strict_measure_decrease = false;
            } else if (after >= before) {
                return fail(static_cast<int>(i), "measure did not strictly decrease");
            }
            if (!class_check(g, p).in_class) ++rep.class_failures;
        }
        rep.measures.push_back(measure(g));
        return true;
    }

    bool apply_assignment(int step_idx, const Edge& e, int col) {
        if (!g.has_edge(e))
            return fail(step_idx, "assigned edge " + edge_str(e) + " is not in the graph");
        for (const auto& f : n2_edges(g, e))
            if (c.color_of(f) == col)
                return fail(step_idx, "color " + std::to_string(col) + " on " +
                                          edge_str(e) + " collides with " + edge_str(f));
        c.set(e, col);
        return true;
    }

    bool backward() {
        if (trace.empty() || trace.back().kind != StepKind::Base)
            return fail(static_cast<int>(trace.size()) - 1, "trace does not end in a base step");
        int base_idx = static_cast<int>(trace.size()) - 1;
        for (const auto& [e, col] : trace.back().recolored)
            if (!apply_assignment(base_idx, e, col)) return false;
        for (const auto& e : g.edges())
            if (!c.is_colored(e)) return fail(base_idx, "base coloring is not total");

        for (int i = base_idx - 1; i >= 0; --i) {
            const auto& step = trace[i];
            for (const auto& [e1, e2] : step.swaps) {
                if (!c.color_of(e1) || !c.color_of(e2))
                    return fail(i, "swap touches an uncolored edge");
                swap_colors(c, e1, e2);
                for (const Edge& e : {e1, e2}) {
                    int col = c.color_of(e);
                    for (const auto& [f, fcol] : c.assignment()) {
                        if (fcol != col || f == e || f == e1 || f == e2) continue;
                        if (edges_conflict(g, e, f))
                            return fail(i, "swap of " + edge_str(e1) + "/" + edge_str(e2) +
                                               " broke validity against " + edge_str(f));
                    }
                }
            }
            for (const auto& [w, leaves] : step.pendants)
                for (auto leaf : leaves) {
                    Edge e(w, leaf);
                    if (!g.has_edge(e)) return fail(i, "pendant edge missing at unwind");
                    if (!c.is_colored(e))
                        return fail(i, "pendant edge uncolored at unwind");
                    c.unset(e);
                    g.remove_edge(e.a, e.b);
                    g.remove_vertex(leaf);
                }
            for (const auto& e : step.removed) g.add_edge(e.a, e.b);
            for (const auto& e : step.uncolored) {
                if (!c.is_colored(e)) return fail(i, "uncolor of an uncolored edge");
                c.unset(e);
            }
            for (const auto& [e, col] : step.recolored) {
                if (c.is_colored(e)) c.unset(e);
                if (!apply_assignment(i, e, col)) return false;
                if (step.kind == StepKind::Case2 && step.ctx &&
                    (e.a == step.ctx->u || e.b == step.ctx->u)) {
                    VertexId v = e.a == step.ctx->u ? e.b : e.a;
                    for (std::size_t gi = 0; gi < step.ctx->groups.size(); ++gi) {
                        const auto& grp = step.ctx->groups[gi];
                        if (std::find(grp.begin(), grp.end(), v) == grp.end()) continue;
                        int bound = 5 * p.D + 1 - step.ctx->t[gi];
                        if (static_cast<int>(n2_edges(g, e).size()) > bound)
                            ++rep.eq1_violations;
                        break;
                    }
                }
            }
        }
        for (const auto& e : g.edges())
            if (!c.is_colored(e)) return fail(0, "final coloring is not total");
        if (auto v = verify_strong(g, c))
            return fail(0, "final coloring invalid: " + v->describe());
        return true;
    }
};

} // namespace

ReplayReport replay_trace(const Graph& g, const Params& p,
                          const std::vector<ReductionStep>& trace) {
    Replayer r(g, p, trace);
    if (r.forward()) r.backward();
    return r.rep;
}

} // namespace strongedge
