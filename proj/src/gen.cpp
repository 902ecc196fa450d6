#include "strongedge/gen.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "strongedge/errors.hpp"
#include "strongedge/structure.hpp"

namespace strongedge {

NamedKind parse_named_kind(const std::string& name) {
    if (name == "path") return NamedKind::Path;
    if (name == "cycle") return NamedKind::Cycle;
    if (name == "star") return NamedKind::Star;
    if (name == "k2n") return NamedKind::K2n;
    if (name == "theta") return NamedKind::Theta;
    if (name == "book") return NamedKind::Book;
    throw InputError("unknown named graph kind: " + name);
}

std::string named_kind_str(NamedKind kind) {
    switch (kind) {
        case NamedKind::Path: return "path";
        case NamedKind::Cycle: return "cycle";
        case NamedKind::Star: return "star";
        case NamedKind::K2n: return "k2n";
        case NamedKind::Theta: return "theta";
        case NamedKind::Book: return "book";
    }
    return "?";
}

std::string regime_str(Regime r) {
    return r == Regime::Case1Rich ? "case1rich" : "case2rich";
}

Graph gen_random_2deg(int n, int m, std::uint64_t seed) {
    if (n < 1) throw InputError("need at least one vertex");
    if (m < 0 || (n == 1 && m > 0) || (n >= 2 && m > 2 * n - 3))
        throw InputError("a 2-degenerate graph on " + std::to_string(n) +
                         " vertices has at most " +
                         std::to_string(n >= 2 ? 2 * n - 3 : 0) + " edges, got m = " +
                         std::to_string(m));
    SplitMix64 rng(seed);
    rng.absorb(0x32646567ULL); // stream tag
    rng.absorb(static_cast<std::uint64_t>(n));
    rng.absorb(static_cast<std::uint64_t>(m));

    Graph g;
    g.add_vertex();
    // Capacity of vertex i (1-based insertion) is min(2, i); spread the m
    // edges so the remaining quota always stays feasible.
    long long remaining = m;
    long long future = 0;
    for (int i = 1; i < n; ++i) future += std::min(2, i);
    for (int i = 1; i < n; ++i) {
        VertexId v = g.add_vertex();
        int cap = std::min(2, i);
        future -= cap;
        long long lo = std::max<long long>(0, remaining - future);
        long long hi = std::min<long long>(cap, remaining);
        long long take = lo + (hi > lo ? static_cast<long long>(rng.below(hi - lo + 1)) : 0);
        remaining -= take;
        // Choose `take` distinct earlier vertices.
        VertexId first = static_cast<VertexId>(rng.below(i));
        if (take >= 1) g.add_edge(v, first);
        if (take == 2) {
            VertexId second = static_cast<VertexId>(rng.below(i - 1));
            if (second >= first) ++second;
            g.add_edge(v, second);
        }
    }
    return g;
}

Graph gen_named(NamedKind kind, int n) {
    Graph g;
    auto chain = [&](VertexId from, VertexId to) {
        for (VertexId v = from; v < to; ++v) g.add_edge(v, v + 1);
    };
    switch (kind) {
        case NamedKind::Path:
            if (n < 1) throw InputError("path needs n >= 1");
            for (int i = 0; i < n; ++i) g.add_vertex();
            chain(0, static_cast<VertexId>(n - 1));
            return g;
        case NamedKind::Cycle:
            if (n < 3) throw InputError("cycle needs n >= 3");
            for (int i = 0; i < n; ++i) g.add_vertex();
            chain(0, static_cast<VertexId>(n - 1));
            g.add_edge(static_cast<VertexId>(n - 1), 0);
            return g;
        case NamedKind::Star:
            if (n < 1) throw InputError("star needs n >= 1 leaves");
            for (int i = 0; i <= n; ++i) g.add_vertex();
            for (int i = 1; i <= n; ++i) g.add_edge(0, static_cast<VertexId>(i));
            return g;
        case NamedKind::K2n:
        case NamedKind::Theta:
        case NamedKind::Book: {
            if (n < 1) throw InputError("need n >= 1 middle vertices");
            for (int i = 0; i < n + 2; ++i) g.add_vertex();
            for (int i = 2; i < n + 2; ++i) {
                g.add_edge(0, static_cast<VertexId>(i));
                g.add_edge(1, static_cast<VertexId>(i));
            }
            if (kind == NamedKind::Book) g.add_edge(0, 1);
            return g;
        }
    }
    throw InputError("unknown named graph kind");
}

namespace {

/// Tracks, per unordered vertex pair, how many degree-2 vertices currently
/// have exactly that pair as their neighborhood. The maximum over all pairs
/// bounds the capacity of the graph from above.
class SharingTracker {
public:
    void on_new_degree2(const Graph& g, VertexId v) {
        const auto& nb = g.neighbors(v);
        std::pair<VertexId, VertexId> key{std::min(nb[0], nb[1]), std::max(nb[0], nb[1])};
        owner_[v] = key;
        ++count_[key];
    }

    void on_degree_raised(VertexId v) {
        auto it = owner_.find(v);
        if (it == owner_.end()) return;
        --count_[it->second];
        owner_.erase(it);
    }

    int count(VertexId a, VertexId b) const {
        auto it = count_.find({std::min(a, b), std::max(a, b)});
        return it == count_.end() ? 0 : it->second;
    }

private:
    std::map<std::pair<VertexId, VertexId>, int> count_;
    std::map<VertexId, std::pair<VertexId, VertexId>> owner_;
};

struct Assembler {
    Graph g;
    SharingTracker sharing;
    const Params& p;
    SplitMix64& rng;
    int max_share;                // cap on any pair's shared count
    std::vector<char> locked_;    // degree-2 vertices that must stay degree 2

    Assembler(const Params& params, SplitMix64& r, int share_cap)
        : p(params), rng(r), max_share(share_cap) {}

    bool locked(VertexId v) const { return v < locked_.size() && locked_[v]; }

    void lock(VertexId v) {
        if (v >= locked_.size()) locked_.resize(v + 1, 0);
        locked_[v] = 1;
    }

    // Raising a vertex's degree may take it out of the degree-2 pool.
    void link(VertexId x, VertexId y) {
        for (VertexId v : {x, y})
            if (g.degree(v) == 2) sharing.on_degree_raised(v);
        g.add_edge(x, y);
        for (VertexId v : {x, y})
            if (g.degree(v) == 2) sharing.on_new_degree2(g, v);
    }

    /// Vertices able to absorb `room` more edges under the degree discipline,
    /// excluding locked vertices.
    std::vector<VertexId> slots(int room = 1) const {
        std::vector<VertexId> out;
        g.for_each_vertex([&](VertexId v) {
            if (locked(v)) return;
            if (g.degree(v) + room <= p.D - 1) out.push_back(v);
        });
        return out;
    }

    VertexId pick(const std::vector<VertexId>& pool) {
        return pool[rng.below(pool.size())];
    }

    /// Links a degree-deficient vertex to a compatible partner so no leaf
    /// survives assembly. Partners are filtered by the sharing cap whenever
    /// the new edge would put `v` (or the partner) at degree 2.
    void raise_to_two(VertexId v) {
        while (g.degree(v) < 2) {
            auto pool = slots(1);
            std::erase_if(pool, [&](VertexId t) { return t == v || g.has_edge(v, t); });
            std::vector<VertexId> good;
            for (auto t : pool) {
                if (g.degree(v) == 1 &&
                    sharing.count(g.neighbors(v)[0], t) >= max_share)
                    continue;
                good.push_back(t);
            }
            if (good.empty()) good = pool;
            if (good.empty()) throw InputError("no room to anchor vertex");
            link(v, pick(good));
        }
    }
};

} // namespace

Graph gen_class_instance(const Params& p, Regime regime, std::uint64_t seed, int n) {
    double tau = p.tau;
    bool case1 = regime == Regime::Case1Rich;
    if (case1 && tau <= 1.0 + kTauGuard)
        throw InputError("case1rich needs tau > 1 (eps < 1/2); tau = " +
                         std::to_string(tau));
    if (n < 10) throw InputError("class instances need n >= 10");
    if (p.D < 4) throw InputError("class instances need D >= 4");
    int gmin = case1 ? 1 : p.tau_ceil();
    if (gmin > p.D - 3)
        throw InputError("planted group size " + std::to_string(gmin) +
                         " does not fit under the degree discipline for D = " +
                         std::to_string(p.D));

    SplitMix64 rng(seed);
    rng.absorb(0x636c617373ULL);
    rng.absorb(static_cast<std::uint64_t>(p.D));
    rng.absorb(static_cast<std::uint64_t>(p.eps.num));
    rng.absorb(static_cast<std::uint64_t>(p.eps.den));
    rng.absorb(case1 ? 1 : 2);
    rng.absorb(static_cast<std::uint64_t>(n));

    // Case1Rich keeps every shared-2-neighbor count strictly below tau; the
    // cap is the largest admissible integer. Case2Rich has no cap.
    int share_cap = case1 ? std::max(1, static_cast<int>(std::floor(tau - kTauGuard)))
                          : (1 << 30);

    Assembler a(p, rng, share_cap);
    Graph& g = a.g;

    // A 4-cycle places two degree-2 vertices on the same hub pair, which a
    // Case1Rich cap of 1 cannot tolerate; a 5-cycle is always safe.
    int frame = (case1 || n >= 14) ? 5 : 4;
    for (int i = 0; i < frame; ++i) g.add_vertex();
    for (int i = 0; i < frame; ++i)
        a.link(static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % frame));

    int budget = n - frame;
    const int sites = 3;
    std::vector<VertexId> hubs;
    int min_site_cost = case1 ? 1 + 2 : 1 + gmin; // hub + members, sharers reused

    for (int s = 0; s < sites; ++s) {
        int reserve = (sites - s - 1) * min_site_cost;
        int avail = budget - reserve;
        if (avail < min_site_cost) {
            if (budget < min_site_cost) break;
            avail = min_site_cost;
        }
        if (case1) {
            // Hub u with 2..3 sharers, each sharing exactly one degree-2
            // vertex with u. Sharers are fresh (and made big) when room
            // allows, otherwise reused from the existing graph.
            int smax = std::min(3, avail - 1);
            int scount = 2 + (smax > 2 ? static_cast<int>(rng.below(smax - 1)) : 0);
            bool fresh_ws = avail >= 1 + 2 * scount;
            VertexId u = g.add_vertex();
            --budget;
            std::vector<VertexId> members, ws;
            for (int i = 0; i < scount; ++i) {
                members.push_back(g.add_vertex());
                --budget;
            }
            for (int i = 0; i < scount; ++i) {
                if (fresh_ws) {
                    VertexId w = g.add_vertex();
                    --budget;
                    ws.push_back(w);
                } else {
                    auto pool = a.slots(1);
                    std::erase_if(pool, [&](VertexId t) {
                        return t == u ||
                               std::find(ws.begin(), ws.end(), t) != ws.end() ||
                               std::find(members.begin(), members.end(), t) !=
                                   members.end();
                    });
                    if (pool.empty()) throw InputError("no room for sharer");
                    ws.push_back(a.pick(pool));
                }
            }
            for (int i = 0; i < scount; ++i) {
                a.link(u, members[i]);
                a.link(members[i], ws[i]);
                a.lock(members[i]);
            }
            a.raise_to_two(u);
            for (auto w : ws) a.raise_to_two(w);
            hubs.push_back(u);
        } else {
            // Hub u and sharer w with a planted group of >= ceil(tau)
            // common 2-neighbors.
            int gmax = std::min({p.D - 3, gmin + 3, avail - 1});
            int gsz = gmin + (gmax > gmin ? static_cast<int>(rng.below(gmax - gmin + 1)) : 0);
            bool fresh_w = avail >= 2 + gsz;
            VertexId u = g.add_vertex();
            --budget;
            VertexId w;
            if (fresh_w) {
                w = g.add_vertex();
                --budget;
            } else {
                auto pool = a.slots(gsz);
                std::erase(pool, u);
                if (pool.empty()) {
                    pool = a.slots(1);
                    std::erase(pool, u);
                }
                if (pool.empty()) throw InputError("no room for sharer");
                w = a.pick(pool);
            }
            for (int i = 0; i < gsz; ++i) {
                VertexId v = g.add_vertex();
                --budget;
                a.link(u, v);
                a.link(v, w);
                a.lock(v);
            }
            a.raise_to_two(u);
            a.raise_to_two(w);
            hubs.push_back(u);
        }
    }

    // Top up to n with degree-2 attachments under the sharing cap.
    while (budget > 0) {
        auto pool = a.slots(1);
        if (pool.size() < 2) throw InputError("no room to grow instance to n");
        VertexId x = g.add_vertex();
        --budget;
        bool attached = false;
        for (int attempts = 0; attempts < 32 && !attached; ++attempts) {
            VertexId t1 = a.pick(pool);
            VertexId t2 = a.pick(pool);
            if (t1 == t2 || a.sharing.count(t1, t2) >= a.max_share) continue;
            a.link(x, t1);
            a.link(x, t2);
            attached = true;
        }
        if (!attached) {
            // Deterministic sweep for any admissible pair.
            for (std::size_t i = 0; i < pool.size() && !attached; ++i)
                for (std::size_t j = i + 1; j < pool.size() && !attached; ++j)
                    if (a.sharing.count(pool[i], pool[j]) < a.max_share) {
                        a.link(x, pool[i]);
                        a.link(x, pool[j]);
                        attached = true;
                    }
        }
        if (!attached) {
            // Every pair is saturated: extend by a path through a fresh
            // vertex, which shares nothing.
            if (budget < 1) throw InputError("cannot reach n under the sharing cap");
            VertexId y = g.add_vertex();
            --budget;
            a.link(x, a.pick(pool));
            a.link(x, y);
            a.raise_to_two(y);
        }
    }

    auto rep = class_check(g, p);
    if (!rep.in_class)
        throw InputError("generated instance failed class_check: " + rep.reasons.front());
    bool high = static_cast<double>(rep.capacity) >= tau - kTauGuard;
    if (case1 && high)
        throw InputError("case1rich instance ended with capacity >= tau");
    if (!case1 && !high)
        throw InputError("case2rich instance ended with capacity < tau");
    return g;
}

Graph generate(const GenSpec& spec) {
    switch (spec.model) {
        case GenSpec::Model::Random2Deg:
            return gen_random_2deg(spec.n, spec.m, spec.seed);
        case GenSpec::Model::Named:
            return gen_named(spec.kind, spec.n);
        case GenSpec::Model::ClassInstance: {
            if (!spec.params) throw InputError("class instances need D and eps");
            if (!spec.regime) throw InputError("class instances need a regime");
            return gen_class_instance(*spec.params, *spec.regime, spec.seed, spec.n);
        }
    }
    throw InputError("unknown generator model");
}

} // namespace strongedge
