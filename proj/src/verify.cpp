#include "ftzf/verify.hpp"

#include "ftzf/forcing.hpp"
#include "ftzf/oracle.hpp"
#include "ftzf/search.hpp"
#include "ftzf/trees.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

namespace ftzf::verify {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Pools

Graph random_connected_graph(std::mt19937_64 & rng, int n, double p)
{
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    std::vector<VertexSet> adj(static_cast<std::size_t>(n));
    for (Vertex v = 1; v < n; ++v) {
        const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
        edges.emplace_back(u, v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!adj[static_cast<std::size_t>(v)].contains(u) && coin(rng))
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<Graph> random_connected_pool(std::uint64_t seed, int count, int max_order)
{
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = std::uniform_int_distribution<int>(2, std::max(2, max_order))(rng);
        const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
        out.push_back(random_connected_graph(rng, n, p));
    }
    return out;
}

std::vector<Graph> tree_pool(int max_order)
{
    std::vector<Graph> out;
    for (int n = 2; n <= max_order; ++n)
        for (auto & t : all_trees(n))
            out.push_back(std::move(t));
    return out;
}

Graph disjoint_union(const Graph & a, const Graph & b)
{
    auto edges = a.edges();
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), edges);
}

std::string describe(const Graph & g)
{
    std::string s = "n=" + std::to_string(g.order()) + " edges=[";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        s += (first ? "[" : ",[") + std::to_string(u) + "," + std::to_string(v) + "]";
        first = false;
    }
    return s + "]";
}

bool scope_matches(std::string_view scope, std::string_view id)
{
    auto glob = [](std::string_view pat, std::string_view text) {
        // Iterative '*' matcher with single backtrack point.
        std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
        while (t < text.size()) {
            if (p < pat.size() && pat[p] == '*') {
                star = p++;
                mark = t;
            }
            else if (p < pat.size() && pat[p] == text[t]) {
                ++p;
                ++t;
            }
            else if (star != std::string_view::npos) {
                p = star + 1;
                t = ++mark;
            }
            else
                return false;
        }
        while (p < pat.size() && pat[p] == '*')
            ++p;
        return p == pat.size();
    };
    if (scope.empty())
        return true;
    while (true) {
        auto comma = scope.find(',');
        if (glob(scope.substr(0, comma), id))
            return true;
        if (comma == std::string_view::npos)
            return false;
        scope.remove_prefix(comma + 1);
    }
}

bool all_passed(const std::vector<ClaimReport> & reports)
{
    return std::none_of(reports.begin(), reports.end(), [](const auto & r) { return r.status == Status::Fail; });
}

// ---------------------------------------------------------------------------

namespace {

struct Context {
    Limits limits;
    std::uint64_t seed = 1;
    std::vector<Graph> randoms;
    std::vector<Graph> trees;
    std::vector<Graph> fixtures;

    SearchOptions options() const
    {
        SearchOptions o;
        o.size_limit = limits.size_limit;
        o.witness_cap = std::numeric_limits<std::size_t>::max();
        return o;
    }

    /// Random pool, trees and fixtures: the instances every property runs on.
    std::vector<const Graph *> pool(int max_order = kMaxOrder) const
    {
        std::vector<const Graph *> out;
        for (const auto * group : {&randoms, &trees, &fixtures})
            for (const auto & g : *group)
                if (g.order() <= max_order)
                    out.push_back(&g);
        return out;
    }
};

/// Accumulates the outcome of one claim.
struct Outcome {
    int checked = 0;
    std::string counterexample;
    std::vector<std::string> skipped;
    std::string instances;

    void expect(bool ok, const std::function<std::string()> & what)
    {
        ++checked;
        if (!ok && counterexample.empty())
            counterexample = what();
    }
};

std::string show(const std::optional<int> & v)
{
    return v ? std::to_string(*v) : "not_exists";
}

int ceil_half(int x)
{
    return (x + 1) / 2;
}

using Body = std::function<void(const Context &, Outcome &)>;

struct Claim {
    std::string id;
    std::string statement;
    std::string note;
    Body body;
};

// Family claims ---------------------------------------------------------------

Body family_claim(FamilyKind kind, int lo, int hi, std::function<std::optional<int>(const Graph &, const SearchOptions &)> compute,
    std::function<std::optional<int>(int)> expected)
{
    return [=](const Context & ctx, Outcome & out) {
        int ran_lo = -1, ran_hi = -1;
        for (int n = lo; n <= hi; ++n) {
            Graph g = generate({kind, n, 0, 0});
            if (g.order() > ctx.limits.size_limit) {
                out.skipped.push_back("n=" + std::to_string(n));
                continue;
            }
            if (ran_lo < 0)
                ran_lo = n;
            ran_hi = n;
            auto got = compute(g, ctx.options());
            auto want = expected(n);
            out.expect(got == want, [&] {
                return to_string(FamilySpec{kind, n, 0, 0}) + ": expected " + show(want) + ", got " + show(got);
            });
        }
        if (ran_lo >= 0)
            out.instances = "n=" + std::to_string(ran_lo) + ".." + std::to_string(ran_hi);
    };
}

std::optional<int> zt1(const Graph & g, const SearchOptions & o) { return zt_number(g, 1, o).value; }
std::optional<int> fpt1(const Graph & g, const SearchOptions & o) { return fpt_number(g, o).value; }
std::optional<int> pt1(const Graph & g, const SearchOptions & o) { return pt_number(g, o).value; }

// Delta tables ------------------------------------------------------------------

Body delta_claim(std::string fixture_name, OpKind op, std::vector<std::pair<std::string, std::pair<Edge, int>>> rows)
{
    return [=](const Context & ctx, Outcome & out) {
        const Graph g = fixture(fixture_name);
        const auto report = delta_table(g, {op}, ctx.options());
        for (const auto & [label, spec] : rows) {
            const auto & [operand, want] = spec;
            auto it = std::find_if(report.rows.begin(), report.rows.end(), [&](const DeltaRow & r) {
                return r.operand == operand || r.operand == Edge{operand.second, operand.first};
            });
            std::optional<int> got = it == report.rows.end() ? std::nullopt : it->delta;
            out.expect(got == want, [&] {
                return fixture_name + " " + std::string(to_string(op)) + " " + label + "=(" + std::to_string(operand.first) + ","
                    + std::to_string(operand.second) + "): expected delta " + std::to_string(want) + ", got " + show(got)
                    + " (Zt(G)=" + show(report.base) + ", Zt(derived)=" + show(it == report.rows.end() ? std::nullopt : it->value) + ")";
            });
        }
        out.instances = fixture_name + " rows " + std::to_string(rows.size());
    };
}

// Exhaustive helpers ---------------------------------------------------------------

std::vector<bool> fault_tolerant_masks(const Graph & g, int k)
{
    const std::uint64_t count = std::uint64_t{1} << g.order();
    std::vector<bool> ft(count, false);
    for (std::uint64_t m = 0; m < count; ++m) {
        VertexSet b(m);
        ft[m] = b.size() >= k && is_k_fault_tolerant(g, b, k);
    }
    return ft;
}

std::vector<Claim> registry()
{
    std::vector<Claim> claims;
    auto add = [&](std::string id, std::string statement, std::string note, Body body) {
        claims.push_back({std::move(id), std::move(statement), std::move(note), std::move(body)});
    };

    // Families
    add("thm.families.path", "Zt(P_n) = 2 for n >= 2", "",
        family_claim(FamilyKind::Path, 2, 12, zt1, [](int) { return 2; }));
    add("thm.families.complete", "Zt(K_n) = n for n >= 2", "",
        family_claim(FamilyKind::Complete, 2, 8, zt1, [](int n) { return n; }));
    add("thm.families.cycle", "Zt(C_n) = 4 for n >= 4", "",
        family_claim(FamilyKind::Cycle, 4, 12, zt1, [](int) { return 4; }));
    add("thm.families.star", "Zt(K_{1,n}) = n for n >= 3", "",
        family_claim(FamilyKind::Star, 3, 8, zt1, [](int n) { return n; }));
    add("thm.families.wheel", "Zt(W_n) = 5 for n >= 5", "W_4 = K_4 is covered by thm.families.complete",
        family_claim(FamilyKind::Wheel, 5, 10, zt1, [](int) { return 5; }));
    add("thm.families.complete_multi_fault", "Zt^k(K_n) does not exist for k >= 2", "",
        [](const Context & ctx, Outcome & out) {
            for (int n = 2; n <= 8; ++n)
                for (int k = 2; k <= 3; ++k) {
                    auto got = zt_number(generate({FamilyKind::Complete, n, 0, 0}), k, ctx.options()).value;
                    out.expect(!got, [&] { return "K_" + std::to_string(n) + " k=" + std::to_string(k) + ": got " + show(got); });
                }
            out.instances = "n=2..8, k=2..3";
        });

    // Propagation time
    add("prop.fpt.path", "fpt(P_n) = n - 1 for n >= 2", "",
        family_claim(FamilyKind::Path, 2, 10, fpt1, [](int n) { return n - 1; }));
    add("prop.fpt.cycle", "fpt(C_n) = ceil((n - 3) / 2) for n >= 4", "",
        family_claim(FamilyKind::Cycle, 4, 12, fpt1, [](int n) { return ceil_half(n - 3); }));
    add("prop.fpt.complete", "fpt(K_n) = 1 for n >= 2", "",
        family_claim(FamilyKind::Complete, 2, 8, fpt1, [](int) { return 1; }));
    add("prop.fpt.star", "fpt(K_{1,n}) = 2 for n >= 3",
        "value confirmed as 2: the center is forced first, the faulted leaf second",
        family_claim(FamilyKind::Star, 3, 8, fpt1, [](int) { return 2; }));
    add("prop.fpt.wheel", "fpt(W_n) = ceil((n - 2) / 2) for n >= 5", "",
        family_claim(FamilyKind::Wheel, 5, 10, fpt1, [](int n) { return ceil_half(n - 2); }));
    add("fact.pt.wheel", "pt(W_n) = ceil((n - 3) / 2) for n >= 4", "",
        family_claim(FamilyKind::Wheel, 4, 10, pt1, [](int n) { return ceil_half(n - 3); }));

    // Example tables (fixture ids are figure labels minus one)
    add("ex.delta.fig5", "Zt(G) - Zt(G - e) = 0, 1, -1, -2 for edges a, b, c, d of fig5_gme", "",
        delta_claim("fig5_gme", OpKind::DeleteEdge,
            {{"a", {{0, 1}, 0}}, {"b", {{1, 2}, 1}}, {"c", {{3, 4}, -1}}, {"d", {{2, 3}, -2}}}));
    add("ex.delta.fig6a", "Zt(G) - Zt(G / e) = -2, -1, 0, 1 for edges a, b, c, d of fig6a_contract",
        "fixture edge list follows the drawing (edge 2-5)",
        delta_claim("fig6a_contract", OpKind::ContractEdge,
            {{"a", {{2, 3}, -2}}, {"b", {{2, 5}, -1}}, {"c", {{0, 4}, 0}}, {"d", {{3, 6}, 1}}}));
    add("ex.delta.fig6b", "Zt(H) - Zt(H / f) = 2 for the diamond's diagonal f", "",
        delta_claim("fig6b_diamond", OpKind::ContractEdge, {{"f", {{1, 2}, 2}}}));
    add("ex.delta.fig7", "Zt(G) - Zt(G - v) = 0, 1, 2 for v = 5, 1, 2 of the house graph", "",
        delta_claim("fig1_house", OpKind::DeleteVertex, {{"5", {{4, 4}, 0}}, {"1", {{0, 0}, 1}}, {"2", {{1, 1}, 2}}}));
    add("ex.delta.c4", "Zt(C_4) - Zt(C_4 - e) = 2 for every edge", "",
        [](const Context & ctx, Outcome & out) {
            const auto report = delta_table(generate({FamilyKind::Cycle, 4, 0, 0}), {OpKind::DeleteEdge}, ctx.options());
            for (const auto & r : report.rows)
                out.expect(r.delta == 2, [&] { return "C_4 edge (" + std::to_string(r.operand.first) + "," + std::to_string(r.operand.second) + "): delta " + show(r.delta); });
            out.instances = "4 edges";
        });

    // Fixture facts
    add("ex.fig2.mummal", "fig2_mummal: minimum ZFSs are {1,3},{2,4},{3,5},{4,6}; Zt = 4 via {1,2,5,6}, which contains none of them", "",
        [](const Context & ctx, Outcome & out) {
            const Graph g = fixture("fig2_mummal");
            const auto z = zf_number(g, ctx.options());
            const std::vector<VertexSet> want{{0, 2}, {1, 3}, {2, 4}, {3, 5}};
            out.expect(z.witnesses == want, [&] { return "minimum ZFS list differs; first got " + z.witnesses.front().to_string(); });
            const auto zt = zt_number(g, 1, ctx.options());
            out.expect(zt.value == 4, [&] { return "Zt = " + show(zt.value); });
            const VertexSet b{0, 1, 4, 5};
            out.expect(std::find(zt.witnesses.begin(), zt.witnesses.end(), b) != zt.witnesses.end(), [&] { return "{0,1,4,5} is not a minimum FT set"; });
            for (auto m : want)
                out.expect(!m.subset_of(b), [&] { return m.to_string() + " is inside {0,1,4,5}"; });
            out.instances = "fig2_mummal";
        });
    add("ex.fig3.caterpillar", "fig3_caterpillar has 5 leaves and Zt = 4 via {1,2,6,7}", "",
        [](const Context & ctx, Outcome & out) {
            const Graph g = fixture("fig3_caterpillar");
            out.expect(leaves(g) == VertexSet{0, 1, 5, 6, 7}, [&] { return "leaves " + leaves(g).to_string(); });
            const auto zt = zt_number(g, 1, ctx.options());
            out.expect(zt.value == 4, [&] { return "Zt = " + show(zt.value); });
            out.expect(zt.witnesses == std::vector<VertexSet>{{0, 1, 5, 6}}, [&] { return "witnesses differ"; });
            out.instances = "fig3_caterpillar";
        });
    add("ex.p7.minimal", "P_7 has minimal ZFSs {v1},{v7},{v2,v3},{v3,v4},{v4,v5},{v5,v6} and no others", "",
        [](const Context & ctx, Outcome & out) {
            const auto got = enumerate_minimal_zfs(generate({FamilyKind::Path, 7, 0, 0}), ctx.options());
            const std::vector<VertexSet> want{{0}, {6}, {1, 2}, {2, 3}, {3, 4}, {4, 5}};
            out.expect(got == want, [&] {
                std::string s;
                for (auto b : got)
                    s += b.to_string();
                return "got " + s;
            });
            out.instances = "P_7";
        });
    add("ex.fig4.ftcover", "fig4 tree: P(T) = 2 and the red cover P_5 + 2K_1 yields the fault tolerant set {1,5,6,7}",
        "fault tolerant path cover value taken as 2 * (multi-vertex paths) + singletons",
        [](const Context &, Outcome & out) {
            const Graph t = fixture("fig4_ftcover_tree");
            out.expect(path_cover_number(t).value == 2, [&] { return "P(T) = " + std::to_string(path_cover_number(t).value); });
            const PathCover red{{{0, 1, 2, 3, 4}, {5}, {6}}};
            const VertexSet b = ft_set_from_cover(t, red);
            out.expect(b == VertexSet{0, 4, 5, 6}, [&] { return "set " + b.to_string(); });
            out.expect(is_k_fault_tolerant(t, b, 1), [&] { return b.to_string() + " not fault tolerant"; });
            auto pt = ft_path_cover_value(t);
            out.expect(pt && pt->value == 4, [&] { return "cover value " + show(pt ? std::optional<int>(pt->value) : std::nullopt); });
            out.instances = "fig4_ftcover_tree";
        });
    add("ex.spider", "spider with n legs of length 2: Zt = n and Zt(G - center) = 2n",
        "generalized star read as a spider with legs of length 2; values from the naive oracle",
        [](const Context &, Outcome & out) {
            for (int legs = 2; legs <= 4; ++legs) {
                const Graph g = generate({FamilyKind::Spider, 0, legs, 2});
                const auto whole = oracle::zt(g).value;
                const auto cut = oracle::zt(delete_vertex(g, 0).graph).value;
                out.expect(whole == legs && cut == 2 * legs, [&] {
                    return "legs=" + std::to_string(legs) + ": Zt=" + show(whole) + " Zt(G-center)=" + show(cut);
                });
            }
            out.instances = "legs=2..4";
        });

    // Structural properties over the pools
    add("obs.lower_bound", "Zt^k(G) >= Z(G) + k whenever it exists", "",
        [](const Context & ctx, Outcome & out) {
            for (const Graph * g : ctx.pool())
                for (int k = 1; k <= 2; ++k) {
                    const auto zt = zt_number(*g, k, ctx.options()).value;
                    const int z = *zf_number(*g, ctx.options()).value;
                    out.expect(!zt || *zt >= z + k, [&] { return describe(*g) + " k=" + std::to_string(k) + " Zt=" + show(zt) + " Z=" + std::to_string(z); });
                }
            out.instances = std::to_string(ctx.pool().size()) + " graphs, k=1,2";
        });
    add("obs.superset_monotone", "supersets of k-fault tolerant sets are k-fault tolerant", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(8);
            for (const Graph * g : graphs)
                for (int k = 1; k <= 2; ++k) {
                    const auto ft = fault_tolerant_masks(*g, k);
                    for (std::uint64_t m = 0; m < ft.size(); ++m) {
                        if (!ft[m])
                            continue;
                        for (Vertex v : g->vertices() - VertexSet(m))
                            out.expect(ft[m | (std::uint64_t{1} << v)], [&] {
                                return describe(*g) + " k=" + std::to_string(k) + " B=" + VertexSet(m).to_string() + " v=" + std::to_string(v);
                            });
                    }
                }
            out.instances = std::to_string(graphs.size()) + " graphs with n <= 8, all subsets, k=1,2";
        });
    add("obs.minimal_containment", "every fault tolerant set contains a minimal zero forcing set", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(8);
            for (const Graph * g : graphs) {
                const auto minimal = enumerate_minimal_zfs(*g, ctx.options());
                const auto ft = fault_tolerant_masks(*g, 1);
                for (std::uint64_t m = 0; m < ft.size(); ++m)
                    if (ft[m])
                        out.expect(std::any_of(minimal.begin(), minimal.end(), [&](VertexSet s) { return s.subset_of(VertexSet(m)); }),
                            [&] { return describe(*g) + " B=" + VertexSet(m).to_string(); });
            }
            out.instances = std::to_string(graphs.size()) + " graphs with n <= 8, all fault tolerant sets";
        });
    add("thm.minimal_intersection", "in a connected graph on >= 2 vertices no vertex lies in every minimal ZFS", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(10);
            for (const Graph * g : graphs) {
                VertexSet common = g->vertices();
                for (auto s : enumerate_minimal_zfs(*g, ctx.options()))
                    common &= s;
                out.expect(common.empty(), [&] { return describe(*g) + " common " + common.to_string(); });
            }
            out.instances = std::to_string(graphs.size()) + " connected graphs";
        });
    add("thm.existence", "for connected G, Zt(G) exists iff G is not K_1", "",
        [](const Context & ctx, Outcome & out) {
            out.expect(!zt_number(Graph(1, {}), 1, ctx.options()).exists(), [] { return "Zt(K_1) exists"; });
            for (const Graph * g : ctx.pool())
                out.expect(zt_number(*g, 1, ctx.options()).exists(), [&] { return describe(*g) + " has no Zt"; });
            out.instances = "K_1 and " + std::to_string(ctx.pool().size()) + " connected graphs";
        });
    add("obs.components", "Zt is additive over connected components when every component has one", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(6);
            int unions = 0;
            for (std::size_t i = 0; i + 1 < graphs.size() && unions < 60; i += 2, ++unions) {
                const Graph u = disjoint_union(*graphs[i], *graphs[i + 1]);
                const auto a = zt_number(*graphs[i], 1, ctx.options()).value;
                const auto b = zt_number(*graphs[i + 1], 1, ctx.options()).value;
                const auto whole = zt_number(u, 1, ctx.options()).value;
                if (a && b)
                    out.expect(whole == *a + *b, [&] { return describe(u) + " Zt=" + show(whole) + " parts " + show(a) + "+" + show(b); });
                // also check the per-component decomposition routine agrees
                int sum = 0;
                for (const auto & c : components(u))
                    sum += zt_number(c.graph, 1, ctx.options()).value.value_or(-1000);
                if (a && b)
                    out.expect(sum == *whole, [&] { return describe(u) + " component sum " + std::to_string(sum); });
            }
            out.instances = std::to_string(unions) + " disjoint unions";
        });
    add("obs.order_k", "Zt^k(G) does not exist when |V(G)| = k", "",
        [](const Context & ctx, Outcome & out) {
            int count = 0;
            for (int k = 1; k <= 3; ++k) {
                std::vector<Edge> pairs;
                for (Vertex u = 0; u < k; ++u)
                    for (Vertex v = u + 1; v < k; ++v)
                        pairs.emplace_back(u, v);
                for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
                    std::vector<Edge> edges;
                    for (std::size_t i = 0; i < pairs.size(); ++i)
                        if ((m >> i) & 1U)
                            edges.push_back(pairs[i]);
                    const Graph g(k, edges);
                    ++count;
                    out.expect(!zt_number(g, k, ctx.options()).exists(), [&] { return describe(g) + " k=" + std::to_string(k); });
                }
            }
            out.instances = std::to_string(count) + " labelled graphs with n = k <= 3";
        });

    // Twins
    add("thm.twins.membership", "twins: both lie in every fault tolerant set, at least one in every ZFS", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(8);
            int pairs = 0;
            for (const Graph * g : graphs) {
                const auto tw = twins(*g);
                if (tw.empty())
                    continue;
                pairs += static_cast<int>(tw.size());
                const auto ft = fault_tolerant_masks(*g, 1);
                for (std::uint64_t m = 0; m < ft.size(); ++m) {
                    const VertexSet b(m);
                    const bool forcing = is_zfs(*g, b);
                    for (const auto & t : tw) {
                        if (ft[m])
                            out.expect(b.contains(t.u) && b.contains(t.v), [&] { return describe(*g) + " FT set " + b.to_string() + " misses a twin"; });
                        if (forcing)
                            out.expect(b.contains(t.u) || b.contains(t.v), [&] { return describe(*g) + " ZFS " + b.to_string() + " misses both twins"; });
                    }
                }
            }
            out.instances = std::to_string(pairs) + " twin pairs, all subsets";
        });
    add("cor.twins.multi_fault", "a graph with twins has no k-fault tolerant set for k >= 2", "",
        [](const Context & ctx, Outcome & out) {
            int hits = 0;
            for (const Graph * g : ctx.pool(9)) {
                if (twins(*g).empty())
                    continue;
                ++hits;
                out.expect(!zt_number(*g, 2, ctx.options()).exists(), [&] { return describe(*g) + " has Zt^2"; });
            }
            out.instances = std::to_string(hits) + " graphs with twins";
        });
    add("thm.twins.deletion", "0 <= Zt(G) - Zt(G - v) <= 2 for a twin v", "",
        [](const Context & ctx, Outcome & out) {
            int hits = 0;
            for (const Graph * g : ctx.pool()) {
                const auto base = zt_number(*g, 1, ctx.options()).value;
                for (const auto & t : twins(*g))
                    for (Vertex v : {t.u, t.v}) {
                        const auto cut = zt_number(delete_vertex(*g, v).graph, 1, ctx.options()).value;
                        if (!base || !cut)
                            continue;
                        ++hits;
                        const int d = *base - *cut;
                        out.expect(d >= 0 && d <= 2, [&] { return describe(*g) + " v=" + std::to_string(v) + " delta " + std::to_string(d); });
                    }
            }
            out.instances = std::to_string(hits) + " twin deletions with both values";
        });

    // Operations
    auto op_bounds = [](OpKind op, int lo, int hi) {
        return [=](const Context & ctx, Outcome & out) {
            int rows = 0;
            for (const Graph * g : ctx.pool()) {
                for (const auto & r : delta_table(*g, {op}, ctx.options()).rows) {
                    if (!r.delta)
                        continue;
                    ++rows;
                    out.expect(*r.delta >= lo && *r.delta <= hi, [&] {
                        return describe(*g) + " " + std::string(to_string(op)) + " (" + std::to_string(r.operand.first) + ","
                            + std::to_string(r.operand.second) + ") delta " + std::to_string(*r.delta);
                    });
                }
            }
            out.instances = std::to_string(rows) + " operations with both values";
        };
    };
    add("thm.ops.delete_edge", "-2 <= Zt(G) - Zt(G - e) <= 2", "", op_bounds(OpKind::DeleteEdge, -2, 2));
    add("thm.ops.contract_edge", "-2 <= Zt(G) - Zt(G / e) <= 2", "", op_bounds(OpKind::ContractEdge, -2, 2));
    add("thm.ops.delete_vertex", "Zt(G) - Zt(G - v) <= 2", "", op_bounds(OpKind::DeleteVertex, std::numeric_limits<int>::min(), 2));

    // Trees
    add("thm.trees.path_cover", "P(T) = Z(T) for every tree", "",
        [](const Context & ctx, Outcome & out) {
            for (const auto & t : ctx.trees) {
                const int p = path_cover_number(t).value;
                const int z = *zf_number(t, ctx.options()).value;
                out.expect(p == z, [&] { return describe(t) + " P=" + std::to_string(p) + " Z=" + std::to_string(z); });
            }
            out.instances = std::to_string(ctx.trees.size()) + " trees";
        });
    add("thm.trees.leaves_ft", "the leaves of a tree form a fault tolerant set, so Zt(T) <= l(T)", "",
        [](const Context & ctx, Outcome & out) {
            for (const auto & t : ctx.trees) {
                const auto lb = leaf_bound_check(t);
                const auto zt = zt_number(t, 1, ctx.options()).value;
                out.expect(lb.leaves_fault_tolerant && zt && *zt <= lb.leaf_count,
                    [&] { return describe(t) + " leaves FT=" + std::to_string(lb.leaves_fault_tolerant) + " Zt=" + show(zt); });
            }
            out.instances = std::to_string(ctx.trees.size()) + " trees";
        });
    add("prop.trees.ft_cover", "Zt(T) <= fault tolerant path cover value, and the constructed set is fault tolerant",
        "fault tolerant path cover value taken as 2 * (multi-vertex paths) + singletons",
        [](const Context & ctx, Outcome & out) {
            for (const auto & t : ctx.trees) {
                const auto cover = ft_path_cover_value(t);
                const auto zt = zt_number(t, 1, ctx.options()).value;
                const VertexSet b = ft_set_from_cover(t, cover->cover);
                out.expect(b.size() == cover->value, [&] { return describe(t) + " set size " + std::to_string(b.size()); });
                out.expect(is_k_fault_tolerant(t, b, 1), [&] { return describe(t) + " set " + b.to_string() + " not FT"; });
                out.expect(zt && *zt <= cover->value, [&] { return describe(t) + " Zt=" + show(zt) + " cover=" + std::to_string(cover->value); });
            }
            out.instances = std::to_string(ctx.trees.size()) + " trees";
        });
    add("fact.trees.leaf_zfs", "every tree has a zero forcing set made of leaves only", "",
        [](const Context & ctx, Outcome & out) {
            for (const auto & t : ctx.trees) {
                const VertexSet ls = leaves(t);
                bool found = false;
                for (std::uint64_t sub = ls.bits();; sub = (sub - 1) & ls.bits()) {
                    if (is_zfs(t, VertexSet(sub))) {
                        found = true;
                        break;
                    }
                    if (sub == 0)
                        break;
                }
                out.expect(found, [&] { return describe(t); });
            }
            out.instances = std::to_string(ctx.trees.size()) + " trees";
        });

    // Cross-checks
    add("check.oracle", "pruned search agrees with the naive oracle on Z, Zt, pt, fpt", "",
        [](const Context & ctx, Outcome & out) {
            const auto graphs = ctx.pool(std::min(9, oracle::kOracleLimit));
            for (const Graph * g : graphs) {
                auto same = [&](const ParamResult & a, const ParamResult & b) {
                    out.expect(a.value == b.value && a.witnesses == b.witnesses, [&] {
                        return describe(*g) + " " + std::string(to_string(a.parameter)) + ": search " + show(a.value) + " oracle " + show(b.value);
                    });
                };
                same(zf_number(*g, ctx.options()), oracle::zf(*g));
                same(zt_number(*g, 1, ctx.options()), oracle::zt(*g, 1));
                same(pt_number(*g, ctx.options()), oracle::pt(*g));
                same(fpt_number(*g, ctx.options()), oracle::fpt(*g));
            }
            out.instances = std::to_string(graphs.size()) + " graphs";
        });
    add("check.closure_order", "layered and one-at-a-time closure reach the same final set", "",
        [](const Context & ctx, Outcome & out) {
            std::mt19937_64 gen(ctx.seed ^ 0x9e3779b97f4a7c15ULL);
            std::mt19937 pick(static_cast<std::mt19937::result_type>(ctx.seed));
            for (int i = 0; i < ctx.limits.closure_pairs; ++i) {
                const int n = std::uniform_int_distribution<int>(1, ctx.limits.closure_max_order)(gen);
                std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.6)(gen));
                std::vector<Edge> edges;
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v)
                        if (coin(gen))
                            edges.emplace_back(u, v);
                const Graph g(n, edges);
                const VertexSet b(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(gen));
                const auto layered = closure(g, b).final;
                const auto sequential = oracle::sequential_closure(g, b, &pick);
                out.expect(layered == sequential, [&] { return describe(g) + " B=" + b.to_string(); });
            }
            out.instances = std::to_string(ctx.limits.closure_pairs) + " random (graph, set) pairs";
        });

    std::sort(claims.begin(), claims.end(), [](const Claim & a, const Claim & b) { return a.id < b.id; });
    return claims;
}

} // namespace

std::vector<std::string> claim_ids()
{
    std::vector<std::string> ids;
    for (const auto & c : registry())
        ids.push_back(c.id);
    return ids;
}

std::vector<ClaimReport> run_suite(std::string_view scope, const Limits & limits, std::uint64_t seed, int jobs)
{
    std::vector<Claim> selected;
    for (auto & c : registry())
        if (scope_matches(scope, c.id))
            selected.push_back(std::move(c));

    Context ctx;
    ctx.limits = limits;
    ctx.seed = seed;
    ctx.randoms = random_connected_pool(seed, limits.random_graphs, limits.random_max_order);
    ctx.trees = tree_pool(limits.tree_max_order);
    for (const auto & name : fixture_names())
        ctx.fixtures.push_back(fixture(name));

    std::vector<ClaimReport> reports(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++) {
            const auto & claim = selected[i];
            const auto start = std::chrono::steady_clock::now();
            Outcome out;
            ClaimReport & r = reports[i];
            r.id = claim.id;
            r.statement = claim.statement;
            r.note = claim.note;
            try {
                claim.body(ctx, out);
                r.status = !out.counterexample.empty() ? Status::Fail : out.checked == 0 ? Status::Skipped : Status::Pass;
                r.counterexample = out.counterexample;
            }
            catch (const Error & e) {
                r.status = e.kind() == ErrorKind::SizeLimit ? Status::Skipped : Status::Fail;
                r.counterexample = e.what();
            }
            r.instances = out.instances;
            if (!out.skipped.empty()) {
                std::string s = "skipped above size limit:";
                for (const auto & x : out.skipped)
                    s += " " + x;
                r.note = r.note.empty() ? s : r.note + "; " + s;
            }
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
    };
    const int workers = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(selected.size(), 1)));
    {
        std::vector<std::jthread> pool;
        for (int t = 1; t < workers; ++t)
            pool.emplace_back(worker);
        worker();
    }
    return reports;
}

} // namespace ftzf::verify
