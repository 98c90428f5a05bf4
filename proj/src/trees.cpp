#include "ftzf/trees.hpp"

#include "ftzf/search.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace ftzf {

int PathCover::singletons() const
{
    return static_cast<int>(std::count_if(paths.begin(), paths.end(), [](const auto & p) { return p.size() == 1; }));
}

int PathCover::multi_vertex_paths() const
{
    return static_cast<int>(paths.size()) - singletons();
}

namespace {

void require_tree(const Graph & t)
{
    if (!is_tree(t))
        throw Error(ErrorKind::NotATree, "graph of order " + std::to_string(t.order()) + " is not a tree");
}

/// Paths formed by a set of kept tree edges in which every vertex has at most
/// two kept edges. Each path starts at its smaller endpoint; paths are sorted.
PathCover cover_from_edges(const Graph & t, const std::vector<VertexSet> & kept)
{
    PathCover cover;
    VertexSet seen;
    for (Vertex s = 0; s < t.order(); ++s) {
        if (seen.contains(s) || kept[static_cast<std::size_t>(s)].size() > 1)
            continue;
        std::vector<Vertex> path{s};
        seen.insert(s);
        Vertex prev = -1, cur = s;
        while (true) {
            VertexSet next = kept[static_cast<std::size_t>(cur)];
            if (prev >= 0)
                next.erase(prev);
            if (next.empty())
                break;
            prev = cur;
            cur = next.first();
            path.push_back(cur);
            seen.insert(cur);
        }
        cover.paths.push_back(std::move(path));
    }
    std::sort(cover.paths.begin(), cover.paths.end());
    return cover;
}

/// Tree DP over "which child edges continue the path through v". Minimizes
/// path_weight * (multi-vertex paths) + singleton_weight * (singletons).
///
/// With k kept edges there are n - k paths, so the objective equals
/// path_weight * (n - k) + (singleton_weight - path_weight) * singletons,
/// which decomposes per vertex: each kept edge to a child earns
/// -path_weight and each vertex with no kept edge earns the difference.
CoverValue optimal_cover(const Graph & t, int path_weight, int singleton_weight)
{
    const int n = t.order();
    std::vector<Vertex> order{0}, parent(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex c : t.adj(order[i]))
            if (c != parent[static_cast<std::size_t>(order[i])]) {
                parent[static_cast<std::size_t>(c)] = order[i];
                order.push_back(c);
            }

    // best[v][p]: cost of v's subtree given p = edge to parent kept.
    std::vector<std::array<int, 2>> best(static_cast<std::size_t>(n));
    std::vector<std::array<std::vector<Vertex>, 2>> chosen(static_cast<std::size_t>(n));
    const int alone = singleton_weight - path_weight;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex v = *it;
        int base = 0;
        std::vector<std::pair<int, Vertex>> gains;
        for (Vertex c : t.adj(v)) {
            if (c == parent[static_cast<std::size_t>(v)])
                continue;
            const auto & bc = best[static_cast<std::size_t>(c)];
            base += bc[0];
            gains.emplace_back(bc[1] - path_weight - bc[0], c);
        }
        std::sort(gains.begin(), gains.end());
        for (int p = 0; p < 2; ++p) {
            int cost = base + (p == 0 ? alone : 0);
            std::vector<Vertex> pick;
            int running = base;
            for (int take = 1; take <= 2 - p && take <= static_cast<int>(gains.size()); ++take) {
                running += gains[static_cast<std::size_t>(take - 1)].first;
                if (running < cost) {
                    cost = running;
                    pick.clear();
                    for (int i = 0; i < take; ++i)
                        pick.push_back(gains[static_cast<std::size_t>(i)].second);
                }
            }
            best[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)] = cost;
            chosen[static_cast<std::size_t>(v)][static_cast<std::size_t>(p)] = std::move(pick);
        }
    }

    std::vector<VertexSet> kept(static_cast<std::size_t>(n));
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    for (Vertex v : order)
        for (Vertex c : chosen[static_cast<std::size_t>(v)][static_cast<std::size_t>(state[static_cast<std::size_t>(v)])]) {
            kept[static_cast<std::size_t>(v)].insert(c);
            kept[static_cast<std::size_t>(c)].insert(v);
            state[static_cast<std::size_t>(c)] = 1;
        }
    return {path_weight * n + best[0][0], cover_from_edges(t, kept)};
}

std::string canonical_rooted(const Graph & t, Vertex v, Vertex parent)
{
    std::vector<std::string> kids;
    for (Vertex c : t.adj(v))
        if (c != parent)
            kids.push_back(canonical_rooted(t, c, v));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (auto & k : kids)
        out += k;
    return out + ")";
}

/// Isomorphism-invariant encoding: AHU string rooted at the center, or the
/// smaller of the two encodings for a bicentral tree.
std::string canonical_tree(const Graph & t)
{
    VertexSet remaining = t.vertices();
    std::vector<int> degree(static_cast<std::size_t>(t.order()));
    for (Vertex v = 0; v < t.order(); ++v)
        degree[static_cast<std::size_t>(v)] = t.adj(v).size();
    while (remaining.size() > 2) {
        VertexSet peel;
        for (Vertex v : remaining)
            if (degree[static_cast<std::size_t>(v)] <= 1)
                peel.insert(v);
        for (Vertex v : peel)
            for (Vertex w : t.adj(v) & remaining)
                --degree[static_cast<std::size_t>(w)];
        remaining -= peel;
    }
    std::string best;
    for (Vertex c : remaining) {
        auto s = canonical_rooted(t, c, -1);
        if (best.empty() || s < best)
            best = s;
    }
    return best;
}

} // namespace

void validate_cover(const Graph & t, const PathCover & cover)
{
    VertexSet seen;
    for (const auto & path : cover.paths) {
        if (path.empty())
            throw Error(ErrorKind::InvalidCover, "empty path");
        for (std::size_t i = 0; i < path.size(); ++i) {
            const Vertex v = path[i];
            if (v < 0 || v >= t.order())
                throw Error(ErrorKind::InvalidCover, "vertex " + std::to_string(v) + " outside the tree");
            if (seen.contains(v))
                throw Error(ErrorKind::InvalidCover, "vertex " + std::to_string(v) + " covered twice");
            seen.insert(v);
            if (i > 0 && !t.adj(path[i - 1]).contains(v))
                throw Error(ErrorKind::InvalidCover,
                    "consecutive vertices " + std::to_string(path[i - 1]) + "," + std::to_string(v) + " are not adjacent");
        }
    }
    if (seen != t.vertices())
        throw Error(ErrorKind::InvalidCover, "cover misses vertices " + (t.vertices() - seen).to_string());
}

CoverValue path_cover_number(const Graph & t)
{
    require_tree(t);
    return optimal_cover(t, 1, 1);
}

std::optional<CoverValue> ft_path_cover_value(const Graph & t)
{
    require_tree(t);
    if (t.order() < 2)
        return std::nullopt;
    return optimal_cover(t, 2, 1);
}

VertexSet ft_set_from_cover(const Graph & t, const PathCover & cover)
{
    validate_cover(t, cover);
    if (t.order() < 2)
        throw Error(ErrorKind::InvalidCover, "a single vertex has no fault tolerant set");
    VertexSet b;
    for (const auto & path : cover.paths) {
        b.insert(path.front());
        b.insert(path.back());
    }
    return b;
}

LeafBound leaf_bound_check(const Graph & t)
{
    require_tree(t);
    const VertexSet ls = leaves(t);
    return {ls.size(), !ls.empty() && is_k_fault_tolerant(t, ls, 1)};
}

std::vector<PathCover> all_path_covers(const Graph & t)
{
    require_tree(t);
    const auto edges = t.edges();
    std::vector<PathCover> out;
    const std::uint64_t count = std::uint64_t{1} << edges.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        std::vector<VertexSet> kept(static_cast<std::size_t>(t.order()));
        bool ok = true;
        for (std::size_t i = 0; i < edges.size() && ok; ++i) {
            if (!((mask >> i) & 1U))
                continue;
            auto [u, v] = edges[i];
            kept[static_cast<std::size_t>(u)].insert(v);
            kept[static_cast<std::size_t>(v)].insert(u);
            ok = kept[static_cast<std::size_t>(u)].size() <= 2 && kept[static_cast<std::size_t>(v)].size() <= 2;
        }
        if (ok)
            out.push_back(cover_from_edges(t, kept));
    }
    return out;
}

std::vector<Graph> all_trees(int n)
{
    if (n < 1)
        return {};
    std::map<std::string, Graph> level{{"()", Graph(1, {})}};
    for (int m = 2; m <= n; ++m) {
        std::map<std::string, Graph> next;
        for (const auto & [key, t] : level)
            for (Vertex v = 0; v < t.order(); ++v) {
                auto edges = t.edges();
                edges.emplace_back(v, t.order());
                Graph grown(m, edges);
                next.try_emplace(canonical_tree(grown), std::move(grown));
            }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (auto & [key, t] : level)
        out.push_back(std::move(t));
    return out;
}

} // namespace ftzf
