#include "ftzf/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>

namespace ftzf {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::LoopRejected: return "LoopRejected";
    case ErrorKind::InvalidFamilyParameter: return "InvalidFamilyParameter";
    case ErrorKind::UnknownFixture: return "UnknownFixture";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::InvalidFaultBudget: return "InvalidFaultBudget";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::NotFaultTolerant: return "NotFaultTolerant";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::InvalidCover: return "InvalidCover";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

std::string VertexSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (Vertex v : *this) {
        if (!first)
            s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

bool lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
        if (*ia != *ib)
            return *ia < *ib;
    return ia == a.end() && ib != b.end();
}

// ---------------------------------------------------------------------------

Graph::Graph(int order, const std::vector<Edge> & edges)
{
    if (order < 0 || order > kMaxOrder)
        throw Error(ErrorKind::InvalidVertex, "order " + std::to_string(order) + " outside [0, 64]");
    adj_.assign(static_cast<std::size_t>(order), VertexSet{});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw Error(ErrorKind::InvalidVertex,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") in graph of order " + std::to_string(order));
        if (u == v)
            throw Error(ErrorKind::LoopRejected, "loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].insert(v);
        adj_[static_cast<std::size_t>(v)].insert(u);
    }
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= order())
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " in graph of order " + std::to_string(order()));
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    for (auto s : adj_)
        twice += static_cast<std::size_t>(s.size());
    return twice / 2;
}

VertexSet Graph::neighbors(Vertex v) const
{
    check_vertex(v);
    return adj(v);
}

VertexSet Graph::closed_neighborhood(Vertex v) const
{
    check_vertex(v);
    return adj(v).with(v);
}

int Graph::degree(Vertex v) const
{
    check_vertex(v);
    return adj(v).size();
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    return adj(u).contains(v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(int order, const std::vector<Edge> & edges)
{
    return Graph(order, edges);
}

// ---------------------------------------------------------------------------

namespace {

void require(bool ok, const std::string & what)
{
    if (!ok)
        throw Error(ErrorKind::InvalidFamilyParameter, what);
}

Graph from_labels(int order, std::initializer_list<std::pair<int, int>> labelled)
{
    std::vector<Edge> edges;
    for (auto [a, b] : labelled)
        edges.emplace_back(a - 1, b - 1);
    return Graph(order, edges);
}

} // namespace

Graph generate(const FamilySpec & spec)
{
    std::vector<Edge> edges;
    const int n = spec.n;
    switch (spec.kind) {
    case FamilyKind::Path:
        require(n >= 1, "path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i)
            edges.emplace_back(i, i + 1);
        return Graph(n, edges);
    case FamilyKind::Cycle:
        require(n >= 3, "cycle needs n >= 3");
        for (int i = 0; i < n; ++i)
            edges.emplace_back(i, (i + 1) % n);
        return Graph(n, edges);
    case FamilyKind::Complete:
        require(n >= 1, "complete graph needs n >= 1");
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                edges.emplace_back(i, j);
        return Graph(n, edges);
    case FamilyKind::Star:
        require(n >= 1, "star needs at least one leaf");
        require(n + 1 <= kMaxOrder, "star too large");
        for (int i = 1; i <= n; ++i)
            edges.emplace_back(0, i);
        return Graph(n + 1, edges);
    case FamilyKind::Wheel:
        require(n >= 4, "wheel needs n >= 4");
        for (int i = 1; i < n; ++i) {
            edges.emplace_back(0, i);
            edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
        }
        return Graph(n, edges);
    case FamilyKind::Spider: {
        require(spec.legs >= 1 && spec.leg_length >= 1, "spider needs legs >= 1 and leg length >= 1");
        const int order = 1 + spec.legs * spec.leg_length;
        require(order <= kMaxOrder, "spider too large");
        Vertex next = 1;
        for (int leg = 0; leg < spec.legs; ++leg) {
            Vertex prev = 0;
            for (int i = 0; i < spec.leg_length; ++i) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
        }
        return Graph(order, edges);
    }
    }
    throw Error(ErrorKind::InvalidFamilyParameter, "unknown family");
}

FamilySpec parse_family(std::string_view text)
{
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = text.find(':');
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    auto number = [&](std::size_t i) {
        if (i >= parts.size())
            throw Error(ErrorKind::Parse, "family spec is missing a size parameter");
        int value = 0;
        auto p = parts[i];
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), value);
        if (ec != std::errc{} || ptr != p.data() + p.size())
            throw Error(ErrorKind::Parse, "bad family size '" + std::string(p) + "'");
        return value;
    };
    static const std::map<std::string_view, FamilyKind> kinds = {
        {"path", FamilyKind::Path}, {"cycle", FamilyKind::Cycle}, {"complete", FamilyKind::Complete},
        {"star", FamilyKind::Star}, {"wheel", FamilyKind::Wheel}, {"spider", FamilyKind::Spider},
    };
    auto it = kinds.find(parts[0]);
    if (it == kinds.end())
        throw Error(ErrorKind::Parse, "unknown family '" + std::string(parts[0]) + "'");
    FamilySpec spec;
    spec.kind = it->second;
    if (spec.kind == FamilyKind::Spider) {
        spec.legs = number(1);
        spec.leg_length = number(2);
        spec.n = 1 + spec.legs * spec.leg_length;
        if (parts.size() != 3)
            throw Error(ErrorKind::Parse, "spider spec is spider:<legs>:<length>");
    }
    else {
        spec.n = number(1);
        if (parts.size() != 2)
            throw Error(ErrorKind::Parse, "family spec is <kind>:<n>");
    }
    return spec;
}

std::string to_string(const FamilySpec & spec)
{
    switch (spec.kind) {
    case FamilyKind::Path: return "path:" + std::to_string(spec.n);
    case FamilyKind::Cycle: return "cycle:" + std::to_string(spec.n);
    case FamilyKind::Complete: return "complete:" + std::to_string(spec.n);
    case FamilyKind::Star: return "star:" + std::to_string(spec.n);
    case FamilyKind::Wheel: return "wheel:" + std::to_string(spec.n);
    case FamilyKind::Spider: return "spider:" + std::to_string(spec.legs) + ":" + std::to_string(spec.leg_length);
    }
    return "?";
}

Graph fixture(std::string_view name)
{
    if (name == "fig1_house" || name == "fig7")
        return from_labels(5, {{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}});
    if (name == "fig2_mummal")
        return from_labels(6, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}, {5, 6}});
    if (name == "fig3_caterpillar")
        return from_labels(8, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 8}, {5, 6}, {5, 7}});
    if (name == "fig4_ftcover_tree")
        return from_labels(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {3, 7}});
    if (name == "fig5_gme")
        return from_labels(7, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}});
    if (name == "fig6a_contract")
        return from_labels(8, {{1, 2}, {1, 3}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
                                  {3, 6}, {4, 7}, {4, 8}, {5, 6}, {5, 7}, {5, 8}});
    if (name == "fig6b_diamond")
        return from_labels(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    throw Error(ErrorKind::UnknownFixture, std::string(name));
}

std::vector<std::string> fixture_names()
{
    return {"fig1_house", "fig2_mummal", "fig3_caterpillar", "fig4_ftcover_tree",
        "fig5_gme", "fig6a_contract", "fig6b_diamond"};
}

// ---------------------------------------------------------------------------

Derived induced(const Graph & g, VertexSet keep)
{
    VertexMap map(static_cast<std::size_t>(g.order()));
    int next = 0;
    for (Vertex v : keep)
        map[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (keep.contains(u) && keep.contains(v))
            edges.emplace_back(*map[static_cast<std::size_t>(u)], *map[static_cast<std::size_t>(v)]);
    return {Graph(next, edges), std::move(map)};
}

Derived delete_vertex(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " in graph of order " + std::to_string(g.order()));
    return induced(g, g.vertices().without(v));
}

Graph delete_edge(const Graph & g, Edge e)
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adj(u).contains(v))
        throw Error(ErrorKind::MissingEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<Edge> edges;
    for (auto edge : g.edges())
        if (edge != Edge(std::min(u, v), std::max(u, v)))
            edges.push_back(edge);
    return Graph(g.order(), edges);
}

Graph add_edge(const Graph & g, Edge e)
{
    auto edges = g.edges();
    edges.push_back(e);
    return Graph(g.order(), edges);
}

Derived contract_edge(const Graph & g, Edge e)
{
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adj(u).contains(v))
        throw Error(ErrorKind::MissingEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    // The merged vertex takes the compacted slot of the smaller endpoint.
    const Vertex keep = std::min(u, v), drop = std::max(u, v);
    VertexMap map(static_cast<std::size_t>(g.order()));
    for (Vertex w = 0; w < g.order(); ++w)
        map[static_cast<std::size_t>(w)] = w < drop ? w : w - 1;
    map[static_cast<std::size_t>(drop)] = map[static_cast<std::size_t>(keep)];
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        Vertex x = *map[static_cast<std::size_t>(a)], y = *map[static_cast<std::size_t>(b)];
        if (x != y)
            edges.emplace_back(x, y);
    }
    return {Graph(g.order() - 1, edges), std::move(map)};
}

std::vector<TwinPair> twins(const Graph & g)
{
    std::vector<TwinPair> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.adj(u) == g.adj(v))
                out.push_back({u, v, TwinKind::Independent});
            else if (g.adj(u).with(u) == g.adj(v).with(v))
                out.push_back({u, v, TwinKind::Adjacent});
        }
    return out;
}

std::vector<Component> components(const Graph & g)
{
    std::vector<Component> out;
    VertexSet seen;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen.contains(s))
            continue;
        VertexSet comp{s}, frontier{s};
        while (!frontier.empty()) {
            VertexSet next;
            for (Vertex v : frontier)
                next |= g.adj(v);
            frontier = next - comp;
            comp |= next;
        }
        seen |= comp;
        auto sub = induced(g, comp);
        out.push_back({std::move(sub.graph), comp.to_vector()});
    }
    return out;
}

bool is_connected(const Graph & g)
{
    return components(g).size() <= 1;
}

bool is_tree(const Graph & g)
{
    return g.order() >= 1 && is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

VertexSet leaves(const Graph & g)
{
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.adj(v).size() == 1)
            out.insert(v);
    return out;
}

bool has_isolated_vertex(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.adj(v).empty())
            return true;
    return false;
}

// ---------------------------------------------------------------------------

namespace {

bool skippable(std::string_view line)
{
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

} // namespace

Graph parse_edge_list(std::istream & in)
{
    std::string line;
    int lineno = 0;
    std::optional<int> order;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line))
            continue;
        std::istringstream fields(line);
        auto fail = [&](const std::string & why) {
            throw Error(ErrorKind::Parse, "line " + std::to_string(lineno) + ": " + why);
        };
        if (!order) {
            int n = -1;
            std::string rest;
            if (!(fields >> n) || (fields >> rest) || n < 0)
                fail("expected vertex count");
            if (n > kMaxOrder)
                fail("vertex count exceeds " + std::to_string(kMaxOrder));
            order = n;
            continue;
        }
        long long u = -1, v = -1;
        std::string rest;
        if (!(fields >> u >> v) || (fields >> rest))
            fail("expected 'u v'");
        if (u < 0 || v < 0 || u >= *order || v >= *order)
            throw Error(ErrorKind::InvalidVertex, "line " + std::to_string(lineno) + ": endpoint out of range");
        if (u == v)
            throw Error(ErrorKind::LoopRejected, "line " + std::to_string(lineno) + ": loop at " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (!order)
        throw Error(ErrorKind::Parse, "empty input");
    return Graph(*order, edges);
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph & g)
{
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string to_dot(const Graph & g, VertexSet filled, std::string_view name)
{
    std::string out = "graph " + std::string(name) + " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + "\"";
        if (filled.contains(v))
            out += ", style=filled, fillcolor=\"#4a7bd0\"";
        out += "];\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

} // namespace ftzf
