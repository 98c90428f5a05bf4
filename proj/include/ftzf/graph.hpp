#pragma once

#include "ftzf/error.hpp"
#include "ftzf/vertex_set.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ftzf {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..order-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws InvalidVertex for endpoints outside [0, order) and LoopRejected
    /// for u == v. Duplicate pairs collapse.
    Graph(int order, const std::vector<Edge> & edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::size_t edge_count() const;

    VertexSet vertices() const { return VertexSet::full(order()); }
    VertexSet neighbors(Vertex v) const;
    VertexSet closed_neighborhood(Vertex v) const;
    int degree(Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const;

    /// Edges with u < v, sorted.
    std::vector<Edge> edges() const;

    /// Unchecked neighborhood lookup for hot loops.
    VertexSet adj(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> adj_;
};

Graph build_graph(int order, const std::vector<Edge> & edges);

// ---------------------------------------------------------------------------
// Families and fixtures

enum class FamilyKind { Path, Cycle, Complete, Star, Wheel, Spider };

struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 1;          ///< order (path/cycle/complete/wheel) or leaf count (star)
    int legs = 0;       ///< spider only
    int leg_length = 0; ///< spider only
};

Graph generate(const FamilySpec & spec);

/// Parses "path:5", "cycle:6", "complete:4", "star:3", "wheel:7", "spider:3:2".
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec & spec);

/// Graphs drawn in the figures, relabelled 0-based (figure label k -> id k-1).
///
///   fig1_house        {12,13,24,34,45}                       (alias fig7)
///   fig2_mummal       {12,13,15,24,26,35,46,56}
///   fig3_caterpillar  {13,23,34,45,48,56,57}
///   fig4_ftcover_tree {12,23,34,45,26,37}
///   fig5_gme          {12,13,23,34,45,56,57}   a=12 b=23 c=45 d=34
///   fig6a_contract    {12,13,15,24,25,34,35,36,47,48,56,57,58}
///                                              a=34 b=36 c=15 d=47
///   fig6b_diamond     {12,13,23,24,34}         f=23
Graph fixture(std::string_view name);
std::vector<std::string> fixture_names();

// ---------------------------------------------------------------------------
// Operations. Deletion and contraction compact ids; the returned map sends
// every old id to its new id (nullopt for a deleted vertex).

using VertexMap = std::vector<std::optional<Vertex>>;

struct Derived {
    Graph graph;
    VertexMap map;
};

Derived delete_vertex(const Graph & g, Vertex v);
Graph delete_edge(const Graph & g, Edge e);
Derived contract_edge(const Graph & g, Edge e);
Graph add_edge(const Graph & g, Edge e);

enum class TwinKind { Independent, Adjacent };

struct TwinPair {
    Vertex u;
    Vertex v;
    TwinKind kind;
    friend bool operator==(const TwinPair &, const TwinPair &) = default;
};

std::vector<TwinPair> twins(const Graph & g);

struct Component {
    Graph graph;
    std::vector<Vertex> original; ///< new id -> old id
};

/// Components ordered by smallest original vertex.
std::vector<Component> components(const Graph & g);
bool is_connected(const Graph & g);
bool is_tree(const Graph & g);
VertexSet leaves(const Graph & g);
bool has_isolated_vertex(const Graph & g);

/// Induced subgraph on `keep`, ids compacted in increasing order.
Derived induced(const Graph & g, VertexSet keep);

// ---------------------------------------------------------------------------
// Text formats

/// Edge list: first non-comment line is n, then one "u v" pair per line.
Graph parse_edge_list(std::istream & in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph & g);

/// Undirected DOT; vertices in `filled` get style=filled.
std::string to_dot(const Graph & g, VertexSet filled = {}, std::string_view name = "G");

} // namespace ftzf
