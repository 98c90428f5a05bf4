#include "ftzf/forcing.hpp"

namespace ftzf {

namespace {

/// Vertices forceable from `blue` in one simultaneous round.
VertexSet next_layer(const Graph & g, VertexSet blue)
{
    VertexSet layer;
    for (Vertex v : blue) {
        VertexSet white = g.adj(v) - blue;
        if (white.size() == 1)
            layer |= white;
    }
    return layer;
}

} // namespace

ClosureSummary closure_summary(const Graph & g, VertexSet b)
{
    ClosureSummary out{b & g.vertices(), 0};
    for (VertexSet layer = next_layer(g, out.final); !layer.empty(); layer = next_layer(g, out.final)) {
        out.final |= layer;
        ++out.rounds;
    }
    return out;
}

ForcingTrace closure(const Graph & g, VertexSet b)
{
    ForcingTrace trace;
    trace.initial = b & g.vertices();
    trace.final = trace.initial;
    while (true) {
        VertexSet blue = trace.final;
        VertexSet layer = next_layer(g, blue);
        if (layer.empty())
            break;
        for (Vertex w : layer) {
            for (Vertex v : g.adj(w) & blue) {
                if ((g.adj(v) - blue).size() == 1) {
                    trace.forces.push_back({v, w});
                    break;
                }
            }
        }
        trace.layers.push_back(layer);
        trace.final |= layer;
    }
    return trace;
}

bool is_zfs(const Graph & g, VertexSet b)
{
    return closure_summary(g, b).final == g.vertices();
}

std::optional<int> pt_set(const Graph & g, VertexSet b)
{
    auto s = closure_summary(g, b);
    if (s.final != g.vertices())
        return std::nullopt;
    return s.rounds;
}

bool replay_is_valid(const Graph & g, const ForcingTrace & trace)
{
    VertexSet blue = trace.initial;
    for (auto [source, target] : trace.forces) {
        if (!blue.contains(source) || blue.contains(target))
            return false;
        if (g.adj(source) - blue != VertexSet{target})
            return false;
        blue.insert(target);
    }
    return blue == trace.final;
}

} // namespace ftzf
