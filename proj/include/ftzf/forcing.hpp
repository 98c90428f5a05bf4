#pragma once

#include "ftzf/graph.hpp"

#include <optional>
#include <vector>

namespace ftzf {

struct Force {
    Vertex source;
    Vertex target;
    friend bool operator==(const Force &, const Force &) = default;
};

/// Full record of the color change rule run to a fixed point with
/// simultaneous rounds. layers[i] holds the vertices first colored in round
/// i+1; forces are listed round by round, ascending target within a round,
/// each attributed to the smallest-id vertex able to perform it.
struct ForcingTrace {
    VertexSet initial;
    std::vector<VertexSet> layers;
    std::vector<Force> forces;
    VertexSet final;

    /// Flattened chronological force list; identical to `forces`.
    const std::vector<Force> & chronological() const { return forces; }
};

ForcingTrace closure(const Graph & g, VertexSet b);

/// Fixed point of the color change rule and the number of rounds that
/// colored at least one vertex. No trace is recorded.
struct ClosureSummary {
    VertexSet final;
    int rounds = 0;
};

ClosureSummary closure_summary(const Graph & g, VertexSet b);

bool is_zfs(const Graph & g, VertexSet b);

/// Rounds needed for b to color V(g); nullopt when b is not a zero forcing set.
std::optional<int> pt_set(const Graph & g, VertexSet b);

/// Re-applies trace.forces one at a time from trace.initial, checking that
/// each target is the unique uncolored neighbor of its source at that moment.
bool replay_is_valid(const Graph & g, const ForcingTrace & trace);

} // namespace ftzf
