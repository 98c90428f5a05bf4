#pragma once

// Naive reference implementations used to cross-check the pruned searcher.
// They share no code with forcing.cpp or search.cpp: adjacency is rebuilt
// from the edge list, closure is strictly one force at a time, and every
// subset of V(G) is scanned.

#include "ftzf/graph.hpp"
#include "ftzf/search.hpp"

#include <random>
#include <vector>

namespace ftzf::oracle {

inline constexpr int kOracleLimit = 12;

/// Applies one force at a time until none is possible. With an RNG the force
/// is drawn uniformly from all currently valid ones; otherwise the first found.
VertexSet sequential_closure(const Graph & g, VertexSet b, std::mt19937 * rng = nullptr);

/// Simultaneous-round propagation time; -1 if b does not force.
int rounds(const Graph & g, VertexSet b);

ParamResult zf(const Graph & g);
ParamResult zt(const Graph & g, int k = 1);
ParamResult pt(const Graph & g);
ParamResult fpt(const Graph & g);

} // namespace ftzf::oracle
