#pragma once

#include "ftzf/graph.hpp"

#include <optional>
#include <vector>

namespace ftzf {

/// Partition of a tree's vertices into paths; each path is listed end to end.
struct PathCover {
    std::vector<std::vector<Vertex>> paths;

    int singletons() const;
    int multi_vertex_paths() const;
};

/// Throws InvalidCover unless every path is a walk along tree edges without
/// repeated vertices and the paths partition V(t).
void validate_cover(const Graph & t, const PathCover & cover);

struct CoverValue {
    int value = 0;
    PathCover cover;
};

/// Minimum number of paths in a path cover. Throws NotATree.
CoverValue path_cover_number(const Graph & t);

/// Minimum over path covers of 2 * (paths with >= 2 vertices) + (singleton
/// paths), i.e. the size of the set ft_set_from_cover builds. Throws NotATree;
/// nullopt for the single-vertex tree, which has no fault tolerant set.
std::optional<CoverValue> ft_path_cover_value(const Graph & t);

/// Both endpoints of every multi-vertex path plus every singleton.
VertexSet ft_set_from_cover(const Graph & t, const PathCover & cover);

struct LeafBound {
    int leaf_count = 0;
    bool leaves_fault_tolerant = false;
};

LeafBound leaf_bound_check(const Graph & t);

/// All path covers of a tree, by brute force over edge subsets in which every
/// vertex keeps at most two edges. Exponential in the edge count; test use.
std::vector<PathCover> all_path_covers(const Graph & t);

/// Every unlabelled tree on n vertices, one representative per isomorphism
/// class, in a deterministic order.
std::vector<Graph> all_trees(int n);

} // namespace ftzf
