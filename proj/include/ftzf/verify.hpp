#pragma once

#include "ftzf/graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace ftzf::verify {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s);

struct ClaimReport {
    std::string id;
    std::string statement;      ///< the claim in words
    std::string instances;      ///< what was checked
    Status status = Status::Pass;
    std::string counterexample; ///< replayable payload on failure
    std::string note;           ///< interpretation or skipped ranges
    double elapsed_ms = 0;
};

struct Limits {
    int size_limit = 16;         ///< families above this order are skipped
    int random_graphs = 200;     ///< size of the random connected pool
    int random_max_order = 7;
    int tree_max_order = 9;
    int closure_pairs = 500;
    int closure_max_order = 10;
};

/// Ids of every registered claim, sorted.
std::vector<std::string> claim_ids();

/// Comma-separated list of globs ('*' matches any run of characters).
bool scope_matches(std::string_view scope, std::string_view id);

/// Runs every claim selected by scope. Deterministic for a fixed seed and
/// limits; reports are ordered by id regardless of `jobs`.
std::vector<ClaimReport> run_suite(std::string_view scope, const Limits & limits = {},
    std::uint64_t seed = 1, int jobs = 1);

bool all_passed(const std::vector<ClaimReport> & reports);

// ---------------------------------------------------------------------------
// Instance pools, shared with the acceptance tests.

/// Random spanning tree (each vertex joins a uniformly chosen earlier one)
/// plus every remaining pair independently with probability p.
Graph random_connected_graph(std::mt19937_64 & rng, int n, double p);

/// `count` connected graphs with orders uniform in [2, max_order] and edge
/// density uniform in [0.1, 0.7].
std::vector<Graph> random_connected_pool(std::uint64_t seed, int count, int max_order);

/// All unlabelled trees with 2..max_order vertices.
std::vector<Graph> tree_pool(int max_order);

/// Disjoint union, second graph's ids shifted by a.order().
Graph disjoint_union(const Graph & a, const Graph & b);

/// "n=5 edges=[[0,1],[1,2]]"
std::string describe(const Graph & g);

} // namespace ftzf::verify
