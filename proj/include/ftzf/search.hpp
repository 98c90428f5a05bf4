#pragma once

#include "ftzf/forcing.hpp"
#include "ftzf/graph.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ftzf {

enum class Parameter { Z, Zt, Pt, Fpt };

std::string_view to_string(Parameter p);

inline constexpr int kDefaultSizeLimit = 16;
inline constexpr std::size_t kDefaultWitnessCap = 64;

struct SearchOptions {
    int size_limit = kDefaultSizeLimit; ///< largest order accepted by exact search
    std::size_t witness_cap = kDefaultWitnessCap;
    int jobs = 1; ///< worker threads for candidate evaluation
};

/// Value of a graph parameter, or nullopt when no admissible set exists.
struct ParamResult {
    Parameter parameter = Parameter::Z;
    int k = 0; ///< fault budget (Zt, Fpt); 0 otherwise
    std::optional<int> value;
    std::vector<VertexSet> witnesses; ///< sets attaining the value, lexicographic
    bool truncated = false;           ///< witnesses stopped at the cap
    double elapsed_ms = 0;

    bool exists() const { return value.has_value(); }
};

ParamResult zf_number(const Graph & g, const SearchOptions & opts = {});

/// All zero forcing sets from which no single vertex can be dropped, ordered
/// by size then lexicographically.
std::vector<VertexSet> enumerate_minimal_zfs(const Graph & g, const SearchOptions & opts = {});

/// True iff b minus any k of its vertices is still a zero forcing set.
/// Throws InvalidFaultBudget when k < 0 or k > |b|.
bool is_k_fault_tolerant(const Graph & g, VertexSet b, int k);

ParamResult zt_number(const Graph & g, int k = 1, const SearchOptions & opts = {});

ParamResult pt_number(const Graph & g, const SearchOptions & opts = {});

/// Worst-case propagation time over single faults in b. Throws
/// NotFaultTolerant unless b is 1-fault tolerant.
int fpt_set(const Graph & g, VertexSet b);

ParamResult fpt_number(const Graph & g, const SearchOptions & opts = {});

// ---------------------------------------------------------------------------

enum class OpKind { DeleteEdge, ContractEdge, DeleteVertex };

std::string_view to_string(OpKind op);

struct DeltaRow {
    OpKind op;
    Edge operand;               ///< edge endpoints, or (v, v) for a vertex
    std::optional<int> value;   ///< Zt of the derived graph
    std::optional<int> delta;   ///< Zt(G) - Zt(derived) when both exist
};

struct DeltaReport {
    std::optional<int> base;
    std::vector<DeltaRow> rows;
};

/// Zt(G) against Zt of every single-edge deletion, single-edge contraction
/// and/or single-vertex deletion of g, in edge/vertex order.
DeltaReport delta_table(const Graph & g, const std::vector<OpKind> & ops, const SearchOptions & opts = {});

} // namespace ftzf
