#include "ftzf/search.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace ftzf {

std::string_view to_string(Parameter p)
{
    switch (p) {
    case Parameter::Z: return "Z";
    case Parameter::Zt: return "Zt";
    case Parameter::Pt: return "pt";
    case Parameter::Fpt: return "fpt";
    }
    return "?";
}

std::string_view to_string(OpKind op)
{
    switch (op) {
    case OpKind::DeleteEdge: return "delete_edge";
    case OpKind::ContractEdge: return "contract_edge";
    case OpKind::DeleteVertex: return "delete_vertex";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void check_size(const Graph & g, const SearchOptions & opts)
{
    if (g.order() > opts.size_limit)
        throw Error(ErrorKind::SizeLimit,
            "order " + std::to_string(g.order()) + " exceeds exact-search limit " + std::to_string(opts.size_limit));
}

/// Calls f on every r-subset of `universe` in lexicographic order until f
/// returns false. Returns false iff stopped early.
template <class F>
bool for_each_subset(VertexSet universe, int r, F && f)
{
    const auto members = universe.to_vector();
    const int m = static_cast<int>(members.size());
    if (r < 0 || r > m)
        return true;
    std::vector<int> idx(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        VertexSet s;
        for (int i : idx)
            s.insert(members[static_cast<std::size_t>(i)]);
        if (!f(s))
            return false;
        int i = r - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - r + i)
            --i;
        if (i < 0)
            return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<VertexSet> subsets_of_size(VertexSet universe, int r)
{
    std::vector<VertexSet> out;
    for_each_subset(universe, r, [&](VertexSet s) {
        out.push_back(s);
        return true;
    });
    return out;
}

/// Evaluates pred on every candidate, possibly on several threads. The result
/// is indexed like the input, so acceptance order never depends on scheduling.
template <class Pred>
std::vector<char> evaluate(const std::vector<VertexSet> & candidates, const Pred & pred, int jobs)
{
    std::vector<char> ok(candidates.size(), 0);
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, candidates.size() / 64 + 1);
    if (workers == 1) {
        for (std::size_t i = 0; i < candidates.size(); ++i)
            ok[i] = pred(candidates[i]) ? 1 : 0;
        return ok;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < candidates.size(); i += workers)
                ok[i] = pred(candidates[i]) ? 1 : 0;
        });
    pool.clear();
    return ok;
}

/// Memoized zero-forcing test for one fixed graph. Overlapping fault-tolerance
/// candidates share most of their (|B|-k)-subsets.
class ForcingCache {
public:
    explicit ForcingCache(const Graph & g) : g_(g) {}

    bool forces(VertexSet b) const
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = memo_.find(b.bits()); it != memo_.end())
                return it->second;
        }
        const bool result = is_zfs(g_, b);
        std::unique_lock lock(mutex_);
        memo_.emplace(b.bits(), result);
        return result;
    }

private:
    const Graph & g_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::uint64_t, bool> memo_;
};

bool fault_tolerant(const ForcingCache & cache, VertexSet b, int k)
{
    return for_each_subset(b, k, [&](VertexSet faults) { return cache.forces(b - faults); });
}

void keep_capped(ParamResult & r, std::vector<VertexSet> sets, std::size_t cap)
{
    if (sets.size() > cap) {
        sets.resize(cap);
        r.truncated = true;
    }
    r.witnesses = std::move(sets);
}

struct Level {
    int size = 0;
    std::vector<VertexSet> sets; // every admissible set of that size, lexicographic
};

/// Smallest cardinality in [lo, hi] holding a set that satisfies pred.
template <class Pred>
std::optional<Level> first_level(const Graph & g, int lo, int hi, const Pred & pred, int jobs)
{
    for (int s = lo; s <= hi; ++s) {
        auto candidates = subsets_of_size(g.vertices(), s);
        auto ok = evaluate(candidates, pred, jobs);
        Level level{s, {}};
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (ok[i])
                level.sets.push_back(candidates[i]);
        if (!level.sets.empty())
            return level;
    }
    return std::nullopt;
}

Level minimum_zfs(const Graph & g, int jobs)
{
    auto level = first_level(g, 0, g.order(), [&](VertexSet b) { return is_zfs(g, b); }, jobs);
    return *level; // V(g) always forces
}

std::optional<Level> minimum_ft(const Graph & g, int k, int jobs)
{
    const int n = g.order();
    if (n < k || !is_k_fault_tolerant(g, g.vertices(), k))
        return std::nullopt;
    const int lo = std::max(minimum_zfs(g, jobs).size + k, k + 1);
    ForcingCache cache(g);
    return first_level(g, std::min(lo, n), n, [&](VertexSet b) { return fault_tolerant(cache, b, k); }, jobs);
}

} // namespace

ParamResult zf_number(const Graph & g, const SearchOptions & opts)
{
    check_size(g, opts);
    const auto start = Clock::now();
    ParamResult r;
    r.parameter = Parameter::Z;
    auto level = minimum_zfs(g, opts.jobs);
    r.value = level.size;
    keep_capped(r, std::move(level.sets), opts.witness_cap);
    r.elapsed_ms = ms_since(start);
    return r;
}

std::vector<VertexSet> enumerate_minimal_zfs(const Graph & g, const SearchOptions & opts)
{
    check_size(g, opts);
    std::vector<VertexSet> out;
    for (int s = 0; s <= g.order(); ++s) {
        auto candidates = subsets_of_size(g.vertices(), s);
        auto ok = evaluate(candidates, [&](VertexSet b) {
            if (!is_zfs(g, b))
                return false;
            for (Vertex v : b)
                if (is_zfs(g, b.without(v)))
                    return false;
            return true;
        }, opts.jobs);
        for (std::size_t i = 0; i < candidates.size(); ++i)
            if (ok[i])
                out.push_back(candidates[i]);
    }
    return out;
}

bool is_k_fault_tolerant(const Graph & g, VertexSet b, int k)
{
    if (k < 0 || k > b.size())
        throw Error(ErrorKind::InvalidFaultBudget,
            "k = " + std::to_string(k) + " for a set of size " + std::to_string(b.size()));
    return for_each_subset(b, k, [&](VertexSet faults) { return is_zfs(g, b - faults); });
}

ParamResult zt_number(const Graph & g, int k, const SearchOptions & opts)
{
    if (k < 1)
        throw Error(ErrorKind::InvalidFaultBudget, "k must be at least 1");
    check_size(g, opts);
    const auto start = Clock::now();
    ParamResult r;
    r.parameter = Parameter::Zt;
    r.k = k;
    if (auto level = minimum_ft(g, k, opts.jobs)) {
        r.value = level->size;
        keep_capped(r, std::move(level->sets), opts.witness_cap);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

ParamResult pt_number(const Graph & g, const SearchOptions & opts)
{
    check_size(g, opts);
    const auto start = Clock::now();
    ParamResult r;
    r.parameter = Parameter::Pt;
    auto level = minimum_zfs(g, opts.jobs);
    int best = std::numeric_limits<int>::max();
    std::vector<VertexSet> efficient;
    for (VertexSet b : level.sets) {
        const int t = *pt_set(g, b);
        if (t < best) {
            best = t;
            efficient.clear();
        }
        if (t == best)
            efficient.push_back(b);
    }
    r.value = best;
    keep_capped(r, std::move(efficient), opts.witness_cap);
    r.elapsed_ms = ms_since(start);
    return r;
}

int fpt_set(const Graph & g, VertexSet b)
{
    if (b.empty() || !is_k_fault_tolerant(g, b, 1))
        throw Error(ErrorKind::NotFaultTolerant, b.to_string() + " is not a fault tolerant zero forcing set");
    int worst = 0;
    for (Vertex v : b)
        worst = std::max(worst, *pt_set(g, b.without(v)));
    return worst;
}

ParamResult fpt_number(const Graph & g, const SearchOptions & opts)
{
    check_size(g, opts);
    const auto start = Clock::now();
    ParamResult r;
    r.parameter = Parameter::Fpt;
    r.k = 1;
    if (auto level = minimum_ft(g, 1, opts.jobs)) {
        int best = std::numeric_limits<int>::max();
        std::vector<VertexSet> fastest;
        for (VertexSet b : level->sets) {
            const int t = fpt_set(g, b);
            if (t < best) {
                best = t;
                fastest.clear();
            }
            if (t == best)
                fastest.push_back(b);
        }
        r.value = best;
        keep_capped(r, std::move(fastest), opts.witness_cap);
    }
    r.elapsed_ms = ms_since(start);
    return r;
}

DeltaReport delta_table(const Graph & g, const std::vector<OpKind> & ops, const SearchOptions & opts)
{
    check_size(g, opts);
    DeltaReport report;
    report.base = zt_number(g, 1, opts).value;
    auto add_row = [&](OpKind op, Edge operand, const Graph & derived) {
        DeltaRow row{op, operand, zt_number(derived, 1, opts).value, std::nullopt};
        if (report.base && row.value)
            row.delta = *report.base - *row.value;
        report.rows.push_back(row);
    };
    for (OpKind op : ops) {
        switch (op) {
        case OpKind::DeleteEdge:
            for (auto e : g.edges())
                add_row(op, e, delete_edge(g, e));
            break;
        case OpKind::ContractEdge:
            for (auto e : g.edges())
                add_row(op, e, contract_edge(g, e).graph);
            break;
        case OpKind::DeleteVertex:
            for (Vertex v = 0; v < g.order(); ++v)
                add_row(op, {v, v}, delete_vertex(g, v).graph);
            break;
        }
    }
    return report;
}

} // namespace ftzf
