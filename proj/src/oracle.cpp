#include "ftzf/oracle.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace ftzf::oracle {

namespace {

using Adjacency = std::vector<std::set<int>>;

Adjacency adjacency(const Graph & g)
{
    Adjacency adj(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].insert(v);
        adj[static_cast<std::size_t>(v)].insert(u);
    }
    return adj;
}

void check(const Graph & g)
{
    if (g.order() > kOracleLimit)
        throw Error(ErrorKind::SizeLimit, "oracle handles at most " + std::to_string(kOracleLimit) + " vertices");
}

std::set<int> members(std::uint64_t mask)
{
    std::set<int> s;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1U)
            s.insert(v);
    return s;
}

std::uint64_t to_mask(const std::set<int> & s)
{
    std::uint64_t m = 0;
    for (int v : s)
        m |= std::uint64_t{1} << v;
    return m;
}

std::set<int> close(const Adjacency & adj, std::set<int> blue, std::mt19937 * rng)
{
    while (true) {
        std::vector<std::pair<int, int>> valid;
        for (int b : blue) {
            int white = -1, count = 0;
            for (int w : adj[static_cast<std::size_t>(b)])
                if (!blue.count(w)) {
                    white = w;
                    ++count;
                }
            if (count == 1) {
                valid.emplace_back(b, white);
                if (!rng)
                    break;
            }
        }
        if (valid.empty())
            return blue;
        std::size_t pick = 0;
        if (rng)
            pick = std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(*rng);
        blue.insert(valid[pick].second);
    }
}

bool forces(const Adjacency & adj, std::uint64_t mask)
{
    return close(adj, members(mask), nullptr).size() == adj.size();
}

int rounds_of(const Adjacency & adj, std::uint64_t mask)
{
    std::set<int> blue = members(mask);
    int t = 0;
    while (blue.size() < adj.size()) {
        std::set<int> fresh;
        for (int b : blue) {
            std::vector<int> white;
            for (int w : adj[static_cast<std::size_t>(b)])
                if (!blue.count(w))
                    white.push_back(w);
            if (white.size() == 1)
                fresh.insert(white[0]);
        }
        if (fresh.empty())
            return -1;
        blue.insert(fresh.begin(), fresh.end());
        ++t;
    }
    return t;
}

/// Every (|b|-k)-subset of b forces, checked by scanning all submasks.
bool tolerant(const Adjacency & adj, std::uint64_t b, int k)
{
    const int keep = std::popcount(b) - k;
    if (keep < 0)
        return false;
    for (std::uint64_t sub = b;; sub = (sub - 1) & b) {
        if (std::popcount(sub) == keep && !forces(adj, sub))
            return false;
        if (sub == 0)
            break;
    }
    return true;
}

bool lex(const std::uint64_t a, const std::uint64_t b)
{
    auto sa = members(a), sb = members(b);
    return std::lexicographical_compare(sa.begin(), sa.end(), sb.begin(), sb.end());
}

/// Minimum-size masks satisfying pred, scanning all 2^n subsets.
template <class Pred>
std::vector<std::uint64_t> minimum_sets(int n, const Pred & pred)
{
    std::vector<std::uint64_t> best;
    int best_size = n + 1;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        const int s = std::popcount(m);
        if (s > best_size || !pred(m))
            continue;
        if (s < best_size) {
            best.clear();
            best_size = s;
        }
        best.push_back(m);
    }
    std::sort(best.begin(), best.end(), lex);
    return best;
}

ParamResult result(Parameter p, int k, const std::vector<std::uint64_t> & sets, std::optional<int> value)
{
    ParamResult r;
    r.parameter = p;
    r.k = k;
    r.value = value;
    for (auto m : sets)
        r.witnesses.push_back(VertexSet(m));
    return r;
}

template <class Measure>
ParamResult fastest(Parameter p, int k, const std::vector<std::uint64_t> & sets, const Measure & measure)
{
    if (sets.empty())
        return result(p, k, {}, std::nullopt);
    int best = 1 << 30;
    std::vector<std::uint64_t> winners;
    for (auto m : sets) {
        const int t = measure(m);
        if (t < best) {
            best = t;
            winners.clear();
        }
        if (t == best)
            winners.push_back(m);
    }
    return result(p, k, winners, best);
}

} // namespace

VertexSet sequential_closure(const Graph & g, VertexSet b, std::mt19937 * rng)
{
    const auto adj = adjacency(g);
    return VertexSet(to_mask(close(adj, members(b.bits()), rng)));
}

int rounds(const Graph & g, VertexSet b)
{
    return rounds_of(adjacency(g), b.bits());
}

ParamResult zf(const Graph & g)
{
    check(g);
    const auto adj = adjacency(g);
    auto sets = minimum_sets(g.order(), [&](std::uint64_t m) { return forces(adj, m); });
    return result(Parameter::Z, 0, sets, std::popcount(sets.front()));
}

ParamResult zt(const Graph & g, int k)
{
    check(g);
    const auto adj = adjacency(g);
    auto sets = minimum_sets(g.order(), [&](std::uint64_t m) { return tolerant(adj, m, k); });
    if (sets.empty())
        return result(Parameter::Zt, k, {}, std::nullopt);
    return result(Parameter::Zt, k, sets, std::popcount(sets.front()));
}

ParamResult pt(const Graph & g)
{
    check(g);
    const auto adj = adjacency(g);
    auto sets = minimum_sets(g.order(), [&](std::uint64_t m) { return forces(adj, m); });
    return fastest(Parameter::Pt, 0, sets, [&](std::uint64_t m) { return rounds_of(adj, m); });
}

ParamResult fpt(const Graph & g)
{
    check(g);
    const auto adj = adjacency(g);
    auto sets = minimum_sets(g.order(), [&](std::uint64_t m) { return tolerant(adj, m, 1); });
    return fastest(Parameter::Fpt, 1, sets, [&](std::uint64_t m) {
        int worst = 0;
        for (int v : members(m))
            worst = std::max(worst, rounds_of(adj, m & ~(std::uint64_t{1} << v)));
        return worst;
    });
}

} // namespace ftzf::oracle
