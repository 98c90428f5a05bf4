// ftzf: exact zero forcing and fault tolerant zero forcing from the command line.
//
// Exit status: 0 ok, 1 a verification claim failed, 2 bad input, 3 graph
// exceeds the exact-search size limit.

#include "ftzf/forcing.hpp"
#include "ftzf/graph.hpp"
#include "ftzf/records.hpp"
#include "ftzf/search.hpp"
#include "ftzf/trees.hpp"
#include "ftzf/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace ftzf;

namespace {

enum Exit { kOk = 0, kClaimFailed = 1, kInputError = 2, kSizeLimit = 3 };

struct InputSource {
    std::string edges;
    std::string family;
    std::string fixture;

    void attach(CLI::App * cmd)
    {
        auto * e = cmd->add_option("--edges", edges, "edge-list file ('-' for stdin)");
        auto * f = cmd->add_option("--family", family, "family spec, e.g. cycle:6, wheel:7, spider:3:2");
        auto * x = cmd->add_option("--fixture", fixture, "named figure graph")
                       ->check(CLI::IsMember(fixture_names_with_alias()));
        e->excludes(f, x);
        f->excludes(x);
    }

    static std::vector<std::string> fixture_names_with_alias()
    {
        auto names = fixture_names();
        names.push_back("fig7");
        return names;
    }

    Graph load() const
    {
        const int set = !edges.empty() + !family.empty() + !fixture.empty();
        if (set != 1)
            throw Error(ErrorKind::Parse, "give exactly one of --edges, --family, --fixture");
        if (!family.empty())
            return generate(parse_family(family));
        if (!fixture.empty())
            return ftzf::fixture(fixture);
        if (edges == "-")
            return parse_edge_list(std::cin);
        std::ifstream in(edges);
        if (!in)
            throw Error(ErrorKind::Parse, "cannot read " + edges);
        return parse_edge_list(in);
    }
};

struct Common {
    std::string format = "human";
    int size_limit = kDefaultSizeLimit;
    std::size_t witness_cap = kDefaultWitnessCap;
    int jobs = 1;
    bool no_timing = false;

    void attach(CLI::App * cmd, bool search = true)
    {
        cmd->add_option("--format", format, "human or json")->check(CLI::IsMember({"human", "json"}));
        if (!search)
            return;
        cmd->add_option("--size-limit", size_limit, "largest order for exact search (env FTZF_SIZE_LIMIT)");
        cmd->add_option("--witness-cap", witness_cap, "maximum witnesses reported");
        cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
        cmd->add_flag("--no-timing", no_timing, "write elapsed_ms as 0");
    }

    SearchOptions options() const { return {size_limit, witness_cap, jobs}; }
    bool json() const { return format == "json"; }
};

int default_size_limit()
{
    if (const char * env = std::getenv("FTZF_SIZE_LIMIT")) {
        try {
            return std::stoi(env);
        }
        catch (const std::exception &) {
            std::cerr << "ignoring malformed FTZF_SIZE_LIMIT=" << env << "\n";
        }
    }
    return kDefaultSizeLimit;
}

std::string show(const std::optional<int> & v)
{
    return v ? std::to_string(*v) : "not_exists";
}

std::string set_list(VertexSet s)
{
    std::string out = "[";
    bool first = true;
    for (Vertex v : s) {
        out += (first ? "" : ",") + std::to_string(v);
        first = false;
    }
    return out + "]";
}

VertexSet parse_set(const std::string & text, const Graph & g)
{
    VertexSet s;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = -1;
        try {
            v = std::stoi(item, &used);
        }
        catch (const std::exception &) {
            throw Error(ErrorKind::Parse, "bad vertex '" + item + "'");
        }
        if (used != item.size())
            throw Error(ErrorKind::Parse, "bad vertex '" + item + "'");
        if (v < 0 || v >= g.order())
            throw Error(ErrorKind::InvalidVertex, "vertex " + item + " not in graph of order " + std::to_string(g.order()));
        s.insert(v);
    }
    return s;
}

void print_result_human(const ParamResult & r)
{
    std::cout << std::left << std::setw(10) << to_string(r.parameter) << std::setw(4) << (r.k ? std::to_string(r.k) : "-")
              << std::setw(12) << show(r.value);
    if (!r.witnesses.empty()) {
        std::cout << set_list(r.witnesses.front());
        if (r.witnesses.size() > 1)
            std::cout << " (+" << r.witnesses.size() - 1 << (r.truncated ? "+" : "") << " more)";
    }
    std::cout << "\n";
}

// ---------------------------------------------------------------------------

struct ParamCmd {
    InputSource input;
    Common common;
    bool z = false, pt = false, fpt = false, all = false;
    std::vector<int> zt;

    int run() const
    {
        const Graph g = input.load();
        const auto opts = common.options();
        std::vector<ParamResult> results;
        const bool none = !z && !pt && !fpt && zt.empty();
        if (z || all || none)
            results.push_back(zf_number(g, opts));
        for (int k : zt)
            results.push_back(zt_number(g, k, opts));
        if (all && zt.empty())
            results.push_back(zt_number(g, 1, opts));
        if (pt || all)
            results.push_back(pt_number(g, opts));
        if (fpt || all)
            results.push_back(fpt_number(g, opts));

        if (common.json()) {
            for (const auto & r : results)
                std::cout << to_json(r, !common.no_timing).dump() << "\n";
            return kOk;
        }
        std::cout << std::left << std::setw(10) << "parameter" << std::setw(4) << "k" << std::setw(12) << "value" << "witness\n";
        for (const auto & r : results)
            print_result_human(r);
        return kOk;
    }
};

struct TraceCmd {
    InputSource input;
    Common common;
    std::string set;
    std::string dot_dir;

    int run() const
    {
        const Graph g = input.load();
        const auto trace = closure(g, parse_set(set, g));
        if (!dot_dir.empty()) {
            std::filesystem::create_directories(dot_dir);
            VertexSet colored = trace.initial;
            for (std::size_t i = 0; i <= trace.layers.size(); ++i) {
                if (i > 0)
                    colored |= trace.layers[i - 1];
                std::ofstream out(std::filesystem::path(dot_dir) / ("layer_" + std::to_string(i) + ".dot"));
                out << to_dot(g, colored, "layer_" + std::to_string(i));
            }
        }
        const bool forcing = trace.final == g.vertices();
        if (common.json()) {
            std::cout << to_json(trace, g).dump() << "\n";
            return kOk;
        }
        std::cout << "initial " << set_list(trace.initial) << "\n";
        for (std::size_t i = 0; i < trace.layers.size(); ++i) {
            std::cout << "round " << i + 1 << ": " << set_list(trace.layers[i]) << "  forces";
            for (auto f : trace.forces)
                if (trace.layers[i].contains(f.target))
                    std::cout << " " << f.source << "->" << f.target;
            std::cout << "\n";
        }
        std::cout << "final " << set_list(trace.final) << (forcing ? "" : "  (not forcing)") << "\n";
        return kOk;
    }
};

struct OpsCmd {
    InputSource input;
    Common common;
    std::vector<std::string> ops;

    int run() const
    {
        const Graph g = input.load();
        std::vector<OpKind> kinds;
        for (const auto & o : ops)
            kinds.push_back(o == "delete-edge" ? OpKind::DeleteEdge : o == "contract-edge" ? OpKind::ContractEdge : OpKind::DeleteVertex);
        if (kinds.empty())
            kinds = {OpKind::DeleteEdge, OpKind::ContractEdge, OpKind::DeleteVertex};
        const auto report = delta_table(g, kinds, common.options());
        if (common.json()) {
            std::cout << to_json(report).dump() << "\n";
            return kOk;
        }
        std::cout << "Zt(G) = " << show(report.base) << "\n";
        std::cout << std::left << std::setw(15) << "op" << std::setw(10) << "operand" << std::setw(12) << "Zt(result)" << "delta\n";
        for (const auto & r : report.rows) {
            const std::string operand = r.op == OpKind::DeleteVertex ? std::to_string(r.operand.first)
                                                                     : std::to_string(r.operand.first) + "-" + std::to_string(r.operand.second);
            std::cout << std::setw(15) << to_string(r.op) << std::setw(10) << operand << std::setw(12) << show(r.value)
                      << (r.delta ? std::to_string(*r.delta) : "-") << "\n";
        }
        return kOk;
    }
};

struct VerifyCmd {
    Common common;
    std::string scope;
    std::uint64_t seed = 1;
    verify::Limits limits;
    bool list = false;

    int run() const
    {
        if (list) {
            for (const auto & id : verify::claim_ids())
                if (verify::scope_matches(scope, id))
                    std::cout << id << "\n";
            return kOk;
        }
        auto lim = limits;
        lim.size_limit = common.size_limit;
        const auto reports = verify::run_suite(scope, lim, seed, common.jobs);
        if (common.json())
            std::cout << to_json(reports, !common.no_timing).dump(2) << "\n";
        else {
            for (const auto & r : reports) {
                std::cout << std::left << std::setw(8) << verify::to_string(r.status) << std::setw(36) << r.id << r.statement;
                if (!r.instances.empty())
                    std::cout << "  [" << r.instances << "]";
                std::cout << "\n";
                if (!r.note.empty())
                    std::cout << std::setw(44) << "" << "note: " << r.note << "\n";
                if (!r.counterexample.empty())
                    std::cout << std::setw(44) << "" << "counterexample: " << r.counterexample << "\n";
            }
            const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto & r) { return r.status == verify::Status::Fail; });
            std::cout << reports.size() << " claims, " << failed << " failed\n";
        }
        return verify::all_passed(reports) ? kOk : kClaimFailed;
    }
};

struct FamilyCmd {
    std::string spec;
    std::string format = "edges";

    int run() const
    {
        const Graph g = generate(parse_family(spec));
        std::cout << (format == "dot" ? to_dot(g) : to_edge_list(g));
        return kOk;
    }
};

struct TreeCmd {
    InputSource input;
    Common common;

    int run() const
    {
        const Graph t = input.load();
        const auto p = path_cover_number(t);
        const auto pt = ft_path_cover_value(t);
        const auto lb = leaf_bound_check(t);
        const auto zt = zt_number(t, 1, common.options());
        if (common.json()) {
            nlohmann::json out = {
                {"path_cover_number", p.value},
                {"path_cover", to_json(p.cover)},
                {"ft_path_cover_value", pt ? nlohmann::json(pt->value) : nlohmann::json("not_exists")},
                {"ft_path_cover", pt ? to_json(pt->cover) : nlohmann::json(nullptr)},
                {"ft_set", pt ? to_json(ft_set_from_cover(t, pt->cover)) : nlohmann::json(nullptr)},
                {"leaf_count", lb.leaf_count},
                {"leaves_fault_tolerant", lb.leaves_fault_tolerant},
                {"Zt", zt.value ? nlohmann::json(*zt.value) : nlohmann::json("not_exists")},
            };
            std::cout << out.dump() << "\n";
            return kOk;
        }
        std::cout << "P(T)   " << p.value << "\n"
                  << "Pt(T)  " << (pt ? std::to_string(pt->value) : "not_exists") << "\n"
                  << "l(T)   " << lb.leaf_count << (lb.leaves_fault_tolerant ? "  (leaves fault tolerant)" : "") << "\n"
                  << "Zt(T)  " << show(zt.value) << "\n";
        return kOk;
    }
};

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Exact zero forcing, fault tolerant zero forcing and propagation time"};
    app.require_subcommand(1);
    const int env_limit = default_size_limit();

    ParamCmd param;
    auto * p = app.add_subcommand("param", "compute Z, Zt^k, pt, fpt");
    param.common.size_limit = env_limit;
    param.input.attach(p);
    param.common.attach(p);
    p->add_flag("--z", param.z, "zero forcing number");
    p->add_option("--zt", param.zt, "fault tolerant zero forcing number with budget k (repeatable)")->check(CLI::PositiveNumber);
    p->add_flag("--pt", param.pt, "propagation time");
    p->add_flag("--fpt", param.fpt, "fault propagation time");
    p->add_flag("--all", param.all, "Z, Zt, pt and fpt");

    TraceCmd trace;
    auto * t = app.add_subcommand("trace", "run the color change rule from a set");
    trace.input.attach(t);
    trace.common.attach(t, false);
    t->add_option("--set", trace.set, "comma-separated initial vertices")->required();
    t->add_option("--dot-dir", trace.dot_dir, "write one DOT file per round");

    OpsCmd ops;
    auto * o = app.add_subcommand("ops", "Zt deltas under edge deletion, contraction, vertex deletion");
    ops.common.size_limit = env_limit;
    ops.input.attach(o);
    ops.common.attach(o);
    o->add_option("--op", ops.ops, "delete-edge, contract-edge, delete-vertex (repeatable; default all)")
        ->check(CLI::IsMember({"delete-edge", "contract-edge", "delete-vertex"}));

    VerifyCmd ver;
    auto * v = app.add_subcommand("verify", "run the claim suite");
    ver.common.size_limit = env_limit;
    ver.common.attach(v);
    v->add_option("--scope", ver.scope, "comma-separated claim id globs");
    v->add_option("--seed", ver.seed, "seed for random instance pools");
    v->add_option("--random-graphs", ver.limits.random_graphs, "size of the random connected pool");
    v->add_option("--random-max-order", ver.limits.random_max_order);
    v->add_option("--tree-max-order", ver.limits.tree_max_order);
    v->add_flag("--list", ver.list, "list claim ids and exit");

    FamilyCmd fam;
    auto * f = app.add_subcommand("family", "emit a family graph");
    f->add_option("--spec", fam.spec, "e.g. wheel:7")->required();
    f->add_option("--format", fam.format)->check(CLI::IsMember({"edges", "dot"}));

    TreeCmd tree;
    auto * tr = app.add_subcommand("tree", "path cover numbers of a tree");
    tree.common.size_limit = env_limit;
    tree.input.attach(tr);
    tree.common.attach(tr);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*p) return param.run();
        if (*t) return trace.run();
        if (*o) return ops.run();
        if (*v) return ver.run();
        if (*f) return fam.run();
        if (*tr) return tree.run();
    }
    catch (const Error & e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::SizeLimit ? kSizeLimit : kInputError;
    }
    return kOk;
}
