#include "ftzf/records.hpp"

namespace ftzf {

using nlohmann::json;

namespace {

json value_or_marker(const std::optional<int> & v)
{
    return v ? json(*v) : json("not_exists");
}

} // namespace

json to_json(VertexSet s)
{
    return s.to_vector();
}

json to_json(const ParamResult & r, bool timing)
{
    json witnesses = json::array();
    for (auto w : r.witnesses)
        witnesses.push_back(to_json(w));
    return {
        {"parameter", std::string(to_string(r.parameter))},
        {"k", r.k},
        {"value", value_or_marker(r.value)},
        {"witnesses", witnesses},
        {"truncated", r.truncated},
        {"elapsed_ms", timing ? r.elapsed_ms : 0.0},
    };
}

json to_json(const DeltaReport & report)
{
    json rows = json::array();
    for (const auto & r : report.rows) {
        json operand = r.op == OpKind::DeleteVertex ? json(r.operand.first) : json::array({r.operand.first, r.operand.second});
        rows.push_back({
            {"op", std::string(to_string(r.op))},
            {"operand", operand},
            {"value", value_or_marker(r.value)},
            {"delta", r.delta ? json(*r.delta) : json(nullptr)},
        });
    }
    return {{"base", value_or_marker(report.base)}, {"rows", rows}};
}

json to_json(const ForcingTrace & trace, const Graph & g)
{
    json layers = json::array();
    for (auto l : trace.layers)
        layers.push_back(to_json(l));
    json forces = json::array();
    for (auto f : trace.forces)
        forces.push_back({f.source, f.target});
    return {
        {"initial", to_json(trace.initial)},
        {"layers", layers},
        {"forces", forces},
        {"final", to_json(trace.final)},
        {"forcing", trace.final == g.vertices()},
    };
}

json to_json(const PathCover & cover)
{
    return cover.paths;
}

json to_json(const std::vector<verify::ClaimReport> & reports, bool timing)
{
    json out = json::array();
    for (const auto & r : reports)
        out.push_back({
            {"id", r.id},
            {"statement", r.statement},
            {"instances", r.instances},
            {"status", std::string(verify::to_string(r.status))},
            {"counterexample", r.counterexample.empty() ? json(nullptr) : json(r.counterexample)},
            {"note", r.note},
            {"elapsed_ms", timing ? r.elapsed_ms : 0.0},
        });
    return out;
}

} // namespace ftzf
