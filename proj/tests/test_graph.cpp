#include "ftzf/graph.hpp"
#include "ftzf/verify.hpp"

#include <doctest.h>

#include <random>

using namespace ftzf;

namespace {

void check_simple(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        CHECK_FALSE(g.adj(v).contains(v));
        CHECK(g.adj(v).subset_of(g.vertices()));
        for (Vertex u : g.adj(v))
            CHECK(g.adj(u).contains(v));
    }
}

bool is_automorphism_swap(const Graph & g, Vertex a, Vertex b)
{
    auto img = [&](Vertex x) { return x == a ? b : x == b ? a : x; };
    for (auto [u, v] : g.edges())
        if (!g.has_edge(img(u), img(v)))
            return false;
    return true;
}

} // namespace

TEST_CASE("build_graph")
{
    SUBCASE("K_2")
    {
        Graph g = build_graph(2, {{0, 1}});
        CHECK(g.order() == 2);
        CHECK(g.edge_count() == 1);
        CHECK(g.has_edge(1, 0));
    }
    SUBCASE("house graph")
    {
        Graph g = build_graph(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
        CHECK(g == fixture("fig1_house"));
        CHECK(g.degree(3) == 3);
    }
    SUBCASE("duplicates collapse")
    {
        Graph g = build_graph(3, {{0, 1}, {0, 1}, {1, 0}});
        CHECK(g.edge_count() == 1);
        CHECK(g.degree(2) == 0);
    }
    SUBCASE("errors")
    {
        auto kind_of = [](auto && f) {
            try {
                f();
            }
            catch (const Error & e) {
                return e.kind();
            }
            return ErrorKind::Parse;
        };
        CHECK(kind_of([] { build_graph(3, {{0, 3}}); }) == ErrorKind::InvalidVertex);
        CHECK(kind_of([] { build_graph(3, {{-1, 0}}); }) == ErrorKind::InvalidVertex);
        CHECK(kind_of([] { build_graph(3, {{1, 1}}); }) == ErrorKind::LoopRejected);
        CHECK(kind_of([] { build_graph(65, {}); }) == ErrorKind::InvalidVertex);
    }
}

TEST_CASE("generate")
{
    SUBCASE("wheel")
    {
        Graph w = generate({FamilyKind::Wheel, 5});
        CHECK(w.order() == 5);
        CHECK(w.degree(0) == 4);
        Graph rim = delete_vertex(w, 0).graph;
        CHECK(rim == generate({FamilyKind::Cycle, 4}));
        for (int n = 5; n <= 12; ++n) {
            Graph g = generate({FamilyKind::Wheel, n});
            int hubs = 0;
            for (Vertex v = 0; v < n; ++v)
                hubs += g.degree(v) == n - 1;
            CHECK(hubs == 1);
            CHECK(g.edge_count() == static_cast<std::size_t>(2 * (n - 1)));
        }
    }
    SUBCASE("star")
    {
        Graph s = generate({FamilyKind::Star, 3});
        CHECK(s.order() == 4);
        CHECK(s.degree(0) == 3);
        for (Vertex v = 1; v <= 3; ++v)
            CHECK(s.degree(v) == 1);
    }
    SUBCASE("spider")
    {
        Graph s = generate({FamilyKind::Spider, 0, 3, 2});
        CHECK(s.order() == 7);
        CHECK(is_tree(s));
        CHECK(s.degree(0) == 3);
        CHECK(leaves(s).size() == 3);
    }
    SUBCASE("every family is simple")
    {
        for (int n = 4; n <= 10; ++n)
            for (auto kind : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Complete, FamilyKind::Star, FamilyKind::Wheel})
                check_simple(generate({kind, n}));
    }
    SUBCASE("parameter ranges")
    {
        CHECK_THROWS_AS(generate({FamilyKind::Cycle, 2}), Error);
        CHECK_THROWS_AS(generate({FamilyKind::Wheel, 3}), Error);
        CHECK_THROWS_AS(generate({FamilyKind::Path, 0}), Error);
        CHECK_THROWS_AS(generate({FamilyKind::Spider, 0, 0, 2}), Error);
        CHECK(generate({FamilyKind::Path, 1}).order() == 1);
    }
    SUBCASE("spec strings")
    {
        CHECK(parse_family("wheel:7").n == 7);
        auto sp = parse_family("spider:3:2");
        CHECK(sp.kind == FamilyKind::Spider);
        CHECK(sp.legs == 3);
        CHECK(sp.leg_length == 2);
        CHECK(to_string(sp) == "spider:3:2");
        CHECK_THROWS_AS(parse_family("blob:3"), Error);
        CHECK_THROWS_AS(parse_family("path:x"), Error);
        CHECK_THROWS_AS(parse_family("path"), Error);
    }
}

TEST_CASE("fixtures")
{
    Graph house = fixture("fig1_house");
    CHECK(house.order() == 5);
    CHECK(house.edge_count() == 5);
    CHECK(house.degree(3) == 3);
    CHECK(fixture("fig7") == house);

    Graph m = fixture("fig2_mummal");
    CHECK(m.order() == 6);
    CHECK(m.edge_count() == 8);
    for (Vertex v = 0; v < 6; ++v)
        CHECK(m.degree(v) == (v == 2 || v == 3 ? 2 : 3));

    Graph d = fixture("fig6b_diamond");
    CHECK(d.edge_count() == 5);
    CHECK_FALSE(d.has_edge(0, 3));

    CHECK(fixture("fig6a_contract").edge_count() == 13);
    CHECK(leaves(fixture("fig3_caterpillar")) == VertexSet{0, 1, 5, 6, 7});
    CHECK_THROWS_AS(fixture("fig9"), Error);
    for (const auto & name : fixture_names())
        check_simple(fixture(name));
}

TEST_CASE("delete_vertex")
{
    auto [g, map] = delete_vertex(fixture("fig1_house"), 4);
    CHECK(g.order() == 4);
    CHECK(is_connected(g));
    CHECK(g.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(g.degree(v) == 2);
    CHECK(map[4] == std::nullopt);
    CHECK(map[3] == 3);

    CHECK(delete_vertex(build_graph(2, {{0, 1}}), 0).graph.order() == 1);

    auto legs = delete_vertex(generate({FamilyKind::Spider, 0, 3, 2}), 0).graph;
    auto parts = components(legs);
    REQUIRE(parts.size() == 3);
    for (const auto & c : parts)
        CHECK(c.graph == generate({FamilyKind::Path, 2}));

    CHECK_THROWS_AS(delete_vertex(legs, 6), Error);

    auto [h, m2] = delete_vertex(generate({FamilyKind::Path, 5}), 2);
    CHECK(m2 == VertexMap{0, 1, std::nullopt, 2, 3});
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("delete_edge")
{
    Graph c4 = generate({FamilyKind::Cycle, 4});
    for (auto e : c4.edges()) {
        Graph p = delete_edge(c4, e);
        CHECK(is_tree(p));
        CHECK(leaves(p).size() == 2);
        CHECK(add_edge(p, e) == c4);
    }
    Graph k2 = build_graph(2, {{0, 1}});
    CHECK(delete_edge(k2, {1, 0}).edge_count() == 0);
    CHECK_THROWS_AS(delete_edge(c4, {0, 2}), Error);
    try {
        delete_edge(c4, {0, 2});
    }
    catch (const Error & e) {
        CHECK(e.kind() == ErrorKind::MissingEdge);
    }
}

TEST_CASE("contract_edge")
{
    auto [p3, map] = contract_edge(fixture("fig6b_diamond"), {1, 2});
    CHECK(p3.order() == 3);
    CHECK(is_tree(p3));
    CHECK(leaves(p3).size() == 2);
    CHECK(map[1] == map[2]);

    CHECK(contract_edge(build_graph(2, {{0, 1}}), {0, 1}).graph.order() == 1);

    for (int n = 4; n <= 10; ++n) {
        Graph c = generate({FamilyKind::Cycle, n});
        for (auto e : c.edges()) {
            Graph r = contract_edge(c, e).graph;
            CHECK(r.order() == n - 1);
            CHECK(r.edge_count() == static_cast<std::size_t>(n - 1));
            for (Vertex v = 0; v < r.order(); ++v)
                CHECK(r.degree(v) == 2);
            CHECK(is_connected(r));
        }
    }
    CHECK_THROWS_AS(contract_edge(p3, {0, 2}), Error);
}

TEST_CASE("twins")
{
    auto k3 = twins(generate({FamilyKind::Complete, 3}));
    CHECK(k3.size() == 3);
    for (const auto & t : k3)
        CHECK(t.kind == TwinKind::Adjacent);

    auto d = twins(fixture("fig6b_diamond"));
    REQUIRE(d.size() == 2);
    // {1,4} in figure labels is independent; {2,3} is the adjacent pair
    CHECK(d[0] == TwinPair{0, 3, TwinKind::Independent});
    CHECK(d[1] == TwinPair{1, 2, TwinKind::Adjacent});

    CHECK(twins(generate({FamilyKind::Path, 4})).empty());

    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Graph g = verify::random_connected_graph(rng, 7, 0.5);
        for (const auto & t : twins(g))
            CHECK(is_automorphism_swap(g, t.u, t.v));
    }
}

TEST_CASE("components")
{
    CHECK(components(generate({FamilyKind::Path, 5})).size() == 1);
    CHECK(components(Graph(0, {})).empty());

    Graph g = build_graph(7, {{0, 3}, {3, 5}, {1, 6}});
    auto parts = components(g);
    REQUIRE(parts.size() == 4);
    CHECK(parts[0].original == std::vector<Vertex>{0, 3, 5});
    CHECK(parts[1].original == std::vector<Vertex>{1, 6});
    CHECK(parts[2].original == std::vector<Vertex>{2});
    CHECK(parts[3].original == std::vector<Vertex>{4});
    VertexSet seen;
    for (const auto & c : parts)
        for (Vertex v : c.original) {
            CHECK_FALSE(seen.contains(v));
            seen.insert(v);
        }
    CHECK(seen == g.vertices());
}

TEST_CASE("structural queries")
{
    CHECK_FALSE(is_tree(generate({FamilyKind::Cycle, 4})));
    CHECK(is_tree(fixture("fig3_caterpillar")));
    CHECK(generate({FamilyKind::Complete, 3}).closed_neighborhood(0) == VertexSet{0, 1, 2});
    CHECK_THROWS_AS(generate({FamilyKind::Path, 3}).degree(3), Error);
    CHECK(leaves(fixture("fig3_caterpillar")).size() == 5);
}

TEST_CASE("edge list format")
{
    Graph g = parse_edge_list("# house\n5\n0 1\n0 2\n\n1 3\n2 3\n3 4\n3 4\n");
    CHECK(g == fixture("fig1_house"));
    CHECK(parse_edge_list(to_edge_list(fixture("fig6a_contract"))) == fixture("fig6a_contract"));
    CHECK_THROWS_AS(parse_edge_list("3\n1 1\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("3\n0 3\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("3\n0\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("# nothing\n"), Error);
    CHECK_THROWS_AS(parse_edge_list("x\n"), Error);
}

TEST_CASE("dot export")
{
    auto dot = to_dot(generate({FamilyKind::Path, 3}), VertexSet{1});
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("0 -- 1;") != std::string::npos);
    CHECK(dot.find("1 [label=\"1\", style=filled") != std::string::npos);
    CHECK(dot.find("0 [label=\"0\"];") != std::string::npos);
}
