#include "ftzf/search.hpp"
#include "ftzf/trees.hpp"
#include "ftzf/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace ftzf;

namespace {

ErrorKind kind_of(const std::function<void()> & f)
{
    try {
        f();
    }
    catch (const Error & e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::Parse;
}

} // namespace

TEST_CASE("path_cover_number")
{
    for (int n = 1; n <= 10; ++n)
        CHECK(path_cover_number(generate({FamilyKind::Path, n})).value == 1);
    CHECK(path_cover_number(generate({FamilyKind::Star, 3})).value == 2);
    CHECK(path_cover_number(generate({FamilyKind::Star, 6})).value == 5);
    CHECK(path_cover_number(fixture("fig4_ftcover_tree")).value == 2);
    CHECK(path_cover_number(fixture("fig3_caterpillar")).value == 3);

    auto c = path_cover_number(fixture("fig4_ftcover_tree"));
    CHECK_NOTHROW(validate_cover(fixture("fig4_ftcover_tree"), c.cover));
    CHECK(static_cast<int>(c.cover.paths.size()) == c.value);
}

TEST_CASE("ft_path_cover_value")
{
    for (int n = 2; n <= 9; ++n)
        CHECK(ft_path_cover_value(generate({FamilyKind::Path, n}))->value == 2);
    CHECK(ft_path_cover_value(fixture("fig4_ftcover_tree"))->value == 4);
    CHECK(ft_path_cover_value(generate({FamilyKind::Star, 3}))->value == 3);
    CHECK_FALSE(ft_path_cover_value(Graph(1, {})).has_value());

    const Graph t = fixture("fig4_ftcover_tree");
    auto best = ft_path_cover_value(t);
    REQUIRE(best);
    validate_cover(t, best->cover);
    const VertexSet s = ft_set_from_cover(t, best->cover);
    CHECK(s.size() == best->value);
    CHECK(is_k_fault_tolerant(t, s, 1));
}

TEST_CASE("ft_set_from_cover")
{
    const Graph t = fixture("fig4_ftcover_tree");
    PathCover red{{{0, 1, 2, 3, 4}, {5}, {6}}};
    CHECK(red.singletons() == 2);
    CHECK(red.multi_vertex_paths() == 1);
    CHECK(ft_set_from_cover(t, red) == VertexSet{0, 4, 5, 6});
    CHECK(is_k_fault_tolerant(t, VertexSet{0, 4, 5, 6}, 1));
}

TEST_CASE("cover validation")
{
    const Graph t = fixture("fig4_ftcover_tree");
    CHECK(kind_of([&] { validate_cover(t, PathCover{{{0, 1, 2, 3, 4}, {5}}}); }) == ErrorKind::InvalidCover);
    CHECK(kind_of([&] { validate_cover(t, PathCover{{{0, 2, 1, 3, 4}, {5}, {6}}}); }) == ErrorKind::InvalidCover);
    CHECK(kind_of([&] { validate_cover(t, PathCover{{{0, 1, 2, 3, 4}, {5}, {6}, {6}}}); }) == ErrorKind::InvalidCover);
    CHECK(kind_of([&] { validate_cover(t, PathCover{{{0, 1, 2, 3, 4}, {5}, {7}}}); }) == ErrorKind::InvalidCover);
    CHECK(kind_of([&] { ft_set_from_cover(t, PathCover{{{0, 1}}}); }) == ErrorKind::InvalidCover);
}

TEST_CASE("non-trees are rejected")
{
    const Graph c4 = generate({FamilyKind::Cycle, 4});
    CHECK(kind_of([&] { path_cover_number(c4); }) == ErrorKind::NotATree);
    CHECK(kind_of([&] { ft_path_cover_value(c4); }) == ErrorKind::NotATree);
    CHECK(kind_of([&] { leaf_bound_check(c4); }) == ErrorKind::NotATree);
    CHECK(kind_of([] { path_cover_number(Graph(3, {{0, 1}})); }) == ErrorKind::NotATree);
}

TEST_CASE("leaf_bound_check")
{
    auto cat = leaf_bound_check(fixture("fig3_caterpillar"));
    CHECK(cat.leaf_count == 5);
    CHECK(cat.leaves_fault_tolerant);
    for (int n = 2; n <= 8; ++n) {
        auto p = leaf_bound_check(generate({FamilyKind::Path, n}));
        CHECK(p.leaf_count == 2);
        CHECK(p.leaves_fault_tolerant);
        auto s = leaf_bound_check(generate({FamilyKind::Star, n}));
        CHECK(s.leaf_count == n);
        CHECK(s.leaves_fault_tolerant);
    }
}

TEST_CASE("dynamic program matches brute force over covers")
{
    for (const Graph & t : verify::tree_pool(8)) {
        const auto covers = all_path_covers(t);
        REQUIRE_FALSE(covers.empty());
        int p = t.order(), pt = 2 * t.order();
        for (const auto & c : covers) {
            validate_cover(t, c);
            p = std::min(p, static_cast<int>(c.paths.size()));
            pt = std::min(pt, 2 * c.multi_vertex_paths() + c.singletons());
        }
        CHECK(path_cover_number(t).value == p);
        CHECK(ft_path_cover_value(t)->value == pt);
    }
}

TEST_CASE("path cover number equals zero forcing number on trees")
{
    for (int n = 1; n <= 10; ++n)
        for (const Graph & t : all_trees(n))
            CHECK(path_cover_number(t).value == zf_number(t).value);
}

TEST_CASE("all_trees")
{
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        const auto trees = all_trees(n);
        CHECK(trees.size() == static_cast<std::size_t>(expected[n - 1]));
        for (const auto & t : trees) {
            CHECK(t.order() == n);
            CHECK(is_tree(t));
        }
    }
    CHECK(all_trees(5) == all_trees(5));
}
