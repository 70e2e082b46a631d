#include <doctest.h>

#include "corpus.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"

using namespace hyperspec;
using corpus::make;

TEST_CASE("degrees and orientation")
{
    // e1 = {v1-, v2+, v3-}, e2 = {v3+, v4+}
    const auto h = make(4, {{{0, -1}, {1, 1}, {2, -1}}, {{2, 1}, {3, 1}}});
    REQUIRE(h.is_valid());
    CHECK(h.degree(2) == 2);
    CHECK(h.degrees().total() == 5);
    CHECK(h.degrees().average_rational() == Rational(5, 4));
    CHECK(h.orientation(0, 0) == -1);
    CHECK(h.orientation(1, 0) == 1);
    CHECK(h.orientation(0, 1) == 0);
    CHECK(h.incident_edges(2).size() == 2);
}

TEST_CASE("incidence and adjacency")
{
    const auto h = make(4, {{{0, -1}, {1, 1}, {2, -1}}, {{2, 1}, {3, 1}}});
    const auto inc = incidence(h);
    CHECK(inc.rows() == 4);
    CHECK(inc.cols() == 2);
    CHECK(inc(2, 0) == -1);
    CHECK(inc(2, 1) == 1);
    const auto a = adjacency(h);
    CHECK(a(0, 1) == 1);   // anti-oriented
    CHECK(a(0, 2) == -1);  // co-oriented
    CHECK(a(2, 3) == -1);
    CHECK(a(0, 3) == 0);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(a(i, i) == 0);
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(a(i, j) == a(j, i));
    }
}

TEST_CASE("adjacency accumulates over shared edges")
{
    // v1, v2 co-oriented in two edges and anti-oriented in one.
    const auto h = make(4, {{{0, -1}, {1, -1}}, {{0, 1}, {1, 1}, {2, 1}}, {{0, -1}, {1, 1}, {3, -1}}});
    CHECK(adjacency(h)(0, 1) == -1);
}

TEST_CASE("validation collects every violation")
{
    SUBCASE("isolated vertex")
    {
        const auto h = make(3, {{{0, -1}, {1, -1}}});
        CHECK_FALSE(h.is_valid());
        CHECK(h.validation().has(ViolationKind::ZeroDegree));
        CHECK_THROWS_AS(h.require_valid(), ValidationError);
    }
    SUBCASE("empty and duplicate edges")
    {
        const auto h = make(2, {{{0, -1}, {1, 1}}, {{0, -1}, {1, 1}}, {}});
        CHECK(h.validation().has(ViolationKind::DuplicateEdge));
        CHECK(h.validation().has(ViolationKind::EmptyEdge));
        CHECK(h.validation().violations.size() >= 2);
    }
    SUBCASE("repeated member")
    {
        const auto h = make(2, {{{0, -1}, {0, 1}, {1, 1}}});
        CHECK(h.validation().has(ViolationKind::RepeatedMember));
    }
    SUBCASE("duplicate vertex name")
    {
        const OrientedHypergraph h({"a", "a"}, {Edge({{0, Sign::Input}, {1, Sign::Input}})});
        CHECK(h.validation().has(ViolationKind::DuplicateVertexName));
    }
    SUBCASE("out of range incidence")
    {
        CHECK_THROWS_AS(OrientedHypergraph({"a"}, {Edge({{3, Sign::Input}})}), std::out_of_range);
    }
}

TEST_CASE("shape predicates")
{
    const auto g = make(3, {{{0, -1}, {1, 1}}, {{1, -1}, {2, 1}}});
    CHECK(is_uniform(g) == 2);
    CHECK(is_graph(g));
    CHECK_FALSE(is_all_inputs(g));
    const auto u = underlying(g);
    CHECK_FALSE(is_graph(u));
    for (const auto& e : u.edges())
        for (const auto& inc : e.members())
            CHECK(inc.sign == Sign::Output);
    const auto mixed = make(3, {{{0, -1}, {1, -1}}, {{0, -1}, {1, -1}, {2, -1}}});
    CHECK_FALSE(is_uniform(mixed).has_value());
    CHECK(is_all_inputs(mixed));
}

TEST_CASE("bipartition")
{
    // Inputs {v1, v2}, outputs {v3, v4} in every edge.
    const auto h = make(4, {{{0, -1}, {2, 1}}, {{1, -1}, {2, 1}, {3, 1}}, {{0, -1}, {1, -1}, {3, 1}}});
    const auto parts = bipartition(h);
    REQUIRE(parts.has_value());
    CHECK(is_bipartition(h, *parts));
    CHECK(parts->first.size() + parts->second.size() == 4);

    // Odd cycle of anti-oriented pairs: no split exists.
    const auto odd = make(3, {{{0, -1}, {1, 1}}, {{1, -1}, {2, 1}}, {{2, -1}, {0, 1}}});
    CHECK_FALSE(bipartition(odd).has_value());
    CHECK_FALSE(is_bipartition(odd, Bipartition{{0}, {1, 2}}));
}

TEST_CASE("components and canonical form")
{
    const auto h = make(5, {{{3, -1}, {4, 1}}, {{0, -1}, {1, -1}}, {{1, 1}, {2, -1}}});
    const auto comps = connected_components(h);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::size_t>{0, 1, 2});
    CHECK(comps[1] == std::vector<std::size_t>{3, 4});

    const OrientedHypergraph shuffled({"b", "a"}, {Edge({{1, Sign::Input}, {0, Sign::Output}})});
    const auto canon = shuffled.canonical();
    CHECK(canon.vertices() == std::vector<std::string>{"a", "b"});
    CHECK(canon.orientation(0, 0) == -1);
    CHECK(canon.orientation(1, 0) == 1);
    CHECK(canon.canonical() == canon);
}
