#include <doctest.h>

#include "corpus.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"

using namespace hyperspec;
using corpus::make;

TEST_CASE("coloring construction")
{
    const Coloring c(Target::Vertex, {1, 2, 1, 3});
    CHECK(c.num_colors() == 3);
    CHECK(c.classes() == std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}});
    CHECK_THROWS_AS(Coloring(Target::Vertex, {1, 3}), DomainError);
    CHECK_THROWS_AS(Coloring(Target::Vertex, {0, 1}), DomainError);

    const auto n = Coloring::normalized(Target::Vertex, {7, 7, 2, 9});
    CHECK(n.colors() == std::vector<int>{1, 1, 2, 3});
    const auto f = Coloring::from_classes(Target::Edge, 3, {{2}, {0, 1}});
    CHECK(f.colors() == std::vector<int>{2, 2, 1});
}

TEST_CASE("mode names round-trip")
{
    CHECK(std::holds_alternative<Strong>(parse_mode("strong")));
    CHECK(std::holds_alternative<EdgeStrong>(parse_mode("edge")));
    CHECK(std::get<DProper>(parse_mode("d-proper:2")).d == 2);
    CHECK(std::get<DProper>(parse_mode("d-proper(3)")).d == 3);
    CHECK(std::get<QTailored>(parse_mode("q-tailored:1/2")).q == Rational(1, 2));
    CHECK(std::get<DImproper>(parse_mode("d-improper:0")).d == 0);
    for (const char* text : {"strong", "edge", "d-proper(2)", "q-tailored(3/2)", "d-improper(1)"})
        CHECK(to_string(parse_mode(text)) == text);
    CHECK(mode_name(DProper{4}) == "d-proper");
    CHECK_THROWS_AS(parse_mode("purple"), SpecError);
    CHECK_THROWS_AS(parse_mode("d-proper"), SpecError);
    CHECK_THROWS_AS(parse_mode("d-proper:x"), SpecError);
    CHECK_THROWS_AS(parse_mode("d-proper(2"), SpecError);
    CHECK(target_of(EdgeStrong{}) == Target::Edge);
    CHECK(target_of(QTailored{Rational(1)}) == Target::Vertex);
}

TEST_CASE("mode applicability")
{
    const auto mixed = make(3, {{{0, -1}, {1, 1}, {2, -1}}});
    CHECK_NOTHROW(check_mode_applicable(mixed, Strong{}));
    CHECK_THROWS_AS(check_mode_applicable(mixed, QTailored{Rational(1)}), ModeMismatch);
    CHECK_THROWS_AS(check_mode_applicable(mixed, DImproper{0}), ModeMismatch);
    CHECK_THROWS_AS(check_mode_applicable(mixed, DProper{0}), ModeMismatch);
    const auto inputs = make(3, {{{0, -1}, {1, -1}, {2, -1}}});
    CHECK_THROWS_AS(check_mode_applicable(inputs, QTailored{Rational(3)}), ModeMismatch);
    CHECK_NOTHROW(check_mode_applicable(inputs, QTailored{Rational(2)}));
}

TEST_CASE("validity rules per mode")
{
    const auto h = make(4, {{{0, -1}, {1, -1}, {2, -1}}, {{1, -1}, {2, -1}, {3, -1}}});
    CHECK(is_valid(h, Coloring(Target::Vertex, {1, 2, 3, 1}), Strong{}));
    CHECK_FALSE(is_valid(h, Coloring(Target::Vertex, {1, 2, 2, 1}), Strong{}));
    CHECK(is_valid(h, Coloring(Target::Vertex, {1, 2, 2, 1}), DProper{2}));
    CHECK_FALSE(is_valid(h, Coloring(Target::Vertex, {1, 1, 1, 2}), DProper{2}));
    CHECK(is_valid(h, Coloring(Target::Edge, {1, 2}), EdgeStrong{}));
    CHECK_FALSE(is_valid(h, Coloring(Target::Edge, {1, 1}), EdgeStrong{}));
    CHECK_THROWS_AS(is_valid(h, Coloring(Target::Edge, {1, 2}), Strong{}), ModeMismatch);
    CHECK_THROWS_AS(is_valid(h, Coloring(Target::Vertex, {1, 2, 3}), Strong{}), ModeMismatch);

    // |A_{v2,v3}| = 2; v2 has degree 2, so q = 1 allows v2 and v3 together, q = 1/2 does not.
    CHECK(is_valid(h, Coloring(Target::Vertex, {1, 2, 2, 1}), QTailored{Rational(1)}));
    CHECK_FALSE(is_valid(h, Coloring(Target::Vertex, {1, 2, 2, 1}), QTailored{Rational(1, 2)}));

    const auto path = make(3, {{{0, -1}, {1, 1}}, {{1, -1}, {2, 1}}});
    CHECK(is_valid(path, Coloring(Target::Vertex, {1, 1, 2}), DImproper{1}));
    CHECK_FALSE(is_valid(path, Coloring(Target::Vertex, {1, 1, 1}), DImproper{1}));
    CHECK(is_valid(path, Coloring(Target::Vertex, {1, 1, 1}), DImproper{2}));
}

TEST_CASE("auxiliary graphs")
{
    const auto h = hyperflower(3, 3, 1);
    const auto line = intersection_graph(h);
    CHECK(line.size() == 3);
    CHECK(line.num_edges() == 3);
    const auto primal = primal_graph(h);
    CHECK(primal.size() == 7);
    CHECK(primal.num_edges() == 9);
    CHECK(primal.adjacent(0, 1));
    CHECK_FALSE(primal.adjacent(1, 3));
}
