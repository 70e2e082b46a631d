#include <doctest.h>

#include "corpus.hpp"
#include "hyperspec/bounds.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"

using namespace hyperspec;

namespace {

SharpnessReport battery_for(const OrientedHypergraph& h, const ColoringMode& mode)
{
    const auto r = chromatic(h, mode);
    REQUIRE(r.witness.has_value());
    return check_sharpness(h, *r.witness, mode);
}

} // namespace

TEST_CASE("strong battery passes on sharp multipartite instances")
{
    for (auto [c, s, k] : {std::tuple{3, 1, 3}, std::tuple{3, 2, 3}, std::tuple{4, 1, 5}, std::tuple{2, 2, 4}}) {
        CAPTURE(c);
        CAPTURE(s);
        CAPTURE(k);
        const auto report = battery_for(uniform_multipartite(c, s, k), Strong{});
        CHECK(report.kind == BoundKind::General);
        CHECK(report.pass());
        CHECK(report.first_failure() == nullptr);
    }
}

TEST_CASE("strong battery on K_n")
{
    const auto report = battery_for(complete_graph(6), Strong{});
    CHECK(report.colors == 6);
    CHECK(report.pass());
}

TEST_CASE("a coloring above the bound fails the equality condition")
{
    const auto h = complete_graph(4);
    const auto report = check_sharpness(h, Coloring(Target::Vertex, {1, 2, 3, 4}), Strong{});
    CHECK(report.pass());
    const auto path = corpus::make(4, {{{0, -1}, {1, 1}}, {{1, -1}, {2, 1}}, {{2, -1}, {3, 1}}});
    const auto loose = check_sharpness(path, Coloring(Target::Vertex, {1, 2, 3, 1}), Strong{});
    CHECK_FALSE(loose.pass());
    REQUIRE(loose.first_failure() != nullptr);
}

TEST_CASE("d-proper battery on the nine-uniform hyperflower")
{
    const auto report = battery_for(hyperflower(9, 3, 2), DProper{3});
    CHECK(report.kind == BoundKind::DProper);
    CHECK(report.colors == 3);
    CHECK(report.pass());
}

TEST_CASE("tailored battery with q = 0 on a sharp multipartite instance")
{
    // q = 0 tailored colorings are strong colorings of all-inputs instances.
    const auto report = battery_for(uniform_multipartite(3, 1, 3), QTailored{Rational(0)});
    CHECK(report.kind == BoundKind::QTailored);
    CHECK(report.pass());
}

TEST_CASE("d-improper battery on K_n with d = 0")
{
    const auto report = battery_for(complete_graph(5), DImproper{0});
    CHECK(report.pass());
}

TEST_CASE("edge battery on the three-uniform hyperflower")
{
    const auto report = battery_for(hyperflower(3, 4, 2), EdgeStrong{});
    CHECK(report.kind == BoundKind::Edge);
    CHECK(report.colors == 4);
    CHECK(report.pass());
}

TEST_CASE("battery rejects invalid colorings")
{
    CHECK_THROWS_AS(check_sharpness(complete_graph(3), Coloring(Target::Vertex, {1, 1, 2}), Strong{}), ModeMismatch);
}
