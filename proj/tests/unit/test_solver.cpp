#include <doctest.h>

#include "corpus.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"

using namespace hyperspec;
using corpus::make;

namespace {

void check_solution(const OrientedHypergraph& h, const ColoringMode& mode, int expected)
{
    const auto r = chromatic(h, mode);
    REQUIRE(r.status == SolveStatus::Solved);
    CHECK(r.number == expected);
    CHECK(r.lower_bound == expected);
    CHECK(r.upper_bound == expected);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->num_colors() == expected);
    CHECK(is_valid(h, *r.witness, mode));
}

} // namespace

TEST_CASE("known coloring numbers")
{
    check_solution(complete_graph(5), Strong{}, 5);
    check_solution(complete_graph(5), DImproper{0}, 5);
    check_solution(complete_graph(5), DImproper{1}, 3);
    check_solution(make(5, {{{0, -1}, {1, 1}}, {{1, -1}, {2, 1}}, {{2, -1}, {3, 1}}, {{3, -1}, {4, 1}}, {{4, -1}, {0, 1}}}),
                   Strong{}, 3);
    check_solution(disjoint_edges(4, 3), Strong{}, 4);
    check_solution(disjoint_edges(4, 3), EdgeStrong{}, 1);
    check_solution(hyperflower(4, 5, 2), EdgeStrong{}, 5);
    check_solution(hyperflower(9, 3, 2), DProper{3}, 3);
    check_solution(uniform_multipartite(3, 2, 4), Strong{}, 4);
}

TEST_CASE("solver agrees with exhaustive enumeration")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto h = corpus::random_mixed(seed);
        for (const ColoringMode& mode : {ColoringMode{Strong{}}, ColoringMode{DProper{2}}, ColoringMode{EdgeStrong{}}}) {
            CAPTURE(seed);
            CHECK(chromatic(h, mode).number == brute_force_chromatic(h, mode));
        }
    }
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto g = corpus::random_uniform(seed, 2, 4, 8, 12, Orientation::Graph);
        for (int d = 0; d <= 2; ++d)
            CHECK(chromatic(g, DImproper{d}).number == brute_force_chromatic(g, DImproper{d}));
        const auto u = corpus::random_uniform(seed, 3, 4, 8, 9, Orientation::AllInputs);
        for (const auto& q : {Rational(0), Rational(1, 2), Rational(1), Rational(2)})
            CHECK(chromatic(u, QTailored{q}).number == brute_force_chromatic(u, QTailored{q}));
    }
}

TEST_CASE("budget exhaustion is inconclusive, never wrong")
{
    const auto h = uniform_multipartite(2, 2, 6);
    const auto r = chromatic(h, Strong{}, SolverOptions{1});
    if (r.status == SolveStatus::Inconclusive) {
        CHECK_FALSE(r.number.has_value());
        CHECK(r.lower_bound <= 6);
        CHECK(r.upper_bound >= 6);
    }
    else {
        CHECK(r.number == 6);
    }
    if (r.witness)
        CHECK(is_valid(h, *r.witness, Strong{}));
}

TEST_CASE("brute force refuses large inputs")
{
    CHECK_THROWS_AS(brute_force_chromatic(complete_graph(10), Strong{}), DomainError);
    CHECK(brute_force_chromatic(complete_graph(4), Strong{}) == 4);
}

TEST_CASE("solver rejects inapplicable modes")
{
    CHECK_THROWS_AS(chromatic(hyperflower(3, 2, 1), DImproper{0}), ModeMismatch);
    CHECK_THROWS_AS(chromatic(make(3, {{{0, -1}, {1, 1}}}), Strong{}), ValidationError);
}

TEST_CASE("monotonicity in the mode parameter")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto u = corpus::random_uniform(seed, 4, 5, 8, 9, Orientation::AllInputs);
        int previous = 1 << 20;
        for (int d = 1; d <= 3; ++d) {
            const int chi = *chromatic(u, DProper{d}).number;
            CHECK(chi <= previous);
            CHECK(chi >= (4 + d - 1) / d);
            previous = chi;
        }
        previous = 1 << 20;
        for (const auto& q : {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)}) {
            const int chi = *chromatic(u, QTailored{q}).number;
            CHECK(chi <= previous);
            previous = chi;
        }
        const auto g = corpus::random_uniform(seed, 2, 4, 8, 12, Orientation::Graph);
        previous = 1 << 20;
        for (int d = 0; d <= 3; ++d) {
            const int chi = *chromatic(g, DImproper{d}).number;
            CHECK(chi <= previous);
            previous = chi;
        }
    }
}

TEST_CASE("witnesses carry over between modes on all-inputs input")
{
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto u = corpus::random_uniform(seed, 3, 4, 8, 9, Orientation::AllInputs);
        const auto strong = chromatic(u, Strong{});
        CHECK(is_valid(u, *strong.witness, DProper{1}));
        const auto proper = chromatic(u, DProper{2});
        CHECK(is_valid(u, *proper.witness, QTailored{Rational(1)}));
    }
}

TEST_CASE("edge coloring is vertex coloring of the intersection graph")
{
    int compared = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const auto h = corpus::random_mixed(seed);
        const auto line = intersection_graph(h);
        std::vector<std::vector<std::pair<std::size_t, int>>> edges;
        bool isolated = false;
        for (std::size_t a = 0; a < line.size(); ++a) {
            isolated = isolated || line.adjacency[a].empty();
            for (std::size_t b : line.adjacency[a])
                if (a < b)
                    edges.push_back({{a, -1}, {b, 1}});
        }
        const int chi_edge = *chromatic(h, EdgeStrong{}).number;
        std::int64_t max_degree = 0;
        for (std::size_t v = 0; v < h.num_vertices(); ++v)
            max_degree = std::max(max_degree, h.degree(v));
        CHECK(chi_edge >= max_degree);
        if (isolated)
            continue;
        ++compared;
        CHECK(chi_edge == chromatic(make(line.size(), edges), Strong{}).number);
    }
    CHECK(compared > 0);
}
