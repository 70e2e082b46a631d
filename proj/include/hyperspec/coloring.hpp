#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/rational.hpp"

namespace hyperspec {

enum class Target { Vertex, Edge };

// Partition of vertices (or edges) into classes 1..k. Every item is colored and every
// color in 1..k is used.
class Coloring {
public:
    // colors[i] in 1..k; throws DomainError unless the colors form a contiguous range 1..k.
    Coloring(Target target, std::vector<int> colors);

    // Relabels arbitrary nonnegative labels to 1..k in order of first appearance.
    static Coloring normalized(Target target, const std::vector<int>& labels);
    // Builds from explicit classes over items 0..n-1; class i becomes color i + 1.
    static Coloring from_classes(Target target, std::size_t n, const std::vector<std::vector<std::size_t>>& classes);

    Target target() const { return target_; }
    std::size_t size() const { return colors_.size(); }
    int num_colors() const { return k_; }
    int color(std::size_t item) const { return colors_.at(item); }
    const std::vector<int>& colors() const { return colors_; }
    // classes()[i] holds the items of color i + 1, ascending.
    std::vector<std::vector<std::size_t>> classes() const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    Target target_;
    std::vector<int> colors_;
    int k_ = 0;
};

// All members of every edge receive distinct colors.
struct Strong {
    friend bool operator==(const Strong&, const Strong&) = default;
};
// Every edge holds at most d vertices of each color.
struct DProper {
    int d;
    friend bool operator==(const DProper&, const DProper&) = default;
};
// sum_{w same class} |A_{v,w}| <= q deg v for every vertex; c-uniform all-inputs input only.
struct QTailored {
    Rational q;
    friend bool operator==(const QTailored&, const QTailored&) = default;
};
// Every vertex has at most d same-colored neighbours; graphs only.
struct DImproper {
    int d;
    friend bool operator==(const DImproper&, const DImproper&) = default;
};
// Intersecting edges receive distinct colors.
struct EdgeStrong {
    friend bool operator==(const EdgeStrong&, const EdgeStrong&) = default;
};

using ColoringMode = std::variant<Strong, DProper, QTailored, DImproper, EdgeStrong>;

Target target_of(const ColoringMode& mode);

// "strong", "d-proper(2)", "q-tailored(1/2)", "d-improper(0)", "edge".
std::string to_string(const ColoringMode& mode);
// Inverse of a parameterised name: "strong", "edge", "d-proper:2", "q-tailored:1/2",
// "d-improper:0". Also accepts the to_string() spelling "d-proper(2)". Throws SpecError.
ColoringMode parse_mode(std::string_view text);

// Name without parameters: "strong", "d-proper", "q-tailored", "d-improper", "edge".
std::string mode_name(const ColoringMode& mode);

// Throws ModeMismatch when the mode's scope excludes h, or its parameter is out of range.
void check_mode_applicable(const OrientedHypergraph& h, const ColoringMode& mode);

// Exact check of the coloring rule. Throws ModeMismatch for shape/target/dimension mismatches.
bool is_valid(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode);

// Undirected simple graph on 0..n-1 with sorted adjacency lists.
struct SimpleGraph {
    std::vector<std::vector<std::size_t>> adjacency;

    std::size_t size() const { return adjacency.size(); }
    bool adjacent(std::size_t a, std::size_t b) const;
    std::size_t num_edges() const;
};

// Vertices are edge indices; adjacent iff the edges intersect.
SimpleGraph intersection_graph(const OrientedHypergraph& h);

// Vertices of h; adjacent iff some edge contains both.
SimpleGraph primal_graph(const OrientedHypergraph& h);

enum class SolveStatus { Solved, Inconclusive };

struct SolverOptions {
    std::uint64_t node_budget = 10'000'000;
};

struct ChromaticResult {
    SolveStatus status = SolveStatus::Inconclusive;
    std::optional<int> number;   // set when solved
    int lower_bound = 1;         // proven lower bound
    int upper_bound = 0;         // best coloring found
    std::optional<Coloring> witness;  // valid coloring with upper_bound colors
    std::uint64_t nodes = 0;
};

// Exact coloring number by branch and bound. Returns Inconclusive (never a wrong number)
// once the node budget is spent.
ChromaticResult chromatic(const OrientedHypergraph& h, const ColoringMode& mode, SolverOptions options = {});

inline constexpr std::size_t kBruteForceItemCap = 9;

// Minimal number of colors by exhaustive enumeration. Independent of chromatic();
// used as its oracle. Throws DomainError above kBruteForceItemCap items.
int brute_force_chromatic(const OrientedHypergraph& h, const ColoringMode& mode);

} // namespace hyperspec
