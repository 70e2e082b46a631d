#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperspec/hypergraph.hpp"

namespace hyperspec {

// H^c_{p,k}: p petals sharing k central vertices.
struct Hyperflower {
    int c, p, k;
    friend bool operator==(const Hyperflower&, const Hyperflower&) = default;
};
// Gamma^c_{s_1..s_k}: all c-sets meeting each part at most once.
struct CompleteMultipartite {
    int c;
    std::vector<int> sizes;
    friend bool operator==(const CompleteMultipartite&, const CompleteMultipartite&) = default;
};
// Gamma^c(s, k): k parts of size s.
struct UniformMultipartite {
    int c, s, k;
    friend bool operator==(const UniformMultipartite&, const UniformMultipartite&) = default;
};
struct DisjointEdges {
    int c, m;
    friend bool operator==(const DisjointEdges&, const DisjointEdges&) = default;
};
struct ExampleA0 {
    friend bool operator==(const ExampleA0&, const ExampleA0&) = default;
};
// K_n with one input and one output per edge.
struct CompleteGraph {
    int n;
    friend bool operator==(const CompleteGraph&, const CompleteGraph&) = default;
};

enum class Orientation {
    AllInputs,    // every incidence -1
    RandomSigns,  // each incidence +-1 with probability 1/2
    Graph,        // c = 2; lower index input, higher index output
};

struct RandomUniform {
    int c, n, m;
    std::uint64_t seed;
    Orientation orientation = Orientation::AllInputs;
    friend bool operator==(const RandomUniform&, const RandomUniform&) = default;
};

using FamilySpec =
    std::variant<Hyperflower, CompleteMultipartite, UniformMultipartite, DisjointEdges, ExampleA0, CompleteGraph, RandomUniform>;

// "hyperflower:c=9,p=3,k=2", "multipartite:c=3,s=2,k=3", "multipartite:c=3,sizes=2-2-3",
// "disjoint:c=3,m=5", "complete:n=4", "examplea0", "random:c=3,n=8,m=6,seed=1,orient=inputs|signs|graph".
// Throws SpecError for unknown families, unknown or missing keys, and parameter violations.
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Throws DomainError for parameter violations.
OrientedHypergraph generate(const FamilySpec& spec);

OrientedHypergraph hyperflower(int c, int p, int k);
OrientedHypergraph complete_multipartite(int c, const std::vector<int>& sizes);
OrientedHypergraph uniform_multipartite(int c, int s, int k);
OrientedHypergraph example_a0();
OrientedHypergraph disjoint_edges(int c, int m);
OrientedHypergraph complete_graph(int n);
// Seeded by std::mt19937_64. Edges are distinct vertex sets; instances leaving a vertex
// uncovered are redrawn as a whole. Throws DomainError if M > C(N, c) or M c < N.
OrientedHypergraph random_uniform(const RandomUniform& spec);

// Closed-form spectra, ascending.
std::vector<double> hyperflower_spectrum(int c, int p, int k);
std::vector<double> uniform_multipartite_spectrum(int c, int s, int k);
// Known spectrum of the family, when one exists (random instances and unequal parts have none).
std::optional<std::vector<double>> closed_form_spectrum(const FamilySpec& spec);

// Expands a corpus string into family specs. Besides a single family spec, accepts
// "grid:<family>:<key>=<lo>..<hi>,..." (cartesian product over integer ranges, points
// violating the family's parameter rules skipped). Random specs are repeated `count`
// times with seeds seed, seed + 1, ...; the spec's own seed is used when `seed` is absent.
std::vector<FamilySpec> expand_corpus(std::string_view text, int count = 1, std::optional<std::uint64_t> seed = {});

} // namespace hyperspec
