#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/matrix.hpp"
#include "hyperspec/rational.hpp"

namespace hyperspec {

// Orientation of a vertex inside an edge. Inputs carry -1, outputs +1.
enum class Sign : std::int8_t { Input = -1, Output = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign flipped(Sign s) { return s == Sign::Input ? Sign::Output : Sign::Input; }

struct Incidence {
    std::size_t vertex;
    Sign sign;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

// One hyperedge: its incidences kept sorted by vertex index.
class Edge {
public:
    Edge() = default;
    explicit Edge(std::vector<Incidence> members);

    // Every listed vertex receives the same sign.
    static Edge uniform(std::span<const std::size_t> vertices, Sign sign);

    std::span<const Incidence> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::size_t vertex) const { return sign_of(vertex).has_value(); }
    std::optional<Sign> sign_of(std::size_t vertex) const;
    std::vector<std::size_t> vertex_set() const;

    friend bool operator==(const Edge&, const Edge&) = default;

private:
    std::vector<Incidence> members_;
};

enum class ViolationKind {
    EmptyEdge,
    DuplicateEdge,
    ZeroDegree,
    RepeatedMember,
    DuplicateVertexName,
};

struct Violation {
    ViolationKind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    std::string summary() const;
};

// Degrees of all vertices, deg v = |{e : v in e}|.
struct DegreeVector {
    std::vector<std::int64_t> values;

    std::int64_t total() const;
    std::int64_t max() const;
    // Sum of degrees over N, kept exact.
    Rational average_rational() const;
    double average() const { return average_rational().to_double(); }
};

// Gamma = (V, E, phi). Immutable once constructed. Construction never throws for
// structural problems; those are collected in validation() and rejected by the
// operations that need a well-formed instance.
class OrientedHypergraph {
public:
    OrientedHypergraph() = default;
    // Throws std::out_of_range when an incidence names a vertex index >= vertices.size().
    OrientedHypergraph(std::vector<std::string> vertices, std::vector<Edge> edges);

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t e) const { return edges_.at(e); }

    // phi(v, e) in {-1, 0, +1}.
    int orientation(std::size_t vertex, std::size_t edge) const;
    std::int64_t degree(std::size_t vertex) const { return degrees_.values.at(vertex); }
    const DegreeVector& degrees() const { return degrees_; }
    // Edge indices containing the vertex, ascending.
    std::span<const std::size_t> incident_edges(std::size_t vertex) const { return incident_.at(vertex); }

    const ValidationReport& validation() const { return report_; }
    bool is_valid() const { return report_.ok(); }
    // Throws ValidationError listing every violation.
    void require_valid() const;

    // Vertices sorted lexicographically, edges sorted by their member index lists.
    OrientedHypergraph canonical() const;

    friend bool operator==(const OrientedHypergraph& a, const OrientedHypergraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    DegreeVector degrees_;
    std::vector<std::vector<std::size_t>> incident_;
    ValidationReport report_;
};

ValidationReport validate(const OrientedHypergraph& h);

// N x M matrix with entry (i, j) = phi(v_i, e_j).
IntMatrix incidence(const OrientedHypergraph& h);

// A(i, j) = #edges where v_i, v_j are anti-oriented - #edges where they are co-oriented; zero diagonal.
IntMatrix adjacency(const OrientedHypergraph& h);

// c when every edge has exactly c members.
std::optional<int> is_uniform(const OrientedHypergraph& h);

// Every incidence carries the input sign.
bool is_all_inputs(const OrientedHypergraph& h);

// 2-uniform with exactly one input and one output per edge.
bool is_graph(const OrientedHypergraph& h);

// Same support, every sign replaced by +1.
OrientedHypergraph underlying(const OrientedHypergraph& h);

struct Bipartition {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
};

// Partition with every edge having all inputs on one side and all outputs on the other.
// Either side may be empty. Inputs of a component's lowest vertex land in `first`.
std::optional<Bipartition> bipartition(const OrientedHypergraph& h);

// True when (first, second) splits every edge's inputs and outputs across the two parts.
bool is_bipartition(const OrientedHypergraph& h, const Bipartition& parts);

// Components under edge-sharing reachability, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const OrientedHypergraph& h);

} // namespace hyperspec
