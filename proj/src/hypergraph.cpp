#include "hyperspec/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hyperspec/error.hpp"

namespace hyperspec {

Edge::Edge(std::vector<Incidence> members)
    : members_(std::move(members))
{
    std::stable_sort(members_.begin(), members_.end(),
                     [](const Incidence& a, const Incidence& b) { return a.vertex < b.vertex; });
}

Edge Edge::uniform(std::span<const std::size_t> vertices, Sign sign)
{
    std::vector<Incidence> members;
    members.reserve(vertices.size());
    for (std::size_t v : vertices)
        members.push_back({v, sign});
    return Edge(std::move(members));
}

std::optional<Sign> Edge::sign_of(std::size_t vertex) const
{
    auto it = std::lower_bound(members_.begin(), members_.end(), vertex,
                               [](const Incidence& inc, std::size_t v) { return inc.vertex < v; });
    if (it == members_.end() || it->vertex != vertex)
        return std::nullopt;
    return it->sign;
}

std::vector<std::size_t> Edge::vertex_set() const
{
    std::vector<std::size_t> out;
    out.reserve(members_.size());
    for (const auto& inc : members_)
        out.push_back(inc.vertex);
    return out;
}

bool ValidationReport::has(ViolationKind kind) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i)
            os << "; ";
        os << violations[i].message;
    }
    return os.str();
}

std::int64_t DegreeVector::total() const
{
    return std::accumulate(values.begin(), values.end(), std::int64_t{0});
}

std::int64_t DegreeVector::max() const
{
    return values.empty() ? 0 : *std::max_element(values.begin(), values.end());
}

Rational DegreeVector::average_rational() const
{
    if (values.empty())
        return Rational(0);
    return Rational(total(), static_cast<std::int64_t>(values.size()));
}

OrientedHypergraph::OrientedHypergraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges))
{
    const std::size_t n = vertices_.size();
    degrees_.values.assign(n, 0);
    incident_.assign(n, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        std::size_t previous = static_cast<std::size_t>(-1);
        for (const auto& inc : edges_[e].members()) {
            if (inc.vertex >= n)
                throw std::out_of_range("edge " + std::to_string(e) + " names vertex index "
                                        + std::to_string(inc.vertex) + " beyond " + std::to_string(n));
            if (inc.vertex == previous)
                continue;
            previous = inc.vertex;
            ++degrees_.values[inc.vertex];
            incident_[inc.vertex].push_back(e);
        }
    }
    report_ = validate(*this);
}

int OrientedHypergraph::orientation(std::size_t vertex, std::size_t edge) const
{
    auto s = edges_.at(edge).sign_of(vertex);
    return s ? to_int(*s) : 0;
}

void OrientedHypergraph::require_valid() const
{
    if (!report_.ok())
        throw ValidationError("invalid oriented hypergraph: " + report_.summary());
}

OrientedHypergraph OrientedHypergraph::canonical() const
{
    std::vector<std::size_t> order(vertices_.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [this](std::size_t a, std::size_t b) { return vertices_[a] < vertices_[b]; });
    std::vector<std::size_t> new_index(vertices_.size());
    std::vector<std::string> names(vertices_.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        new_index[order[i]] = i;
        names[i] = vertices_[order[i]];
    }
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        std::vector<Incidence> members;
        for (const auto& inc : e.members())
            members.push_back({new_index[inc.vertex], inc.sign});
        edges.emplace_back(std::move(members));
    }
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return a.vertex_set() < b.vertex_set();
    });
    return OrientedHypergraph(std::move(names), std::move(edges));
}

ValidationReport validate(const OrientedHypergraph& h)
{
    ValidationReport report;
    auto add = [&report](ViolationKind kind, std::string message) {
        report.violations.push_back({kind, std::move(message)});
    };

    std::set<std::string> seen_names;
    for (const auto& name : h.vertices())
        if (!seen_names.insert(name).second)
            add(ViolationKind::DuplicateVertexName, "duplicate vertex name '" + name + "'");

    std::map<std::vector<std::size_t>, std::size_t> seen_edges;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const Edge& edge = h.edge(e);
        if (edge.empty()) {
            add(ViolationKind::EmptyEdge, "empty edge " + std::to_string(e));
            continue;
        }
        auto set = edge.vertex_set();
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            add(ViolationKind::RepeatedMember, "edge " + std::to_string(e) + " lists a vertex twice");
        auto [it, inserted] = seen_edges.emplace(std::move(set), e);
        if (!inserted)
            add(ViolationKind::DuplicateEdge, "duplicate edge: edges " + std::to_string(it->second)
                                                  + " and " + std::to_string(e) + " share a vertex set");
    }

    for (std::size_t v = 0; v < h.num_vertices(); ++v)
        if (h.degree(v) == 0)
            add(ViolationKind::ZeroDegree, "zero degree: vertex '" + h.vertices()[v] + "' lies in no edge");
    return report;
}

IntMatrix incidence(const OrientedHypergraph& h)
{
    h.require_valid();
    IntMatrix m(h.num_vertices(), h.num_edges());
    for (std::size_t e = 0; e < h.num_edges(); ++e)
        for (const auto& inc : h.edge(e).members())
            m(inc.vertex, e) = to_int(inc.sign);
    return m;
}

IntMatrix adjacency(const OrientedHypergraph& h)
{
    h.require_valid();
    const std::size_t n = h.num_vertices();
    IntMatrix a(n, n);
    for (const auto& edge : h.edges()) {
        auto members = edge.members();
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                // Anti-oriented pairs count +1, co-oriented pairs -1.
                const std::int64_t w = members[x].sign == members[y].sign ? -1 : 1;
                a(members[x].vertex, members[y].vertex) += w;
                a(members[y].vertex, members[x].vertex) += w;
            }
    }
    return a;
}

std::optional<int> is_uniform(const OrientedHypergraph& h)
{
    h.require_valid();
    if (h.num_edges() == 0)
        return std::nullopt;
    const std::size_t c = h.edge(0).size();
    for (const auto& e : h.edges())
        if (e.size() != c)
            return std::nullopt;
    return static_cast<int>(c);
}

bool is_all_inputs(const OrientedHypergraph& h)
{
    for (const auto& e : h.edges())
        for (const auto& inc : e.members())
            if (inc.sign != Sign::Input)
                return false;
    return true;
}

bool is_graph(const OrientedHypergraph& h)
{
    for (const auto& e : h.edges()) {
        if (e.size() != 2)
            return false;
        if (e.members()[0].sign == e.members()[1].sign)
            return false;
    }
    return true;
}

OrientedHypergraph underlying(const OrientedHypergraph& h)
{
    h.require_valid();
    std::vector<Edge> edges;
    edges.reserve(h.num_edges());
    for (const auto& e : h.edges()) {
        std::vector<Incidence> members;
        for (const auto& inc : e.members())
            members.push_back({inc.vertex, Sign::Output});
        edges.emplace_back(std::move(members));
    }
    return OrientedHypergraph(h.vertices(), std::move(edges));
}

std::optional<Bipartition> bipartition(const OrientedHypergraph& h)
{
    h.require_valid();
    const std::size_t n = h.num_vertices();
    // side[v] == 0 for the part holding the inputs of the component root.
    std::vector<int> side(n, -1);
    for (std::size_t root = 0; root < n; ++root) {
        if (side[root] != -1)
            continue;
        const auto root_sign = h.edge(h.incident_edges(root).front()).sign_of(root);
        side[root] = (*root_sign == Sign::Input) ? 0 : 1;
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t e : h.incident_edges(v)) {
                const Sign sv = *h.edge(e).sign_of(v);
                for (const auto& inc : h.edge(e).members()) {
                    // Co-oriented members share v's side, anti-oriented members take the other.
                    const int want = inc.sign == sv ? side[v] : 1 - side[v];
                    if (side[inc.vertex] == -1) {
                        side[inc.vertex] = want;
                        stack.push_back(inc.vertex);
                    } else if (side[inc.vertex] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    Bipartition parts;
    for (std::size_t v = 0; v < n; ++v)
        (side[v] == 0 ? parts.first : parts.second).push_back(v);
    return parts;
}

bool is_bipartition(const OrientedHypergraph& h, const Bipartition& parts)
{
    std::vector<int> side(h.num_vertices(), -1);
    for (std::size_t v : parts.first)
        side.at(v) = 0;
    for (std::size_t v : parts.second) {
        if (side.at(v) != -1)
            return false;
        side[v] = 1;
    }
    if (std::find(side.begin(), side.end(), -1) != side.end())
        return false;
    for (const auto& e : h.edges()) {
        // Inputs all on one side, outputs all on the other.
        int input_side = -1;
        int output_side = -1;
        for (const auto& inc : e.members()) {
            int& slot = inc.sign == Sign::Input ? input_side : output_side;
            if (slot == -1)
                slot = side[inc.vertex];
            else if (slot != side[inc.vertex])
                return false;
        }
        if (input_side != -1 && input_side == output_side)
            return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> connected_components(const OrientedHypergraph& h)
{
    h.require_valid();
    const std::size_t n = h.num_vertices();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&parent](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const auto& e : h.edges()) {
        auto members = e.members();
        for (std::size_t i = 1; i < members.size(); ++i) {
            std::size_t a = find(members[0].vertex);
            std::size_t b = find(members[i].vertex);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < n; ++v)
        groups[find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace hyperspec
