#include "hyperspec/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "hyperspec/detail/overloaded.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

using detail::overloaded;

Coloring::Coloring(Target target, std::vector<int> colors)
    : target_(target), colors_(std::move(colors))
{
    k_ = colors_.empty() ? 0 : *std::max_element(colors_.begin(), colors_.end());
    std::vector<bool> used(static_cast<std::size_t>(std::max(k_, 0)) + 1, false);
    for (int c : colors_) {
        if (c < 1)
            throw DomainError("coloring: colors must lie in 1..k");
        used[static_cast<std::size_t>(c)] = true;
    }
    for (int c = 1; c <= k_; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw DomainError("coloring: color " + std::to_string(c) + " of 1.." + std::to_string(k_) + " is unused");
}

Coloring Coloring::normalized(Target target, const std::vector<int>& labels)
{
    std::map<int, int> relabel;
    std::vector<int> colors;
    colors.reserve(labels.size());
    for (int label : labels) {
        auto [it, inserted] = relabel.emplace(label, static_cast<int>(relabel.size()) + 1);
        colors.push_back(it->second);
    }
    return Coloring(target, std::move(colors));
}

Coloring Coloring::from_classes(Target target, std::size_t n, const std::vector<std::vector<std::size_t>>& classes)
{
    std::vector<int> colors(n, 0);
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t item : classes[i]) {
            if (item >= n)
                throw DomainError("coloring: class member out of range");
            if (colors[item] != 0)
                throw DomainError("coloring: item " + std::to_string(item) + " appears in two classes");
            colors[item] = static_cast<int>(i) + 1;
        }
    if (std::find(colors.begin(), colors.end(), 0) != colors.end())
        throw DomainError("coloring: classes do not cover every item");
    return Coloring(target, std::move(colors));
}

std::vector<std::vector<std::size_t>> Coloring::classes() const
{
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k_));
    for (std::size_t i = 0; i < colors_.size(); ++i)
        out[static_cast<std::size_t>(colors_[i] - 1)].push_back(i);
    return out;
}

Target target_of(const ColoringMode& mode)
{
    return std::holds_alternative<EdgeStrong>(mode) ? Target::Edge : Target::Vertex;
}

std::string mode_name(const ColoringMode& mode)
{
    return std::visit(overloaded{
                          [](const Strong&) { return std::string("strong"); },
                          [](const DProper&) { return std::string("d-proper"); },
                          [](const QTailored&) { return std::string("q-tailored"); },
                          [](const DImproper&) { return std::string("d-improper"); },
                          [](const EdgeStrong&) { return std::string("edge"); },
                      },
                      mode);
}

std::string to_string(const ColoringMode& mode)
{
    return std::visit(overloaded{
                          [](const Strong&) { return std::string("strong"); },
                          [](const DProper& m) { return "d-proper(" + std::to_string(m.d) + ")"; },
                          [](const QTailored& m) { return "q-tailored(" + m.q.to_string() + ")"; },
                          [](const DImproper& m) { return "d-improper(" + std::to_string(m.d) + ")"; },
                          [](const EdgeStrong&) { return std::string("edge"); },
                      },
                      mode);
}

namespace {

int parse_int_parameter(std::string_view name, std::string_view value)
{
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw SpecError("mode " + std::string(name) + ": parameter '" + std::string(value) + "' is not an integer");
    return out;
}

} // namespace

ColoringMode parse_mode(std::string_view text)
{
    std::string_view name = text;
    std::string_view param;
    bool has_param = false;
    if (const auto colon = text.find(':'); colon != std::string_view::npos) {
        name = text.substr(0, colon);
        param = text.substr(colon + 1);
        has_param = true;
    }
    else if (const auto open = text.find('('); open != std::string_view::npos && text.back() == ')') {
        name = text.substr(0, open);
        param = text.substr(open + 1, text.size() - open - 2);
        has_param = true;
    }

    if (name == "strong" || name == "edge") {
        if (has_param)
            throw SpecError("mode " + std::string(name) + " takes no parameter");
        if (name == "strong")
            return Strong{};
        return EdgeStrong{};
    }
    if (name != "d-proper" && name != "q-tailored" && name != "d-improper")
        throw SpecError("unknown coloring mode '" + std::string(text)
                        + "' (expected strong, d-proper, q-tailored, d-improper, edge)");
    if (!has_param || param.empty())
        throw SpecError("mode " + std::string(name) + " needs a parameter, e.g. " + std::string(name) + ":1");
    if (name == "q-tailored")
        return QTailored{Rational::parse(param)};
    const int value = parse_int_parameter(name, param);
    if (name == "d-proper")
        return DProper{value};
    return DImproper{value};
}

void check_mode_applicable(const OrientedHypergraph& h, const ColoringMode& mode)
{
    h.require_valid();
    std::visit(overloaded{
                   [](const Strong&) {},
                   [](const DProper& m) {
                       if (m.d < 1)
                           throw ModeMismatch("d-proper coloring needs d >= 1");
                   },
                   [&h](const QTailored& m) {
                       const auto c = is_uniform(h);
                       if (!c || !is_all_inputs(h))
                           throw ModeMismatch("q-tailored coloring needs a c-uniform hypergraph with all inputs");
                       if (m.q < Rational(0) || Rational(*c - 1) < m.q)
                           throw ModeMismatch("q-tailored coloring needs 0 <= q <= c - 1, got q = " + m.q.to_string());
                   },
                   [&h](const DImproper& m) {
                       if (!is_graph(h))
                           throw ModeMismatch("d-improper coloring needs a graph: 2-uniform, one input and one output per edge");
                       if (m.d < 0)
                           throw ModeMismatch("d-improper coloring needs d >= 0");
                   },
                   [](const EdgeStrong&) {},
               },
               mode);
}

bool is_valid(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode)
{
    check_mode_applicable(h, mode);
    const Target target = target_of(mode);
    if (coloring.target() != target)
        throw ModeMismatch("coloring target does not match mode " + to_string(mode));
    const std::size_t expected = target == Target::Vertex ? h.num_vertices() : h.num_edges();
    if (coloring.size() != expected)
        throw ModeMismatch("coloring covers " + std::to_string(coloring.size()) + " items, expected "
                           + std::to_string(expected));

    return std::visit(
        overloaded{
            [&](const Strong&) {
                for (const auto& e : h.edges()) {
                    std::set<int> seen;
                    for (const auto& inc : e.members())
                        if (!seen.insert(coloring.color(inc.vertex)).second)
                            return false;
                }
                return true;
            },
            [&](const DProper& m) {
                for (const auto& e : h.edges()) {
                    std::map<int, int> count;
                    for (const auto& inc : e.members())
                        if (++count[coloring.color(inc.vertex)] > m.d)
                            return false;
                }
                return true;
            },
            [&](const QTailored& m) {
                const IntMatrix a = adjacency(h);
                for (std::size_t v = 0; v < h.num_vertices(); ++v) {
                    int128 same = 0;
                    for (std::size_t w = 0; w < h.num_vertices(); ++w)
                        if (w != v && coloring.color(w) == coloring.color(v))
                            same += a(v, w) < 0 ? -a(v, w) : a(v, w);
                    if (same * m.q.den() > static_cast<int128>(m.q.num()) * h.degree(v))
                        return false;
                }
                return true;
            },
            [&](const DImproper& m) {
                std::vector<int> same(h.num_vertices(), 0);
                for (const auto& e : h.edges()) {
                    const std::size_t a = e.members()[0].vertex;
                    const std::size_t b = e.members()[1].vertex;
                    if (coloring.color(a) == coloring.color(b)) {
                        ++same[a];
                        ++same[b];
                    }
                }
                return std::all_of(same.begin(), same.end(), [&m](int s) { return s <= m.d; });
            },
            [&](const EdgeStrong&) {
                for (std::size_t e = 0; e < h.num_edges(); ++e)
                    for (std::size_t f = e + 1; f < h.num_edges(); ++f) {
                        if (coloring.color(e) != coloring.color(f))
                            continue;
                        for (const auto& inc : h.edge(e).members())
                            if (h.edge(f).contains(inc.vertex))
                                return false;
                    }
                return true;
            },
        },
        mode);
}

bool SimpleGraph::adjacent(std::size_t a, std::size_t b) const
{
    const auto& row = adjacency.at(a);
    return std::binary_search(row.begin(), row.end(), b);
}

std::size_t SimpleGraph::num_edges() const
{
    std::size_t twice = 0;
    for (const auto& row : adjacency)
        twice += row.size();
    return twice / 2;
}

SimpleGraph intersection_graph(const OrientedHypergraph& h)
{
    h.require_valid();
    std::vector<std::set<std::size_t>> adj(h.num_edges());
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        const auto edges = h.incident_edges(v);
        for (std::size_t a : edges)
            for (std::size_t b : edges)
                if (a != b)
                    adj[a].insert(b);
    }
    SimpleGraph g;
    for (auto& s : adj)
        g.adjacency.emplace_back(s.begin(), s.end());
    return g;
}

SimpleGraph primal_graph(const OrientedHypergraph& h)
{
    h.require_valid();
    std::vector<std::set<std::size_t>> adj(h.num_vertices());
    for (const auto& e : h.edges())
        for (const auto& x : e.members())
            for (const auto& y : e.members())
                if (x.vertex != y.vertex)
                    adj[x.vertex].insert(y.vertex);
    SimpleGraph g;
    for (auto& s : adj)
        g.adjacency.emplace_back(s.begin(), s.end());
    return g;
}

} // namespace hyperspec
