#include "hyperspec/reports.hpp"

#include <cmath>
#include <cstdio>

namespace hyperspec {

using nlohmann::json;

double rounded(double x)
{
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;  // no negative zero
}

namespace {

std::string csv_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", rounded(x));
    return buf;
}

} // namespace

std::string status_name(SolveStatus s)
{
    return s == SolveStatus::Solved ? "solved" : "inconclusive";
}

json consistency_json(const ConsistencyReport& r)
{
    return json{
        {"zero_multiplicity_vertex", r.zero_vertex},
        {"zero_multiplicity_edge", r.zero_edge},
        {"num_vertices", r.num_vertices},
        {"num_edges", r.num_edges},
        {"multiplicity_identity", r.multiplicity_identity},
        {"nonzero_match", r.nonzero_match},
        {"max_nonzero_difference", rounded(r.max_nonzero_difference)},
        {"pass", r.pass()},
    };
}

json spectrum_json(const OrientedHypergraph& h, const SpectralResult& spec, bool edge)
{
    json eigenvalues = json::array();
    for (double x : spec.eigenvalues)
        eigenvalues.push_back(rounded(x));
    json clusters = json::array();
    for (const auto& c : spec.clusters)
        clusters.push_back(json::array({rounded(c.value), c.multiplicity}));
    json out{
        {"which", edge ? "edge" : "vertex"},
        {"dimension", spec.dimension()},
        {"eigenvalues", eigenvalues},
        {"clusters", clusters},
        {"consistency", consistency_json(spectra_consistency(h))},
    };
    if (!edge)
        out["trace_check"] = trace_check(spec, h.num_vertices());
    return out;
}

json coloring_json(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode)
{
    json classes = json::array();
    for (const auto& cls : coloring.classes()) {
        json members = json::array();
        for (std::size_t item : cls) {
            if (coloring.target() == Target::Vertex)
                members.push_back(h.vertices()[item]);
            else
                members.push_back(item);
        }
        classes.push_back(members);
    }
    return json{{"mode", to_string(mode)}, {"k", coloring.num_colors()}, {"classes", classes}};
}

json chromatic_json(const OrientedHypergraph& h, const ChromaticResult& r, const ColoringMode& mode)
{
    json out{
        {"mode", to_string(mode)},
        {"status", status_name(r.status)},
        {"number", r.number ? json(*r.number) : json(nullptr)},
        {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound},
        {"nodes", r.nodes},
    };
    out["witness"] = r.witness ? coloring_json(h, *r.witness, mode) : json(nullptr);
    return out;
}

json bound_json(const OrientedHypergraph& h, const BoundReport& r)
{
    json inputs = json::object();
    if (r.inputs.lambda1)
        inputs["lambda1"] = rounded(*r.inputs.lambda1);
    if (r.inputs.lambdaN)
        inputs["lambdaN"] = rounded(*r.inputs.lambdaN);
    if (r.inputs.mu1)
        inputs["mu1"] = rounded(*r.inputs.mu1);
    if (r.inputs.c)
        inputs["c"] = *r.inputs.c;
    if (r.inputs.d)
        inputs["d"] = *r.inputs.d;
    if (r.inputs.q)
        inputs["q"] = r.inputs.q->to_string();
    if (r.inputs.average_degree)
        inputs["average_degree"] = rounded(*r.inputs.average_degree);

    json out{
        {"kind", to_string(r.kind)},
        {"mode", to_string(r.mode)},
        {"inputs", inputs},
        {"bound", rounded(r.value)},
        {"convention", r.convention},
        {"status", status_name(r.status)},
        {"exact", r.exact ? json(*r.exact) : json(nullptr)},
        {"lower_bound", r.lower_bound},
        {"upper_bound", r.upper_bound},
        {"gap", r.gap ? json(rounded(*r.gap)) : json(nullptr)},
        {"sharp", r.sharp ? json(*r.sharp) : json(nullptr)},
        {"sound", r.sound()},
    };
    out["witness"] = r.witness ? coloring_json(h, *r.witness, r.mode) : json(nullptr);
    return out;
}

json sharpness_json(const SharpnessReport& r)
{
    json conditions = json::array();
    for (const auto& c : r.conditions)
        conditions.push_back(json{
            {"name", c.name},
            {"pass", c.pass},
            {"observed", rounded(c.observed)},
            {"expected", rounded(c.expected)},
            {"detail", c.detail},
        });
    return json{
        {"kind", to_string(r.kind)},
        {"colors", r.colors},
        {"bound", rounded(r.bound)},
        {"pass", r.pass()},
        {"conditions", conditions},
    };
}

std::string csv_row(const std::string& id, const BoundReport& r)
{
    std::string first = r.inputs.lambda1 ? csv_number(*r.inputs.lambda1) : "";
    std::string second;
    if (r.kind == BoundKind::Edge)
        second = csv_number(r.inputs.mu1.value_or(0.0));
    else if (r.inputs.lambdaN)
        second = csv_number(*r.inputs.lambdaN);
    std::string row = id + "," + to_string(r.mode) + "," + first + "," + second + "," + csv_number(r.value) + ",";
    row += r.exact ? std::to_string(*r.exact) : "";
    row += ",";
    row += r.gap ? csv_number(*r.gap) : "";
    row += ",";
    row += r.sharp ? (*r.sharp ? "true" : "false") : "";
    row += "," + status_name(r.status);
    return row;
}

} // namespace hyperspec
