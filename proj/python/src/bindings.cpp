#include <map>
#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspec/bounds.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/interchange.hpp"
#include "hyperspec/reports.hpp"
#include "hyperspec/spectral.hpp"

namespace py = pybind11;
using namespace hyperspec;

namespace {

// Reports are built as JSON on the C++ side and handed over as plain dicts.
py::object to_python(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

template <class T>
std::vector<std::vector<T>> rows_of(const Matrix<T>& m)
{
    std::vector<std::vector<T>> out(m.rows(), std::vector<T>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c);
    return out;
}

OrientedHypergraph checked(const OrientedHypergraph& h)
{
    h.require_valid();
    return h;
}

Coloring coloring_from(const OrientedHypergraph& h, const ColoringMode& mode, const std::vector<int>& colors)
{
    const Target t = target_of(mode);
    const std::size_t n = t == Target::Vertex ? h.num_vertices() : h.num_edges();
    if (colors.size() != n)
        throw DomainError("coloring has " + std::to_string(colors.size()) + " entries, expected " + std::to_string(n));
    return Coloring(t, colors);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Spectral bounds for coloring numbers of oriented hypergraphs";

    auto base = py::register_exception<Error>(m, "HyperspecError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SpecError>(m, "SpecError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ModeMismatch>(m, "ModeMismatch", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());

    py::class_<OrientedHypergraph>(m, "Hypergraph")
        .def(py::init([](std::vector<std::string> vertices, const std::vector<std::map<std::string, int>>& edges) {
                 std::map<std::string, std::size_t> index;
                 for (std::size_t i = 0; i < vertices.size(); ++i)
                     index.emplace(vertices[i], i);
                 std::vector<Edge> built;
                 for (const auto& e : edges) {
                     std::vector<Incidence> members;
                     for (const auto& [name, sign] : e) {
                         auto it = index.find(name);
                         if (it == index.end())
                             throw ParseError("unknown vertex '" + name + "'");
                         if (sign != -1 && sign != 1)
                             throw ParseError("sign of '" + name + "' must be -1 or 1");
                         members.push_back({it->second, sign < 0 ? Sign::Input : Sign::Output});
                     }
                     built.emplace_back(std::move(members));
                 }
                 return OrientedHypergraph(std::move(vertices), std::move(built));
             }),
             py::arg("vertices"), py::arg("edges"),
             "Edges map vertex names to -1 (input) or +1 (output).")
        .def_property_readonly("vertices", &OrientedHypergraph::vertices)
        .def_property_readonly("num_vertices", &OrientedHypergraph::num_vertices)
        .def_property_readonly("num_edges", &OrientedHypergraph::num_edges)
        .def_property_readonly("degrees", [](const OrientedHypergraph& h) { return h.degrees().values; })
        .def("edges", [](const OrientedHypergraph& h) {
            std::vector<std::map<std::string, int>> out;
            for (const auto& e : h.edges()) {
                std::map<std::string, int> members;
                for (const auto& inc : e.members())
                    members[h.vertices()[inc.vertex]] = to_int(inc.sign);
                out.push_back(std::move(members));
            }
            return out;
        })
        .def("is_valid", &OrientedHypergraph::is_valid)
        .def("validation_summary", [](const OrientedHypergraph& h) { return h.validation().summary(); })
        .def("canonical", &OrientedHypergraph::canonical)
        .def("__eq__", [](const OrientedHypergraph& a, const OrientedHypergraph& b) { return a == b; })
        .def("__repr__", [](const OrientedHypergraph& h) {
            return "<Hypergraph N=" + std::to_string(h.num_vertices()) + " M=" + std::to_string(h.num_edges()) + ">";
        });

    m.def("parse", &parse, py::arg("text"));
    m.def("serialize", &serialize, py::arg("hypergraph"));
    m.def("generate", [](const std::string& spec) { return generate(parse_family_spec(spec)); }, py::arg("spec"),
          "Builds a family member from a spec such as 'hyperflower:c=3,p=2,k=2'.");
    m.def("closed_form_spectrum", [](const std::string& spec) { return closed_form_spectrum(parse_family_spec(spec)); },
          py::arg("spec"));
    m.def("expand_corpus",
          [](const std::string& text, int count, std::optional<std::uint64_t> seed) {
              std::vector<std::string> out;
              for (const auto& s : expand_corpus(text, count, seed))
                  out.push_back(to_string(s));
              return out;
          },
          py::arg("text"), py::arg("count") = 1, py::arg("seed") = py::none());

    m.def("incidence", [](const OrientedHypergraph& h) { return rows_of(incidence(h)); });
    m.def("adjacency", [](const OrientedHypergraph& h) { return rows_of(adjacency(h)); });
    m.def("kirchhoff", [](const OrientedHypergraph& h) { return rows_of(kirchhoff(checked(h))); });

    m.def("vertex_spectrum",
          [](const OrientedHypergraph& h) { return to_python(spectrum_json(h, vertex_spectrum(h), false)); },
          py::arg("hypergraph"));
    m.def("edge_spectrum",
          [](const OrientedHypergraph& h) { return to_python(spectrum_json(h, edge_spectrum(h), true)); },
          py::arg("hypergraph"));
    m.def("vertex_eigenvalues", [](const OrientedHypergraph& h) { return vertex_spectrum(h).eigenvalues; });
    m.def("edge_eigenvalues", [](const OrientedHypergraph& h) { return edge_spectrum(h).eigenvalues; });

    m.def("parse_mode", [](const std::string& text) { return to_string(parse_mode(text)); }, py::arg("text"),
          "Returns the normalised spelling of a mode string.");
    m.def("chromatic",
          [](const OrientedHypergraph& h, const std::string& mode, std::uint64_t budget) {
              const ColoringMode md = parse_mode(mode);
              return to_python(chromatic_json(h, chromatic(h, md, SolverOptions{budget}), md));
          },
          py::arg("hypergraph"), py::arg("mode") = "strong", py::arg("budget") = SolverOptions{}.node_budget);
    m.def("brute_force_chromatic",
          [](const OrientedHypergraph& h, const std::string& mode) { return brute_force_chromatic(h, parse_mode(mode)); },
          py::arg("hypergraph"), py::arg("mode") = "strong");
    m.def("is_valid_coloring",
          [](const OrientedHypergraph& h, const std::vector<int>& colors, const std::string& mode) {
              const ColoringMode md = parse_mode(mode);
              return is_valid(h, coloring_from(h, md, colors), md);
          },
          py::arg("hypergraph"), py::arg("colors"), py::arg("mode") = "strong");

    m.def("evaluate",
          [](const OrientedHypergraph& h, const std::string& mode, std::uint64_t budget, double sharp_tol) {
              EvaluateOptions options;
              options.solver.node_budget = budget;
              options.sharp_tol = sharp_tol;
              return to_python(bound_json(h, evaluate(h, parse_mode(mode), options)));
          },
          py::arg("hypergraph"), py::arg("mode") = "strong", py::arg("budget") = SolverOptions{}.node_budget,
          py::arg("sharp_tol") = tol::kSharp);
    m.def("check_sharpness",
          [](const OrientedHypergraph& h, const std::vector<int>& colors, const std::string& mode, double sharp_tol) {
              const ColoringMode md = parse_mode(mode);
              return to_python(sharpness_json(check_sharpness(h, coloring_from(h, md, colors), md, sharp_tol)));
          },
          py::arg("hypergraph"), py::arg("colors"), py::arg("mode") = "strong", py::arg("sharp_tol") = tol::kSharp,
          "colors[i] in 1..k for each vertex (or edge, in edge mode).");

    m.def("bound_general", &bound_general, py::arg("lambda1"), py::arg("lambdaN"));
    m.def("bound_d_proper", &bound_d_proper, py::arg("c"), py::arg("lambda1"), py::arg("d"));
    m.def("bound_q_tailored",
          [](int c, double lambda1, const std::string& q) { return bound_q_tailored(c, lambda1, Rational::parse(q)); },
          py::arg("c"), py::arg("lambda1"), py::arg("q"));
    m.def("bound_d_improper", &bound_d_improper, py::arg("lambdaN"), py::arg("d"), py::arg("average_degree"));
    m.def("bound_edge", &bound_edge, py::arg("c"), py::arg("mu1"), py::arg("average_degree"));
}
