#include "hyperspec/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "bound_scope.hpp"
#include "hyperspec/detail/overloaded.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

using detail::overloaded;

bool general_convention(double lambda1, double lambdaN)
{
    return std::abs(lambda1 - 1.0) <= tol::kConvention && std::abs(lambdaN - 1.0) <= tol::kConvention;
}

bool edge_convention(int c, double mu1, double average_degree)
{
    const double ratio = static_cast<double>(c) / average_degree;
    return std::abs(mu1 - ratio) <= tol::kConvention * std::max(1.0, ratio);
}

double bound_general(double lambda1, double lambdaN)
{
    if (lambda1 > lambdaN + tol::kConvention)
        throw DomainError("bound_general: lambda_1 exceeds lambda_N");
    if (general_convention(lambda1, lambdaN))
        return 1.0;
    const double denominator = std::min(lambdaN - 1.0, 1.0 - lambda1);
    if (denominator <= 0.0)
        throw DomainError("bound_general: min{lambda_N - 1, 1 - lambda_1} is not positive");
    return (lambdaN - lambda1) / denominator;
}

double bound_uniform_strong(int c, double lambda1)
{
    if (lambda1 >= 1.0)
        throw DomainError("bound_uniform_strong: needs lambda_1 < 1");
    return (c - lambda1) / (1.0 - lambda1);
}

double bound_d_proper(int c, double lambda1, int d)
{
    if (d < 1 || d > c - 1)
        throw DomainError("bound_d_proper: needs 1 <= d <= c - 1, got d = " + std::to_string(d) + ", c = "
                          + std::to_string(c));
    if (lambda1 >= d)
        throw DomainError("bound_d_proper: needs lambda_1 < d");
    return (c - lambda1) / (d - lambda1);
}

double bound_q_tailored(int c, double lambda1, const Rational& q)
{
    if (q < Rational(0) || Rational(c - 1) < q)
        throw DomainError("bound_q_tailored: needs 0 <= q <= c - 1, got q = " + q.to_string());
    const double q1 = q.to_double() + 1.0;
    if (lambda1 >= q1)
        throw DomainError("bound_q_tailored: needs lambda_1 < q + 1");
    return (c - lambda1) / (q1 - lambda1);
}

double bound_d_improper(double lambdaN, int d, double average_degree)
{
    if (d < 0)
        throw DomainError("bound_d_improper: needs d >= 0");
    if (average_degree <= 0.0)
        throw DomainError("bound_d_improper: needs a positive average degree");
    const double denominator = lambdaN - 1.0 + d / average_degree;
    if (denominator <= 0.0)
        throw DomainError("bound_d_improper: lambda_N - 1 + d / avg deg is not positive");
    return lambdaN / denominator;
}

double bound_edge(int c, double mu1, double average_degree)
{
    if (average_degree <= 0.0)
        throw DomainError("bound_edge: needs a positive average degree");
    if (edge_convention(c, mu1, average_degree))
        return 1.0;
    const double denominator = c / average_degree - mu1;
    if (denominator <= 0.0)
        throw DomainError("bound_edge: mu_1 exceeds c / avg deg");
    return (c - mu1) / denominator;
}

std::string to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::General: return "general";
    case BoundKind::DProper: return "d-proper";
    case BoundKind::QTailored: return "q-tailored";
    case BoundKind::DImproper: return "d-improper";
    case BoundKind::Edge: return "edge";
    }
    return "unknown";
}

BoundKind bound_kind_of(const ColoringMode& mode)
{
    return std::visit(overloaded{
                          [](const Strong&) { return BoundKind::General; },
                          [](const DProper&) { return BoundKind::DProper; },
                          [](const QTailored&) { return BoundKind::QTailored; },
                          [](const DImproper&) { return BoundKind::DImproper; },
                          [](const EdgeStrong&) { return BoundKind::Edge; },
                      },
                      mode);
}

int detail::bound_scope(const OrientedHypergraph& h, const ColoringMode& mode)
{
    check_mode_applicable(h, mode);
    const auto uniform = is_uniform(h);
    const int c = uniform && is_all_inputs(h) ? *uniform : 0;
    std::visit(overloaded{
                   [](const Strong&) {},
                   [c](const DProper& m) {
                       if (c == 0)
                           throw ModeMismatch("the d-proper bound needs a c-uniform hypergraph with all inputs");
                       if (m.d > c - 1)
                           throw ModeMismatch("the d-proper bound needs 1 <= d <= c - 1, got d = "
                                              + std::to_string(m.d) + ", c = " + std::to_string(c));
                   },
                   [](const QTailored&) {},
                   [](const DImproper&) {},
                   [c](const EdgeStrong&) {
                       if (c == 0)
                           throw ModeMismatch("the edge bound needs a c-uniform hypergraph with all inputs");
                   },
               },
               mode);
    return c;
}

bool BoundReport::sound(double tol) const
{
    return !exact || value <= *exact + tol;
}

BoundReport evaluate(const OrientedHypergraph& h, const ColoringMode& mode, const EvaluateOptions& options)
{
    const int c = detail::bound_scope(h, mode);
    BoundReport r;
    r.kind = bound_kind_of(mode);
    r.mode = mode;

    const SpectralResult vs = vertex_spectrum(h);
    const double lambda1 = vs.min();
    const double lambdaN = vs.max();
    const double avg = h.degrees().average();

    switch (r.kind) {
    case BoundKind::General:
        r.inputs.lambda1 = lambda1;
        r.inputs.lambdaN = lambdaN;
        if (c > 0)
            r.inputs.c = c;
        r.convention = general_convention(lambda1, lambdaN);
        r.value = bound_general(lambda1, lambdaN);
        break;
    case BoundKind::DProper: {
        const int d = std::get<DProper>(mode).d;
        r.inputs.lambda1 = lambda1;
        r.inputs.c = c;
        r.inputs.d = d;
        r.value = bound_d_proper(c, lambda1, d);
        break;
    }
    case BoundKind::QTailored: {
        const Rational q = std::get<QTailored>(mode).q;
        r.inputs.lambda1 = lambda1;
        r.inputs.c = c;
        r.inputs.q = q;
        r.value = bound_q_tailored(c, lambda1, q);
        break;
    }
    case BoundKind::DImproper: {
        const int d = std::get<DImproper>(mode).d;
        r.inputs.lambdaN = lambdaN;
        r.inputs.d = d;
        r.inputs.average_degree = avg;
        r.value = bound_d_improper(lambdaN, d, avg);
        break;
    }
    case BoundKind::Edge: {
        const SpectralResult es = edge_spectrum(h);
        const double mu1 = es.min();
        r.inputs.mu1 = mu1;
        r.inputs.c = c;
        r.inputs.average_degree = avg;
        r.convention = edge_convention(c, mu1, avg);
        r.value = bound_edge(c, mu1, avg);
        break;
    }
    }

    if (options.known_chromatic) {
        r.status = SolveStatus::Solved;
        r.exact = options.known_chromatic;
        r.lower_bound = r.upper_bound = *options.known_chromatic;
    }
    else {
        ChromaticResult solved = chromatic(h, mode, options.solver);
        r.status = solved.status;
        r.exact = solved.number;
        r.lower_bound = solved.lower_bound;
        r.upper_bound = solved.upper_bound;
        r.witness = std::move(solved.witness);
    }
    if (r.exact) {
        r.gap = *r.exact - r.value;
        r.sharp = std::abs(*r.gap) <= options.sharp_tol;
    }
    return r;
}

namespace {

void require_class(const Coloring& coloring, int i)
{
    if (i < 1 || i > coloring.num_colors())
        throw DomainError("class index " + std::to_string(i) + " outside 1.." + std::to_string(coloring.num_colors()));
}

} // namespace

double s_quantity(const OrientedHypergraph& h, std::span<const double> f, const Coloring& coloring, int i, int j)
{
    require_class(coloring, i);
    require_class(coloring, j);
    if (coloring.target() != Target::Vertex || coloring.size() != h.num_vertices())
        throw DomainError("s_quantity: needs a vertex coloring of h");
    if (f.size() != h.num_vertices())
        throw DomainError("s_quantity: function has dimension " + std::to_string(f.size()) + ", expected "
                          + std::to_string(h.num_vertices()));
    const IntMatrix a = adjacency(h);
    double s = 0.0;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        if (coloring.color(v) != i)
            continue;
        for (std::size_t w = 0; w < h.num_vertices(); ++w)
            if (coloring.color(w) == j)
                s += static_cast<double>(a(v, w)) * f[v] * f[w];
    }
    return s;
}

std::vector<double> indicator(const Coloring& coloring, int i, int j)
{
    require_class(coloring, i);
    require_class(coloring, j);
    if (i == j)
        throw DomainError("indicator: class indices must differ");
    std::vector<double> g(coloring.size(), 0.0);
    for (std::size_t item = 0; item < coloring.size(); ++item) {
        if (coloring.color(item) == i)
            g[item] = 1.0;
        else if (coloring.color(item) == j)
            g[item] = -1.0;
    }
    return g;
}

std::size_t class_edge_count(const OrientedHypergraph& h, std::size_t v, std::span<const std::size_t> vertex_class)
{
    std::size_t count = 0;
    for (std::size_t e : h.incident_edges(v)) {
        const Edge& edge = h.edge(e);
        if (std::any_of(vertex_class.begin(), vertex_class.end(), [&edge](std::size_t w) { return edge.contains(w); }))
            ++count;
    }
    return count;
}

} // namespace hyperspec
