#include "hyperspec/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

double sup_norm(std::span<const double> f)
{
    double m = 0.0;
    for (double x : f)
        m = std::max(m, std::abs(x));
    return m;
}

void require_dimension(std::span<const double> f, std::size_t n, const char* what)
{
    if (f.size() != n)
        throw DomainError(std::string(what) + ": function has dimension " + std::to_string(f.size())
                          + ", expected " + std::to_string(n));
}

} // namespace

std::size_t SpectralResult::zero_count() const
{
    return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                                  [](double x) { return std::abs(x) <= tol::kZero; }));
}

std::vector<double> SpectralResult::nonzero() const
{
    std::vector<double> out;
    for (double x : eigenvalues)
        if (std::abs(x) > tol::kZero)
            out.push_back(x);
    return out;
}

IntMatrix kirchhoff(const OrientedHypergraph& h)
{
    const IntMatrix inc = incidence(h);
    return inc * inc.transposed();
}

RealMatrix normalized_laplacian(const OrientedHypergraph& h)
{
    const IntMatrix k = kirchhoff(h);
    RealMatrix l(k.rows(), k.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        const double deg = static_cast<double>(h.degree(i));
        for (std::size_t j = 0; j < k.cols(); ++j)
            l(i, j) = static_cast<double>(k(i, j)) / deg;
    }
    return l;
}

RealMatrix edge_laplacian(const OrientedHypergraph& h)
{
    h.require_valid();
    const std::size_t m = h.num_edges();
    RealMatrix l1(m, m);
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        const double inv_deg = 1.0 / static_cast<double>(h.degree(v));
        const auto edges = h.incident_edges(v);
        for (std::size_t e : edges)
            for (std::size_t f : edges)
                l1(e, f) += h.orientation(v, e) * h.orientation(v, f) * inv_deg;
    }
    return l1;
}

std::vector<Cluster> cluster_eigenvalues(std::span<const double> ascending, double tol)
{
    std::vector<Cluster> out;
    std::size_t i = 0;
    while (i < ascending.size()) {
        const double start = ascending[i];
        const double width = tol * std::max(1.0, std::abs(start));
        double sum = 0.0;
        std::size_t j = i;
        while (j < ascending.size() && ascending[j] - start <= width)
            sum += ascending[j++];
        double rep = sum / static_cast<double>(j - i);
        if (std::abs(rep) <= tol::kZero)
            rep = 0.0;
        out.push_back({rep, j - i});
        i = j;
    }
    return out;
}

SpectralResult vertex_spectrum(const OrientedHypergraph& h, double cluster_tol)
{
    const IntMatrix k = kirchhoff(h);
    const std::size_t n = k.rows();
    std::vector<double> inv_sqrt(n);
    for (std::size_t i = 0; i < n; ++i)
        inv_sqrt[i] = 1.0 / std::sqrt(static_cast<double>(h.degree(i)));

    RealMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s(i, j) = static_cast<double>(k(i, j)) * inv_sqrt[i] * inv_sqrt[j];

    SpectralResult spec = eigen_symmetric(s, cluster_tol);
    // u -> D^{-1/2} u keeps the sign of every entry, so the orientation rule survives only
    // up to which entry is largest; reapply it on the mapped vector.
    for (auto& vec : spec.eigenvectors) {
        for (std::size_t i = 0; i < n; ++i)
            vec[i] *= inv_sqrt[i];
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(vec[i]) > std::abs(vec[best]))
                best = i;
        if (n > 0 && vec[best] < 0.0)
            for (double& x : vec)
                x = -x;
    }
    return spec;
}

SpectralResult edge_spectrum(const OrientedHypergraph& h, double cluster_tol)
{
    return eigen_symmetric(edge_laplacian(h), cluster_tol);
}

double rayleigh_quotient(const OrientedHypergraph& h, std::span<const double> f)
{
    h.require_valid();
    require_dimension(f, h.num_vertices(), "rayleigh_quotient");
    double numerator = 0.0;
    for (const auto& e : h.edges()) {
        double flow = 0.0;
        for (const auto& inc : e.members())
            flow += inc.sign == Sign::Input ? f[inc.vertex] : -f[inc.vertex];
        numerator += flow * flow;
    }
    double denominator = 0.0;
    for (std::size_t v = 0; v < f.size(); ++v)
        denominator += static_cast<double>(h.degree(v)) * f[v] * f[v];
    if (denominator == 0.0)
        throw DomainError("rayleigh_quotient: zero function");
    return numerator / denominator;
}

double rayleigh_quotient_matrix(const OrientedHypergraph& h, std::span<const double> f)
{
    require_dimension(f, h.num_vertices(), "rayleigh_quotient_matrix");
    const RealMatrix l = normalized_laplacian(h);
    const std::vector<double> lf = mat_vec(l, f);
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t v = 0; v < f.size(); ++v) {
        const double deg = static_cast<double>(h.degree(v));
        numerator += deg * lf[v] * f[v];
        denominator += deg * f[v] * f[v];
    }
    if (denominator == 0.0)
        throw DomainError("rayleigh_quotient_matrix: zero function");
    return numerator / denominator;
}

double edge_rayleigh_quotient(const OrientedHypergraph& h, std::span<const double> gamma)
{
    h.require_valid();
    require_dimension(gamma, h.num_edges(), "edge_rayleigh_quotient");
    double numerator = 0.0;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        double flow = 0.0;
        for (std::size_t e : h.incident_edges(v))
            flow += h.orientation(v, e) < 0 ? gamma[e] : -gamma[e];
        numerator += flow * flow / static_cast<double>(h.degree(v));
    }
    double denominator = 0.0;
    for (double g : gamma)
        denominator += g * g;
    if (denominator == 0.0)
        throw DomainError("edge_rayleigh_quotient: zero function");
    return numerator / denominator;
}

double edge_rayleigh_quotient_matrix(const OrientedHypergraph& h, std::span<const double> gamma)
{
    require_dimension(gamma, h.num_edges(), "edge_rayleigh_quotient_matrix");
    const RealMatrix l1 = edge_laplacian(h);
    const std::vector<double> lg = mat_vec(l1, gamma);
    double numerator = 0.0;
    double denominator = 0.0;
    for (std::size_t e = 0; e < gamma.size(); ++e) {
        numerator += lg[e] * gamma[e];
        denominator += gamma[e] * gamma[e];
    }
    if (denominator == 0.0)
        throw DomainError("edge_rayleigh_quotient_matrix: zero function");
    return numerator / denominator;
}

double eigen_residual(const OrientedHypergraph& h, std::span<const double> f, double lambda)
{
    require_dimension(f, h.num_vertices(), "eigen_residual");
    const std::vector<double> lf = mat_vec(normalized_laplacian(h), f);
    double r = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        r = std::max(r, std::abs(lf[i] - lambda * f[i]));
    return r;
}

double edge_eigen_residual(const OrientedHypergraph& h, std::span<const double> gamma, double mu)
{
    require_dimension(gamma, h.num_edges(), "edge_eigen_residual");
    const std::vector<double> lg = mat_vec(edge_laplacian(h), gamma);
    double r = 0.0;
    for (std::size_t i = 0; i < gamma.size(); ++i)
        r = std::max(r, std::abs(lg[i] - mu * gamma[i]));
    return r;
}

bool is_eigenfunction(const OrientedHypergraph& h, std::span<const double> f, double lambda, double tol)
{
    const double norm = sup_norm(f);
    if (norm == 0.0)
        throw DomainError("is_eigenfunction: zero function");
    return eigen_residual(h, f, lambda) <= tol * std::max(1.0, norm);
}

bool is_edge_eigenfunction(const OrientedHypergraph& h, std::span<const double> gamma, double mu, double tol)
{
    const double norm = sup_norm(gamma);
    if (norm == 0.0)
        throw DomainError("is_edge_eigenfunction: zero function");
    return edge_eigen_residual(h, gamma, mu) <= tol * std::max(1.0, norm);
}

std::size_t multiplicity(const SpectralResult& spec, double lambda, double tol)
{
    const double width = tol * std::max(1.0, std::abs(lambda));
    for (const auto& c : spec.clusters)
        if (std::abs(c.value - lambda) <= width)
            return c.multiplicity;
    return 0;
}

bool trace_check(const SpectralResult& vertex_spec, std::size_t n)
{
    double sum = 0.0;
    for (double x : vertex_spec.eigenvalues)
        sum += x;
    return std::abs(sum - static_cast<double>(n)) <= 1e-8 * static_cast<double>(std::max<std::size_t>(n, 1));
}

ConsistencyReport spectra_consistency(const OrientedHypergraph& h)
{
    const SpectralResult vs = vertex_spectrum(h);
    const SpectralResult es = edge_spectrum(h);
    ConsistencyReport r;
    r.num_vertices = h.num_vertices();
    r.num_edges = h.num_edges();
    r.zero_vertex = vs.zero_count();
    r.zero_edge = es.zero_count();
    r.multiplicity_identity = static_cast<long long>(r.zero_vertex) - static_cast<long long>(r.zero_edge)
                              == static_cast<long long>(r.num_vertices) - static_cast<long long>(r.num_edges);
    const auto a = vs.nonzero();
    const auto b = es.nonzero();
    if (a.size() == b.size()) {
        r.nonzero_match = true;
        for (std::size_t i = 0; i < a.size(); ++i) {
            const double diff = std::abs(a[i] - b[i]);
            r.max_nonzero_difference = std::max(r.max_nonzero_difference, diff);
            if (diff > tol::kCluster * std::max(1.0, std::abs(a[i])))
                r.nonzero_match = false;
        }
    }
    return r;
}

} // namespace hyperspec
