#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperspec/hypergraph.hpp"
#include "hyperspec/matrix.hpp"
#include "hyperspec/tolerances.hpp"

namespace hyperspec {

// Real function on vertices (length N) or on edges (length M).
using VertexFunction = std::vector<double>;
using EdgeFunction = std::vector<double>;

struct Cluster {
    double value;
    std::size_t multiplicity;
};

struct SpectralResult {
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<double>> eigenvectors;  // eigenvectors[i] pairs with eigenvalues[i]
    std::vector<Cluster> clusters;                  // ascending representatives

    std::size_t dimension() const { return eigenvalues.size(); }
    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
    // Eigenvalues not exceeding tol::kZero in magnitude.
    std::size_t zero_count() const;
    std::vector<double> nonzero() const;
};

// K = I I^T, exact.
IntMatrix kirchhoff(const OrientedHypergraph& h);

// L = D^{-1} K = Id - D^{-1} A.
RealMatrix normalized_laplacian(const OrientedHypergraph& h);

// L^1 = I^T D^{-1} I, symmetric M x M.
RealMatrix edge_laplacian(const OrientedHypergraph& h);

// Groups ascending values; a value joins the current cluster while it stays within
// tol * max(1, |start|) of the cluster's first value. Representatives are cluster means,
// snapped to 0 below tol::kZero.
std::vector<Cluster> cluster_eigenvalues(std::span<const double> ascending, double tol = tol::kCluster);

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Eigenvalues ascending,
// eigenvectors orthonormal with their largest-magnitude entry positive.
// Throws DomainError for non-square / non-symmetric input and ConvergenceError past the sweep cap.
SpectralResult eigen_symmetric(const RealMatrix& s, double cluster_tol = tol::kCluster);

// Spectrum of L via D^{-1/2} K D^{-1/2}; eigenvectors mapped back so that L f = lambda f.
SpectralResult vertex_spectrum(const OrientedHypergraph& h, double cluster_tol = tol::kCluster);

// Spectrum of the edge Laplacian.
SpectralResult edge_spectrum(const OrientedHypergraph& h, double cluster_tol = tol::kCluster);

// <Lf, f> / <f, f> with <f, g> = sum_v deg v f(v) g(v), from the edge-sum formula
// sum_e (sum_{inputs} f - sum_{outputs} f)^2 / sum_v deg v f(v)^2. Throws DomainError for f = 0.
double rayleigh_quotient(const OrientedHypergraph& h, std::span<const double> f);
// Same quotient through the assembled matrix L.
double rayleigh_quotient_matrix(const OrientedHypergraph& h, std::span<const double> f);

// sum_v (1/deg v)(sum_{e ni v, input} g(e) - sum_{e ni v, output} g(e))^2 / sum_e g(e)^2.
double edge_rayleigh_quotient(const OrientedHypergraph& h, std::span<const double> gamma);
double edge_rayleigh_quotient_matrix(const OrientedHypergraph& h, std::span<const double> gamma);

// ||L f - lambda f||_inf, and the edge-Laplacian counterpart.
double eigen_residual(const OrientedHypergraph& h, std::span<const double> f, double lambda);
double edge_eigen_residual(const OrientedHypergraph& h, std::span<const double> gamma, double mu);

// ||L f - lambda f||_inf <= tol * max(1, ||f||_inf). Throws DomainError for f = 0.
bool is_eigenfunction(const OrientedHypergraph& h, std::span<const double> f, double lambda,
                      double tol = tol::kEigenpair);
bool is_edge_eigenfunction(const OrientedHypergraph& h, std::span<const double> gamma, double mu,
                           double tol = tol::kEigenpair);

// Size of the cluster whose representative lies within tol * max(1, |lambda|) of lambda; 0 if none.
std::size_t multiplicity(const SpectralResult& spec, double lambda, double tol = tol::kCluster);

// sum lambda_i = N within 1e-8 * N.
bool trace_check(const SpectralResult& vertex_spec, std::size_t n);

struct ConsistencyReport {
    std::size_t zero_vertex = 0;  // m_V
    std::size_t zero_edge = 0;    // m_E
    std::size_t num_vertices = 0;
    std::size_t num_edges = 0;
    bool multiplicity_identity = false;  // m_V - m_E == N - M
    bool nonzero_match = false;          // nonzero spectra agree as multisets
    double max_nonzero_difference = 0.0;

    bool pass() const { return multiplicity_identity && nonzero_match; }
};

// Compares the spectra of L and L^1.
ConsistencyReport spectra_consistency(const OrientedHypergraph& h);

} // namespace hyperspec
