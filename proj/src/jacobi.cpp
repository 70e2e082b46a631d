#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyperspec/error.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec {

namespace {

double off_diagonal_norm(const RealMatrix& a)
{
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                s += a(i, j) * a(i, j);
    return std::sqrt(s);
}

// Symmetric Schur rotation annihilating a(p, q), applied as A <- J^T A J, V <- V J.
void rotate(RealMatrix& a, RealMatrix& v, std::size_t p, std::size_t q)
{
    const double apq = a(p, q);
    if (apq == 0.0)
        return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const std::size_t n = a.rows();

    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = c * vkp - s * vkq;
        v(k, q) = s * vkp + c * vkq;
    }
}

} // namespace

SpectralResult eigen_symmetric(const RealMatrix& s, double cluster_tol)
{
    if (s.rows() != s.cols())
        throw DomainError("eigen_symmetric: matrix is not square");
    if (!s.is_symmetric(tol::kSymmetry))
        throw DomainError("eigen_symmetric: matrix is not symmetric within 1e-12");

    const std::size_t n = s.rows();
    RealMatrix a = s;
    // Use the exact symmetric part so rotations see a symmetric matrix.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = m;
            a(j, i) = m;
        }
    RealMatrix v = RealMatrix::identity(n);

    const double threshold = tol::kJacobi * frobenius_norm(a);
    int sweep = 0;
    while (off_diagonal_norm(a) >= threshold && threshold > 0.0) {
        if (sweep++ >= tol::kJacobiSweepCap)
            throw ConvergenceError("eigen_symmetric: no convergence after 100 Jacobi sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) { return a(x, x) < a(y, y); });

    SpectralResult out;
    out.eigenvalues.reserve(n);
    out.eigenvectors.reserve(n);
    for (std::size_t idx : order) {
        out.eigenvalues.push_back(a(idx, idx));
        std::vector<double> vec(n);
        for (std::size_t k = 0; k < n; ++k)
            vec[k] = v(k, idx);
        out.eigenvectors.push_back(std::move(vec));
    }
    for (auto& vec : out.eigenvectors) {
        // First entry of maximal magnitude is made positive.
        std::size_t best = 0;
        for (std::size_t k = 1; k < vec.size(); ++k)
            if (std::abs(vec[k]) > std::abs(vec[best]))
                best = k;
        if (!vec.empty() && vec[best] < 0.0)
            for (double& x : vec)
                x = -x;
    }
    out.clusters = cluster_eigenvalues(out.eigenvalues, cluster_tol);
    return out;
}

} // namespace hyperspec
